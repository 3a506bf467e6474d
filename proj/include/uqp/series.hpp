#pragma once

#include "uqp/scalar.hpp"

#include <optional>
#include <vector>

namespace uqp {

inline Scalar ring_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline std::optional<Scalar> ring_try_invert(const Scalar& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inv();
}

template <class R>
std::optional<R> ring_try_invert(const R& a) {
    return a.try_inverse();
}

template <class R>
R ring_unit(Scalar c) {
    if constexpr (std::is_same_v<R, Scalar>) return c;
    else return R::unit(std::move(c));
}

/// Degree-truncated formal power series in t over a coefficient ring R.
/// Arithmetic carries the minimum truncation of the operands; equality is
/// only meaningful up to the common truncation.
template <class R>
class Series1 {
public:
    explicit Series1(int trunc = 0) : c_(static_cast<std::size_t>(trunc) + 1) {
        if (trunc < 0) throw std::domain_error("Series1: negative truncation");
    }

    static Series1 constant(R a, int trunc) {
        Series1 s(trunc);
        s.c_[0] = std::move(a);
        return s;
    }
    static Series1 one(int trunc) { return constant(ring_unit<R>(Scalar(1)), trunc); }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
    R& coeff(int n) { return c_.at(static_cast<std::size_t>(n)); }

    bool is_zero() const {
        for (const R& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }
    /// Index of the first nonzero coefficient, or -1.
    int first_nonzero() const {
        for (int n = 0; n <= trunc(); ++n)
            if (!c_[static_cast<std::size_t>(n)].is_zero()) return n;
        return -1;
    }

    friend Series1 operator+(const Series1& a, const Series1& b) {
        Series1 r(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= r.trunc(); ++n) r.coeff(n) = a.coeff(n) + b.coeff(n);
        return r;
    }
    friend Series1 operator-(const Series1& a, const Series1& b) {
        Series1 r(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= r.trunc(); ++n) r.coeff(n) = a.coeff(n) - b.coeff(n);
        return r;
    }
    Series1 operator-() const {
        Series1 r(trunc());
        for (int n = 0; n <= trunc(); ++n) r.coeff(n) = -coeff(n);
        return r;
    }

    /// Cauchy product; the left factor's coefficients stay on the left.
    friend Series1 operator*(const Series1& a, const Series1& b) {
        Series1 r(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= r.trunc(); ++n) {
            R acc{};
            for (int i = 0; i <= n; ++i) {
                if (a.coeff(i).is_zero() || b.coeff(n - i).is_zero()) continue;
                acc = acc + ring_mul(a.coeff(i), b.coeff(n - i));
            }
            r.coeff(n) = std::move(acc);
        }
        return r;
    }

    friend Series1 operator*(const Scalar& c, const Series1& a) {
        Series1 r(a.trunc());
        for (int n = 0; n <= a.trunc(); ++n) r.coeff(n) = c * a.coeff(n);
        return r;
    }

    /// Two-sided inverse, defined when the constant term is invertible:
    /// b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{k=1}^n a_k b_{n-k}.
    Series1 inverse() const {
        std::optional<R> b0 = ring_try_invert(coeff(0));
        if (!b0)
            throw std::domain_error("Series1: constant term is not invertible");
        Series1 b(trunc());
        b.coeff(0) = *b0;
        for (int n = 1; n <= trunc(); ++n) {
            R acc{};
            for (int k = 1; k <= n; ++k) {
                if (coeff(k).is_zero() || b.coeff(n - k).is_zero()) continue;
                acc = acc + ring_mul(coeff(k), b.coeff(n - k));
            }
            b.coeff(n) = -ring_mul(*b0, acc);
        }
        return b;
    }

    /// a(ct): coefficient n is scaled by c^n.
    Series1 scale_arg(const Scalar& c) const {
        Series1 r(trunc());
        Scalar p(1);
        for (int n = 0; n <= trunc(); ++n) {
            r.coeff(n) = n == 0 ? coeff(0) : p * coeff(n);
            p *= c;
        }
        return r;
    }

    /// t^{-1} a(t), defined only when a_0 = 0; truncation drops by one.
    Series1 shift_down() const {
        if (!coeff(0).is_zero())
            throw std::domain_error("shift_down: nonzero constant term");
        if (trunc() == 0) return Series1(0);
        Series1 r(trunc() - 1);
        for (int n = 0; n < trunc(); ++n) r.coeff(n) = coeff(n + 1);
        return r;
    }

    /// t * a(t) at the same truncation (the top coefficient falls off).
    Series1 shift_up() const {
        Series1 r(trunc());
        for (int n = trunc(); n >= 1; --n) r.coeff(n) = coeff(n - 1);
        r.coeff(0) = R{};
        return r;
    }

    friend bool operator==(const Series1& a, const Series1& b) { return (a - b).is_zero(); }

private:
    std::vector<R> c_;
};

/// Truncated series in two commuting variables s, t; coefficients are kept
/// for total degree i + j <= trunc.
template <class R>
class Series2 {
public:
    explicit Series2(int trunc = 0)
        : n_(trunc), c_(static_cast<std::size_t>(trunc + 1) * static_cast<std::size_t>(trunc + 1)) {
        if (trunc < 0) throw std::domain_error("Series2: negative truncation");
    }

    int trunc() const { return n_; }
    const R& coeff(int i, int j) const { return c_.at(idx_(i, j)); }
    R& coeff(int i, int j) { return c_.at(idx_(i, j)); }

    static Series2 from_s(const Series1<R>& a, int trunc) {
        Series2 r(trunc);
        for (int i = 0; i <= std::min(trunc, a.trunc()); ++i) r.coeff(i, 0) = a.coeff(i);
        return r;
    }
    static Series2 from_t(const Series1<R>& a, int trunc) {
        Series2 r(trunc);
        for (int j = 0; j <= std::min(trunc, a.trunc()); ++j) r.coeff(0, j) = a.coeff(j);
        return r;
    }

    bool is_zero() const {
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; i + j <= n_; ++j)
                if (!coeff(i, j).is_zero()) return false;
        return true;
    }
    /// First (i,j) with a nonzero coefficient in graded-lex order, or (-1,-1).
    std::pair<int, int> first_nonzero() const {
        for (int d = 0; d <= n_; ++d)
            for (int i = 0; i <= d; ++i)
                if (!coeff(i, d - i).is_zero()) return {i, d - i};
        return {-1, -1};
    }

    friend Series2 operator+(const Series2& a, const Series2& b) {
        Series2 r(std::min(a.n_, b.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) r.coeff(i, j) = a.coeff(i, j) + b.coeff(i, j);
        return r;
    }
    friend Series2 operator-(const Series2& a, const Series2& b) {
        Series2 r(std::min(a.n_, b.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) r.coeff(i, j) = a.coeff(i, j) - b.coeff(i, j);
        return r;
    }
    Series2 operator-() const {
        Series2 r(n_);
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; i + j <= n_; ++j) r.coeff(i, j) = -coeff(i, j);
        return r;
    }

    friend Series2 operator*(const Series2& a, const Series2& b) {
        Series2 r(std::min(a.n_, b.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) {
                R acc{};
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        if (a.coeff(k, l).is_zero() || b.coeff(i - k, j - l).is_zero()) continue;
                        acc = acc + ring_mul(a.coeff(k, l), b.coeff(i - k, j - l));
                    }
                r.coeff(i, j) = std::move(acc);
            }
        return r;
    }

    friend Series2 operator*(const Scalar& c, const Series2& a) {
        Series2 r(a.n_);
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) r.coeff(i, j) = c * a.coeff(i, j);
        return r;
    }

    /// Multiplication by s (resp. t); top-degree coefficients fall off.
    Series2 mul_s() const {
        Series2 r(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 0; i + j <= n_; ++j) r.coeff(i, j) = coeff(i - 1, j);
        return r;
    }
    Series2 mul_t() const {
        Series2 r(n_);
        for (int j = 1; j <= n_; ++j)
            for (int i = 0; i + j <= n_; ++i) r.coeff(i, j) = coeff(i, j - 1);
        return r;
    }

    friend bool operator==(const Series2& a, const Series2& b) { return (a - b).is_zero(); }

private:
    std::size_t idx_(int i, int j) const {
        if (i < 0 || j < 0 || i + j > n_) throw std::out_of_range("Series2 coefficient");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
               static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<R> c_;
};

/// (a(s) - a(t))/(s - t), computed exactly: the (i,j) coefficient is
/// a_{i+j+1}.  Truncation drops by one.
template <class R>
Series2<R> divided_difference(const Series1<R>& a) {
    int n = std::max(a.trunc() - 1, 0);
    Series2<R> r(n);
    if (a.trunc() == 0) return r;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.coeff(i, j) = a.coeff(i + j + 1);
    return r;
}

template <class R>
bool series2_check_zero(const Series2<R>& a) {
    return a.is_zero();
}

}  // namespace uqp
