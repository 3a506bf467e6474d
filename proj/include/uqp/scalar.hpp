#pragma once

#include "uqp/laurent.hpp"

namespace uqp {

/// Element of Q(q): a reduced fraction of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial (lowest
/// exponent 0) with positive leading coefficient, coprime to the numerator
/// both as a polynomial and in integer content.  Equality of scalars is
/// equality of canonical forms.
class Scalar {
public:
    Scalar() : den_(LaurentPoly::one()) {}
    Scalar(long c) : num_(c), den_(LaurentPoly::one()) {}
    Scalar(Int c) : num_(std::move(c)), den_(LaurentPoly::one()) {}
    Scalar(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce_();
    }

    static Scalar q_power(int e) { return Scalar(LaurentPoly::q_power(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.is_laurent() && b.is_laurent()) {
            Scalar r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

    Scalar inv() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        return Scalar(den_, num_);
    }

    Scalar pow(int n) const {
        if (n < 0) return inv().pow(-n);
        Scalar r(1);
        Scalar b = *this;
        unsigned m = static_cast<unsigned>(n);
        while (m) {
            if (m & 1) r *= b;
            b = (m >>= 1) ? b * b : b;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Spot evaluation at a rational value of q (debugging aid only; not
    /// used by any verification path).
    Rational evaluate(const Rational& q) const {
        Rational d = den_.evaluate(q);
        if (d == 0) throw std::domain_error("Scalar: denominator vanishes at this q");
        return num_.evaluate(q) / d;
    }

    std::string to_string() const;

private:
    void reduce_() {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        if (num_.is_zero()) { den_ = LaurentPoly::one(); return; }
        // move the q-power parts entirely into the numerator
        num_.shift(-den_.low());
        den_.shift(-den_.low());
        if (!den_.is_monomial()) {
            LaurentPoly g = gcd(num_, den_);
            if (!g.is_unit()) {
                num_ = divexact(num_, g);
                den_ = divexact(den_, g);
            }
        }
        Int cn = num_.content();
        Int cd = den_.content();
        Int g0 = boost::multiprecision::gcd(cn, cd);
        if (g0 > 1) {
            num_.divide_content(g0);
            den_.divide_content(g0);
        }
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

/// [n]_q = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n).
inline Scalar q_integer(long n) {
    if (n < 0) throw std::domain_error("q_integer: negative argument");
    LaurentPoly p;
    for (long k = 0; k < n; ++k)
        p += LaurentPoly::q_power(static_cast<int>(n - 1 - 2 * k));
    return Scalar(std::move(p));
}

/// q - q^-1, the bracket that pervades every relation here.
inline Scalar q_bracket() {
    return Scalar(LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
}

/// xi = -q^2 (q - q^-1)^{-2}.
inline Scalar xi() {
    Scalar b = q_bracket();
    return Scalar(LaurentPoly::monomial(-1, 2)) * (b * b).inv();
}

}  // namespace uqp
