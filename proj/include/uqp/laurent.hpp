#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely over the exponent range [low, low + size).  Invariant:
/// the first and last stored coefficients are nonzero; the zero polynomial
/// has an empty coefficient vector and low == 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) { low_ = 0; c_.emplace_back(c); } }
    LaurentPoly(Int c) { if (c != 0) { low_ = 0; c_.push_back(std::move(c)); } }

    static LaurentPoly monomial(Int c, int exp) {
        LaurentPoly p;
        if (c != 0) { p.low_ = exp; p.c_.push_back(std::move(c)); }
        return p;
    }
    static LaurentPoly q_power(int exp) { return monomial(1, exp); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
    /// Single term c*q^e.
    bool is_monomial() const { return c_.size() == 1; }
    /// Unit of the Laurent ring over Z: +-q^e.
    bool is_unit() const { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }

    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    std::size_t num_terms() const {
        std::size_t n = 0;
        for (const Int& c : c_) if (c != 0) ++n;
        return n;
    }

    Int coeff(int exp) const {
        if (c_.empty() || exp < low_ || exp > high()) return Int(0);
        return c_[static_cast<std::size_t>(exp - low_)];
    }
    const std::vector<Int>& raw_coeffs() const { return c_; }
    static LaurentPoly from_raw(int low, std::vector<Int> coeffs) {
        LaurentPoly p;
        p.low_ = low;
        p.c_ = std::move(coeffs);
        p.trim_();
        return p;
    }
    Int leading_coeff() const { return c_.empty() ? Int(0) : c_.back(); }
    Int constant_coeff() const { return coeff(0); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.low_, b.low_);
        int hi = std::max(a.high(), b.high());
        LaurentPoly r;
        r.low_ = lo;
        r.c_.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(a.low_ - lo) + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(b.low_ - lo) + i] += b.c_[i];
        r.trim_();
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (Int& c : r.c_) c = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        LaurentPoly r;
        r.low_ = a.low_ + b.low_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim_();
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }

    /// Multiply by c*q^e in place.
    void mul_monomial(const Int& c, int exp) {
        if (c == 0) { *this = LaurentPoly(); return; }
        low_ += exp;
        if (c != 1) for (Int& x : c_) x *= c;
    }
    void shift(int exp) { if (!is_zero()) low_ += exp; }

    /// Fused x += c*q^e * p, used by the product kernels.
    void add_scaled(const LaurentPoly& p, const Int& c, int exp) {
        if (p.is_zero() || c == 0) return;
        int lo = p.low_ + exp;
        int hi = p.high() + exp;
        if (c_.empty()) {
            low_ = lo;
            c_.assign(p.c_.begin(), p.c_.end());
            if (c != 1) for (Int& x : c_) x *= c;
            return;
        }
        int nlo = std::min(low_, lo);
        int nhi = std::max(high(), hi);
        if (nlo < low_ || nhi > high()) {
            std::vector<Int> nc(static_cast<std::size_t>(nhi - nlo + 1), Int(0));
            for (std::size_t i = 0; i < c_.size(); ++i)
                nc[static_cast<std::size_t>(low_ - nlo) + i] = std::move(c_[i]);
            c_ = std::move(nc);
            low_ = nlo;
        }
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            c_[static_cast<std::size_t>(lo - low_) + i] += c * p.c_[i];
        trim_();
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r = one();
        LaurentPoly b = *this;
        while (n) {
            if (n & 1) r *= b;
            b = (n >>= 1) ? b * b : b;
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Positive gcd of the integer coefficients; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const Int& c : c_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g < 0 ? Int(-g) : g;
    }

    void divide_content(const Int& g) {
        if (g == 1) return;
        for (Int& c : c_) c /= g;
    }

    /// Exact division; throws if the division leaves a remainder.
    friend LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (a.is_zero()) return LaurentPoly();
        if (b.is_monomial()) {
            LaurentPoly r = a;
            r.low_ -= b.low_;
            if (b.c_[0] != 1)
                for (Int& c : r.c_) {
                    Int qv = c / b.c_[0];
                    if (qv * b.c_[0] != c) throw std::domain_error("LaurentPoly: inexact division");
                    c = qv;
                }
            return r;
        }
        // long division on coefficient vectors, top down
        std::vector<Int> rem(a.c_);
        const std::vector<Int>& d = b.c_;
        if (rem.size() < d.size()) throw std::domain_error("LaurentPoly: inexact division");
        std::vector<Int> quot(rem.size() - d.size() + 1, Int(0));
        for (std::size_t k = quot.size(); k-- > 0;) {
            Int top = rem[k + d.size() - 1];
            if (top == 0) continue;
            Int qv = top / d.back();
            if (qv * d.back() != top) throw std::domain_error("LaurentPoly: inexact division");
            quot[k] = qv;
            for (std::size_t j = 0; j < d.size(); ++j)
                rem[k + j] -= qv * d[j];
        }
        for (const Int& c : rem)
            if (c != 0) throw std::domain_error("LaurentPoly: inexact division");
        LaurentPoly r;
        r.low_ = a.low_ - b.low_;
        r.c_ = std::move(quot);
        r.trim_();
        return r;
    }

    /// Gcd up to units, returned with low exponent 0, content-primitive,
    /// positive leading coefficient.  gcd(0,0) = 0.
    friend LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return normalized_(b);
        if (b.is_zero()) return normalized_(a);
        if (a.is_monomial() || b.is_monomial()) {
            Int g = boost::multiprecision::gcd(a.content(), b.content());
            return monomial(g, 0);
        }
        Int cg = boost::multiprecision::gcd(a.content(), b.content());
        std::vector<Int> u = a.c_, v = b.c_;
        primitive_(u);
        primitive_(v);
        // primitive PRS
        while (!v.empty()) {
            std::vector<Int> r = prem_(u, v);
            u = std::move(v);
            v = std::move(r);
            primitive_(v);
        }
        LaurentPoly g;
        g.low_ = 0;
        g.c_ = std::move(u);
        if (g.c_.back() < 0) for (Int& c : g.c_) c = -c;
        g.mul_monomial(cg, 0);
        return g;
    }

    /// Spot evaluation at a rational value of q (debugging aid only).
    Rational evaluate(const Rational& q) const {
        Rational r = 0;
        Rational p = 1;
        for (int e = 0; e < (low_ < 0 ? -low_ : low_); ++e) p *= q;
        if (low_ < 0) p = 1 / p;
        for (const Int& c : c_) {
            r += Rational(c) * p;
            p *= q;
        }
        return r;
    }

    std::string to_string() const;

private:
    void trim_() {
        std::size_t b = 0, e = c_.size();
        while (b < e && c_[b] == 0) ++b;
        while (e > b && c_[e - 1] == 0) --e;
        if (b == e) { c_.clear(); low_ = 0; return; }
        if (b > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(b));
        c_.resize(e - b);
        low_ += static_cast<int>(b);
    }

    static LaurentPoly normalized_(const LaurentPoly& p) {
        if (p.is_zero()) return p;
        LaurentPoly r = p;
        r.low_ = 0;
        if (r.c_.back() < 0) for (Int& c : r.c_) c = -c;
        return r;
    }

    static void primitive_(std::vector<Int>& v) {
        if (v.empty()) return;
        Int g = 0;
        for (const Int& c : v) { g = boost::multiprecision::gcd(g, c); if (g == 1) break; }
        if (g < 0) g = -g;
        if (g > 1) for (Int& c : v) c /= g;
        if (v.back() < 0) for (Int& c : v) c = -c;
    }

    // pseudo-remainder of dense coefficient vectors (constant term first)
    static std::vector<Int> prem_(std::vector<Int> u, const std::vector<Int>& v) {
        if (u.size() < v.size()) return u;
        const Int& lv = v.back();
        for (std::size_t k = u.size() - v.size() + 1; k-- > 0;) {
            Int top = u[k + v.size() - 1];
            for (Int& c : u) c *= lv;
            for (std::size_t j = 0; j < v.size(); ++j)
                u[k + j] -= top * v[j];
            // after scaling, the top coefficient is exactly cancelled
        }
        while (!u.empty() && u.back() == 0) u.pop_back();
        // strip leading zeros to keep vectors canonical-ish; low end zeros are fine here
        return u;
    }

    int low_ = 0;
    std::vector<Int> c_;
};

}  // namespace uqp
