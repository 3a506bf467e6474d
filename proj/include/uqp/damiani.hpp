#pragma once

#include "uqp/ops.hpp"
#include "uqp/shuffle.hpp"

#include <deque>
#include <mutex>

namespace uqp {

/// The four families of alternating generators.
enum class AlternatingKind : std::uint8_t { Wminus, Wplus, G, Gtilde };

/// natural-images of the alternating elements of U_q^+, straight from the
/// word table: W_{-k} -> x(yx)^k, W_{k+1} -> y(xy)^k, G_k -> (yx)^k,
/// Gtilde_k -> (xy)^k.
inline FreeElement alternating_word(AlternatingKind kind, int k) {
    if (k < 0) throw std::domain_error("alternating_word: negative index");
    switch (kind) {
        case AlternatingKind::Wminus:
            return FreeElement::single(words::alt_word(words::kX, 2 * k + 1));
        case AlternatingKind::Wplus:
            return FreeElement::single(words::alt_word(words::kY, 2 * k + 1));
        case AlternatingKind::G:
            return FreeElement::single(words::alt_word(words::kY, 2 * k));
        case AlternatingKind::Gtilde:
            return FreeElement::single(words::alt_word(words::kX, 2 * k));
    }
    throw std::logic_error("unreachable");
}

/// E_delta = q^{-2} W_1 W_0 - W_0 W_1 in the shuffle model; equals
/// (q^{-4}-1) xy.
inline FreeElement e_delta_1() {
    FreeElement x = FreeElement::letter(words::kX);
    FreeElement y = FreeElement::letter(words::kY);
    return Scalar::q_power(-2) * shuffle_mul(y, x) - shuffle_mul(x, y);
}

/// Damiani's PBW generators for U_q^+, realized in the q-shuffle algebra
/// and cached per index.  e_delta(0) is the scalar -(q-q^-1)^{-1} times
/// the empty word; the recursive operation itself rejects n = 0.
class DamianiCache {
public:
    const FreeElement& e_minus(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        extend_(n);
        return eminus_[static_cast<std::size_t>(n)];
    }
    const FreeElement& e_plus(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        extend_(n);
        return eplus_[static_cast<std::size_t>(n)];
    }
    /// E_{n delta}; index 0 holds the scalar constant term of E(t).
    const FreeElement& e_delta(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        extend_(n);
        return edelta_[static_cast<std::size_t>(n)];
    }

private:
    void extend_(int n) {
        if (n < 0) throw std::domain_error("Damiani index must be nonnegative");
        if (eminus_.empty()) {
            eminus_.push_back(FreeElement::letter(words::kX));
            eplus_.push_back(FreeElement::letter(words::kY));
            edelta_.push_back(FreeElement::unit(-q_bracket().inv()));
        }
        Scalar norm = (Scalar::q_power(1) + Scalar::q_power(-1)).inv();
        while (static_cast<int>(eminus_.size()) <= n) {
            int m = static_cast<int>(eminus_.size());
            const FreeElement ed1 = e_delta_1();
            eminus_.push_back(norm * commutator(ed1, eminus_[static_cast<std::size_t>(m - 1)],
                                                shuffle_mul));
            eplus_.push_back(norm * commutator(eplus_[static_cast<std::size_t>(m - 1)], ed1,
                                               shuffle_mul));
            const FreeElement& ep = eplus_[static_cast<std::size_t>(m - 1)];
            FreeElement w0 = FreeElement::letter(words::kX);
            edelta_.push_back(Scalar::q_power(-2) * shuffle_mul(ep, w0) - shuffle_mul(w0, ep));
        }
    }

    std::mutex mu_;
    // deques keep references stable while the chains extend
    std::deque<FreeElement> eminus_, eplus_, edelta_;
};

inline DamianiCache& damiani_cache() {
    static DamianiCache cache;
    return cache;
}

/// E_{n delta + alpha_0}; n = 0 gives W_0 = x.
inline FreeElement damiani_e_minus(int n, DamianiCache& cache = damiani_cache()) {
    return cache.e_minus(n);
}

/// E_{n delta + alpha_1}; n = 0 gives W_1 = y.
inline FreeElement damiani_e_plus(int n, DamianiCache& cache = damiani_cache()) {
    return cache.e_plus(n);
}

/// E_{n delta} for n >= 1 via E_{n delta} = q^{-2} E_{(n-1)delta+alpha_1} W_0
/// - W_0 E_{(n-1)delta+alpha_1}.
inline FreeElement damiani_e_delta(int n, DamianiCache& cache = damiani_cache()) {
    if (n < 1)
        throw std::domain_error("damiani_e_delta: n must be >= 1 (n = 0 is the scalar constant)");
    return cache.e_delta(n);
}

/// The alternative construction q^{-2} W_1 E_{(n-1)delta+alpha_0}
/// - E_{(n-1)delta+alpha_0} W_1; must agree with damiani_e_delta.
inline FreeElement damiani_e_delta_alt(int n, DamianiCache& cache = damiani_cache()) {
    if (n < 1) throw std::domain_error("damiani_e_delta_alt: n must be >= 1");
    FreeElement em = cache.e_minus(n - 1);
    FreeElement w1 = FreeElement::letter(words::kY);
    return Scalar::q_power(-2) * shuffle_mul(w1, em) - shuffle_mul(em, w1);
}

}  // namespace uqp
