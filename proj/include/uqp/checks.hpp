#pragma once

#include "uqp/exact_matrix.hpp"
#include "uqp/series.hpp"
#include "uqp/text.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

namespace uqp {

// ---------------------------------------------------------------------------
// harness types
// ---------------------------------------------------------------------------

enum class OrderFilter { Both, MainOnly, AppendixOnly };

struct CheckParams {
    int degree = 6;       // univariate series truncation
    int degree2 = 4;      // bivariate series truncation
    int index_bound = 4;  // generator / rule index bound
    int grade_bound = 6;  // independence grade bound
    long iter_cap = 1000000;
    OrderFilter order = OrderFilter::Both;  // for the two-order checks

    std::vector<PbwOrder> orders() const {
        switch (order) {
            case OrderFilter::MainOnly: return {PbwOrder::Main};
            case OrderFilter::AppendixOnly: return {PbwOrder::Appendix};
            default: return {PbwOrder::Main, PbwOrder::Appendix};
        }
    }
    std::string describe() const {
        std::string s = "N=" + std::to_string(degree) + " N2=" + std::to_string(degree2) +
                        " K=" + std::to_string(index_bound) +
                        " grade=" + std::to_string(grade_bound);
        if (order == OrderFilter::MainOnly) s += " order=main";
        if (order == OrderFilter::AppendixOnly) s += " order=appendix";
        return s;
    }
};

enum class CheckStatus { Pass, Fail };

struct CheckOutcome {
    std::string name;
    std::string anchor;
    std::string params;
    CheckStatus status = CheckStatus::Pass;
    std::string counterexample;  // first offending coordinate, empty on pass
    long long millis = 0;
    std::size_t max_terms = 0;
};

struct CheckFailure {
    std::string message;
};

/// Context handed to each check body: bounds, a private Damiani cache (so
/// mutation runs never touch shared state), failure reporting and term
/// statistics.
class CheckRun {
public:
    explicit CheckRun(CheckParams p) : params(p) {}

    CheckParams params;
    DamianiCache dam;
    std::size_t max_terms = 0;

    void note(std::size_t n) {
        if (n > max_terms) max_terms = n;
    }

    [[noreturn]] void fail(std::string_view where, std::string_view what) {
        throw CheckFailure{std::string(where) + ": " + std::string(what)};
    }

    void zero(const FreeElement& e, std::string_view where) {
        note(e.num_terms());
        if (e.is_zero()) return;
        const auto& t = e.terms().front();
        fail(where, "coefficient of " + words::to_string(t.first) + " is " + t.second.to_string());
    }
    void zero(const ModelElement& e, std::string_view where) {
        note(e.num_terms());
        if (e.is_zero()) return;
        const auto& t = e.terms().front();
        std::string k = words::to_string(t.first.w);
        if (t.first.z != zmon::one()) k += " (*) " + zmon::to_string(t.first.z);
        fail(where, "coefficient of " + k + " is " + t.second.to_string());
    }
    void zero(const NormalForm& e, std::string_view where) {
        note(e.num_terms());
        if (e.is_zero()) return;
        const auto& [m, c] = *e.terms().begin();
        std::string k;
        for (const GenSymbol& g : m) k += (k.empty() ? "" : " ") + gen_token(g);
        if (k.empty()) k = "1";
        fail(where, "coefficient of " + k + " is " + c.to_string());
    }
    template <class R>
    void zero(const Series1<R>& s, std::string_view where) {
        for (int n = 0; n <= s.trunc(); ++n) {
            note(s.coeff(n).num_terms());
            if (!s.coeff(n).is_zero())
                zero(s.coeff(n), std::string(where) + " at t^" + std::to_string(n));
        }
    }
    template <class R>
    void zero(const Series2<R>& s, std::string_view where) {
        for (int d = 0; d <= s.trunc(); ++d)
            for (int i = 0; i <= d; ++i) {
                const R& c = s.coeff(i, d - i);
                note(c.num_terms());
                if (!c.is_zero())
                    zero(c, std::string(where) + " at s^" + std::to_string(i) + " t^" +
                                std::to_string(d - i));
            }
    }
    template <class T>
    void equal(const T& a, const T& b, std::string_view where) {
        zero(a - b, where);
    }
};

// ---------------------------------------------------------------------------
// generating-function builders
// ---------------------------------------------------------------------------

inline Series1<FreeElement> series_e_minus(int n, DamianiCache& dc) {
    Series1<FreeElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = dc.e_minus(k);
    return s;
}
inline Series1<FreeElement> series_e_plus(int n, DamianiCache& dc) {
    Series1<FreeElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = dc.e_plus(k);
    return s;
}
/// E(t) with the scalar constant term -(q-q^{-1})^{-1}.
inline Series1<FreeElement> series_e_delta(int n, DamianiCache& dc) {
    Series1<FreeElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = dc.e_delta(k);
    return s;
}

inline Series1<ModelElement> embed_series(const Series1<FreeElement>& a) {
    Series1<ModelElement> s(a.trunc());
    for (int k = 0; k <= a.trunc(); ++k) s.coeff(k) = ModelElement::embed(a.coeff(k));
    return s;
}

inline Series1<ModelElement> series_w_minus(int n) {
    Series1<ModelElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = gen_image(AlternatingKind::Wminus, k);
    return s;
}
inline Series1<ModelElement> series_w_plus(int n) {
    Series1<ModelElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = gen_image(AlternatingKind::Wplus, k);
    return s;
}
inline Series1<ModelElement> series_g(int n) {
    Series1<ModelElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = gen_image(AlternatingKind::G, k);
    return s;
}
inline Series1<ModelElement> series_gtilde(int n) {
    Series1<ModelElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = gen_image(AlternatingKind::Gtilde, k);
    return s;
}
inline Series1<ModelElement> series_zvee(int n) {
    Series1<ModelElement> s(n);
    for (int k = 0; k <= n; ++k) s.coeff(k) = zvee_element(k);
    return s;
}

template <class R>
Series1<R> const_series(R a, int n) {
    return Series1<R>::constant(std::move(a), n);
}

// ---------------------------------------------------------------------------
// check bodies
// ---------------------------------------------------------------------------

namespace checks {

inline FreeElement lx() { return FreeElement::letter(words::kX); }
inline FreeElement ly() { return FreeElement::letter(words::kY); }

inline void qserre(CheckRun& run) {
    WordLenGuard guard(8);
    auto mul = [](const FreeElement& a, const FreeElement& b) { return shuffle_mul(a, b); };
    FreeElement x = lx(), y = ly();
    Scalar q1 = Scalar::q_power(1), qm1 = Scalar::q_power(-1);
    run.zero(commutator(x, q_commutator(x, q_commutator(x, y, q1, mul), qm1, mul), mul),
             "[W0,[W0,[W0,W1]_q]_q^-1]");
    run.zero(commutator(y, q_commutator(y, q_commutator(y, x, q1, mul), qm1, mul), mul),
             "[W1,[W1,[W1,W0]_q]_q^-1]");
    // expanded form: X^3 Y - [3] X^2 Y X + [3] X Y X^2 - Y X^3
    Scalar three = q_integer(3);
    auto pw = [&](const FreeElement& a, const FreeElement& b, const FreeElement& c,
                  const FreeElement& d) { return mul(mul(mul(a, b), c), d); };
    run.zero(pw(x, x, x, y) - three * pw(x, x, y, x) + three * pw(x, y, x, x) - pw(y, x, x, x),
             "expanded q-Serre (x side)");
    run.zero(pw(y, y, y, x) - three * pw(y, y, x, y) + three * pw(y, x, y, y) - pw(x, y, y, y),
             "expanded q-Serre (y side)");
}

/// Shared product cache for the Damiani reduction-rule families.
class DamProducts {
public:
    explicit DamProducts(DamianiCache& dc) : dc_(dc) {}

    // fam: 0 = E_{n delta + a0}, 1 = E_{n delta + a1}, 2 = E_{n delta}
    const FreeElement& elem(int fam, int n) {
        switch (fam) {
            case 0: return dc_.e_minus(n);
            case 1: return dc_.e_plus(n);
            default: return dc_.e_delta(n);
        }
    }
    const FreeElement& prod(int fa, int na, int fb, int nb) {
        auto key = std::make_tuple(fa, na, fb, nb);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, shuffle_mul(elem(fa, na), elem(fb, nb))).first;
        return it->second;
    }

private:
    DamianiCache& dc_;
    std::map<std::tuple<int, int, int, int>, FreeElement> cache_;
};

inline void damiani_rr(CheckRun& run) {
    const int K = run.params.index_bound;
    WordLenGuard guard(4 * K + 6);
    DamProducts P(run.dam);
    Scalar q2 = Scalar::q_power(2), qm2 = Scalar::q_power(-2);
    Scalar c22 = q2 - qm2;                       // q^2 - q^-2
    Scalar br = q_bracket();                     // q - q^-1
    Scalar qp = Scalar::q_power(1) + Scalar::q_power(-1);

    // (a)  E_{i d + a1} E_{j d + a0} = q^2 E_{j d + a0} E_{i d + a1} + q^2 E_{(i+j+1) d}
    for (int i = 0; i <= K; ++i)
        for (int j = 0; j <= K; ++j)
            run.zero(P.prod(1, i, 0, j) - q2 * P.prod(0, j, 1, i) - q2 * run.dam.e_delta(i + j + 1),
                     "E+(" + std::to_string(i) + ") E-(" + std::to_string(j) + ") rule");

    // (b)  the E-E- / E+E+ straightening rules, odd and even gap
    for (int i = 1; i <= K; ++i) {
        for (int j = 0; j < i; ++j) {
            std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if ((i - j) % 2 == 1) {
                int r = (i - j - 1) / 2;
                FreeElement lhs0 = P.prod(0, i, 0, j) - qm2 * P.prod(0, j, 0, i);
                FreeElement lhs1 = P.prod(1, j, 1, i) - qm2 * P.prod(1, i, 1, j);
                for (int l = 1; l <= r; ++l) {
                    Scalar f = c22 * Scalar::q_power(-2 * l);
                    lhs0 += f * P.prod(0, j + l, 0, i - l);
                    lhs1 += f * P.prod(1, i - l, 1, j + l);
                }
                run.zero(lhs0, "E-E- odd gap " + tag);
                run.zero(lhs1, "E+E+ odd gap " + tag);
            } else {
                int r = (i - j) / 2;
                Scalar sq = Scalar::q_power(j - i + 1) * br;
                FreeElement lhs0 =
                    P.prod(0, i, 0, j) - qm2 * P.prod(0, j, 0, i) + sq * P.prod(0, r + j, 0, r + j);
                FreeElement lhs1 =
                    P.prod(1, j, 1, i) - qm2 * P.prod(1, i, 1, j) + sq * P.prod(1, r + j, 1, r + j);
                for (int l = 1; l <= r - 1; ++l) {
                    Scalar f = c22 * Scalar::q_power(-2 * l);
                    lhs0 += f * P.prod(0, j + l, 0, i - l);
                    lhs1 += f * P.prod(1, i - l, 1, j + l);
                }
                run.zero(lhs0, "E-E- even gap " + tag);
                run.zero(lhs1, "E+E+ even gap " + tag);
            }
        }
    }

    // (c)  E_{i d} E_{j d + a0} = E_{j d + a0} E_{i d} + q^{2-2i}(q+q^{-1}) E_{(i+j) d + a0} - ...
    for (int i = 1; i <= K; ++i)
        for (int j = 0; j <= K; ++j) {
            std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            Scalar lead = Scalar::q_power(2 - 2 * i) * qp;
            FreeElement lhs0 = P.prod(2, i, 0, j) - P.prod(0, j, 2, i) - lead * run.dam.e_minus(i + j);
            FreeElement lhs1 = P.prod(1, j, 2, i) - P.prod(2, i, 1, j) - lead * run.dam.e_plus(i + j);
            for (int l = 1; l <= i - 1; ++l) {
                Scalar f = q2 * c22 * Scalar::q_power(-2 * l);
                lhs0 += f * P.prod(0, j + l, 2, i - l);
                lhs1 += f * P.prod(2, i - l, 1, j + l);
            }
            run.zero(lhs0, "Ed E- rule " + tag);
            run.zero(lhs1, "E+ Ed rule " + tag);
        }

    // (d)  [E_{(i+1)d+a0}, E_{i d+a0}]_q = 0 and the mixed-index sums
    auto qc = [&](int fa, int na, int fb, int nb) {
        return Scalar::q_power(1) * P.prod(fa, na, fb, nb) -
               Scalar::q_power(-1) * P.prod(fb, nb, fa, na);
    };
    for (int i = 0; i <= K; ++i) {
        run.zero(qc(0, i + 1, 0, i), "[E-(i+1),E-(i)]_q at i=" + std::to_string(i));
        run.zero(qc(1, i, 1, i + 1), "[E+(i),E+(i+1)]_q at i=" + std::to_string(i));
    }
    for (int i = 0; i <= K; ++i)
        for (int j = i + 1; j <= K; ++j) {
            std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            run.zero(qc(0, i + 1, 0, j) + qc(0, j + 1, 0, i), "E- q-commutator sum " + tag);
            run.zero(qc(1, j, 1, i + 1) + qc(1, i, 1, j + 1), "E+ q-commutator sum " + tag);
        }

    // (e)  [E_{i d + a0}, E_{(j+1) d}] = [E_{(i+1) d + a0}, E_{j d}]_{q^2}
    for (int i = 0; i <= K; ++i)
        for (int j = 0; j <= K; ++j) {
            std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            FreeElement l0 = P.prod(0, i, 2, j + 1) - P.prod(2, j + 1, 0, i);
            FreeElement r0 = q2 * P.prod(0, i + 1, 2, j) - qm2 * P.prod(2, j, 0, i + 1);
            run.zero(l0 - r0, "[E-,Ed] vs q2-commutator " + tag);
            FreeElement l1 = P.prod(2, j + 1, 1, i) - P.prod(1, i, 2, j + 1);
            FreeElement r1 = q2 * P.prod(2, j, 1, i + 1) - qm2 * P.prod(1, i + 1, 2, j);
            run.zero(l1 - r1, "[Ed,E+] vs q2-commutator " + tag);
        }

    // supporting facts: the E_{n d} commute, both constructions agree,
    // and tau swaps the a0/a1 families while fixing the d family
    for (int i = 1; i <= K; ++i)
        for (int j = i + 1; j <= K; ++j)
            run.zero(P.prod(2, i, 2, j) - P.prod(2, j, 2, i),
                     "[Ed(i),Ed(j)] at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (int n = 1; n <= K + 1; ++n)
        run.equal(run.dam.e_delta(n), damiani_e_delta_alt(n, run.dam),
                  "two E_{n d} constructions at n=" + std::to_string(n));
    for (int n = 0; n <= K; ++n) {
        run.equal(run.dam.e_minus(n).tau(), run.dam.e_plus(n),
                  "tau(E-) = E+ at n=" + std::to_string(n));
        if (n >= 1)
            run.equal(run.dam.e_delta(n).tau(), run.dam.e_delta(n),
                      "tau fixes Ed at n=" + std::to_string(n));
    }
}

inline void gf_uqp(CheckRun& run) {
    const int N = run.params.degree, N2 = run.params.degree2;
    WordLenGuard guard(4 * N + 4);
    DamianiCache& dc = run.dam;
    Series1<FreeElement> Em = series_e_minus(N, dc), Ep = series_e_plus(N, dc),
                         E = series_e_delta(N, dc);
    Series1<FreeElement> W0 = const_series(lx(), N), W1 = const_series(ly(), N);
    Scalar q1 = Scalar::q_power(1), qm1 = Scalar::q_power(-1);
    Scalar q2 = Scalar::q_power(2), qm2 = Scalar::q_power(-2);
    Scalar br = q_bracket();
    Scalar qp = q1 + qm1;

    // t [E_delta, E^-(t)] / (q+q^-1) = E^-(t) - W_0, and the E^+ twin
    Series1<FreeElement> Ed1 = const_series(e_delta_1(), N);
    run.zero(qp.inv() * (Ed1 * Em - Em * Ed1).shift_up() - (Em - W0), "t[Ed,E-]/(q+q^-1) = E- - W0");
    run.zero(qp.inv() * (Ep * Ed1 - Ed1 * Ep).shift_up() - (Ep - W1), "t[E+,Ed]/(q+q^-1) = E+ - W1");

    // t[W0,E+(t)]_q + q E(t) + q/(q-q^-1) = 0, and the E^- twin
    Series1<FreeElement> unit_term =
        const_series(FreeElement::unit(q1 * br.inv()), N);
    run.zero((q1 * (W0 * Ep) - qm1 * (Ep * W0)).shift_up() + q1 * E + unit_term,
             "t[W0,E+]_q + qE + q/(q-q^-1)");
    run.zero((q1 * (Em * W1) - qm1 * (W1 * Em)).shift_up() + q1 * E + unit_term,
             "t[E-,W1]_q + qE + q/(q-q^-1)");

    // [E(s), E(t)] = 0
    {
        auto Es = Series2<FreeElement>::from_s(E, N2), Et = Series2<FreeElement>::from_t(E, N2);
        run.zero(Es * Et - Et * Es, "[E(s),E(t)]");
    }

    // [E^-(s), E^+(t)]_q = -q (E(s)-E(t))/(s-t)
    {
        auto A = Series2<FreeElement>::from_s(Em, N2), B = Series2<FreeElement>::from_t(Ep, N2);
        run.zero(q1 * (A * B) - qm1 * (B * A) + q1 * divided_difference(series_e_delta(N2 + 1, dc)),
                 "[E-(s),E+(t)]_q + q(E(s)-E(t))/(s-t)");
    }

    // the two-variable straightening identities for E^- and E^+
    {
        auto A = Series2<FreeElement>::from_s(Em, N2), B = Series2<FreeElement>::from_t(Em, N2);
        Scalar ib = br.inv();
        auto AB = A * B, BA = B * A, AA = A * A, BB = B * B;
        run.zero(ib * (q1 * AB.mul_t() - qm1 * AB.mul_s()) +
                     ib * (q1 * BA.mul_s() - qm1 * BA.mul_t()) - AA.mul_s() - BB.mul_t(),
                 "(qt-q^-1 s)/(q-q^-1) E-(s)E-(t) + ... - s E-(s)^2 - t E-(t)^2");
        auto C = Series2<FreeElement>::from_s(Ep, N2), D = Series2<FreeElement>::from_t(Ep, N2);
        auto CD = C * D, DC = D * C, CC = C * C, DD = D * D;
        run.zero(ib * (q1 * DC.mul_t() - qm1 * DC.mul_s()) +
                     ib * (q1 * CD.mul_s() - qm1 * CD.mul_t()) - CC.mul_s() - DD.mul_t(),
                 "(qt-q^-1 s)/(q-q^-1) E+(t)E+(s) + ... - s E+(s)^2 - t E+(t)^2");
    }
    {
        auto A = Series2<FreeElement>::from_s(Em, N2), D = Series2<FreeElement>::from_t(E, N2);
        auto AD = A * D, DA = D * A;
        auto corr = Series2<FreeElement>::from_t(Em.scale_arg(qm2) * E, N2);
        run.zero(AD.mul_s() - q2 * AD.mul_t() + qm2 * DA.mul_t() - DA.mul_s() +
                     (q2 - qm2) * corr.mul_t(),
                 "(s-q^2 t)E-(s)E(t) + (q^-2 t-s)E(t)E-(s) + (q^2-q^-2) t E-(q^-2 t)E(t)");
        auto C = Series2<FreeElement>::from_s(Ep, N2);
        auto DC = D * C, CD = C * D;
        auto corr2 = Series2<FreeElement>::from_t(E * Ep.scale_arg(qm2), N2);
        run.zero(DC.mul_s() - q2 * DC.mul_t() + qm2 * CD.mul_t() - CD.mul_s() +
                     (q2 - qm2) * corr2.mul_t(),
                 "(s-q^2 t)E(t)E+(s) + (q^-2 t-s)E+(s)E(t) + (q^2-q^-2) t E(t)E+(q^-2 t)");
    }

    // the s = 0 specializations
    run.zero(q1 * (W0 * Em) - qm1 * (Em * W0) - br * (Em * Em), "[W0,E-]_q = (q-q^-1)E-^2");
    run.zero(q2 * (W0 * E) - qm2 * (E * W0) - (q2 - qm2) * (Em.scale_arg(qm2) * E),
             "[W0,E]_q2 = (q^2-q^-2)E-(q^-2 t)E(t)");
    run.zero(q1 * (Ep * W1) - qm1 * (W1 * Ep) - br * (Ep * Ep), "[E+,W1]_q = (q-q^-1)E+^2");
    run.zero(q2 * (E * W1) - qm2 * (W1 * E) - (q2 - qm2) * (E * Ep.scale_arg(qm2)),
             "[E,W1]_q2 = (q^2-q^-2)E(t)E+(q^-2 t)");
}

inline ModelElement gen(AlternatingKind k, int n) { return gen_image(k, n); }

inline void uce_relations(CheckRun& run) {
    using K = AlternatingKind;
    const int B = run.params.index_bound;
    const int N = run.params.degree, N2 = run.params.degree2;
    WordLenGuard guard(std::max(4 * B + 6, 4 * N + 2));
    Scalar q1 = Scalar::q_power(1), qm1 = Scalar::q_power(-1), qm2 = Scalar::q_power(-2);
    Scalar br = q_bracket();
    ModelElement W0 = gen(K::Wminus, 0), W1 = gen(K::Wplus, 0);
    auto com = [](const ModelElement& a, const ModelElement& b) {
        return model_mul(a, b) - model_mul(b, a);
    };
    auto qcom = [&](const ModelElement& a, const ModelElement& b) {
        return q1 * model_mul(a, b) - qm1 * model_mul(b, a);
    };

    for (int k = 0; k <= B; ++k) {
        std::string ks = std::to_string(k);
        ModelElement gdiff = (Scalar(1) - qm2) * (gen(K::Gtilde, k + 1) - gen(K::G, k + 1));
        run.zero(com(W0, gen(K::Wplus, k)) - gdiff, "[W0,W(k+1)] relation at k=" + ks);
        run.zero(com(gen(K::Wminus, k), W1) - gdiff, "[W(-k),W1] relation at k=" + ks);
        run.zero(qcom(W0, gen(K::G, k + 1)) - br * gen(K::Wminus, k + 1),
                 "[W0,G(k+1)]_q at k=" + ks);
        run.zero(qcom(gen(K::Gtilde, k + 1), W0) - br * gen(K::Wminus, k + 1),
                 "[Gt(k+1),W0]_q at k=" + ks);
        run.zero(qcom(gen(K::G, k + 1), W1) - br * gen(K::Wplus, k + 1),
                 "[G(k+1),W1]_q at k=" + ks);
        run.zero(qcom(W1, gen(K::Gtilde, k + 1)) - br * gen(K::Wplus, k + 1),
                 "[W1,Gt(k+1)]_q at k=" + ks);
    }
    for (int k = 0; k <= B; ++k)
        for (int l = 0; l <= B; ++l) {
            std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
            run.zero(com(gen(K::Wminus, k), gen(K::Wminus, l)), "[W-,W-] " + tag);
            run.zero(com(gen(K::Wplus, k), gen(K::Wplus, l)), "[W+,W+] " + tag);
            run.zero(com(gen(K::Wminus, k), gen(K::Wplus, l)) +
                         com(gen(K::Wplus, k), gen(K::Wminus, l)),
                     "[W-,W+] sum " + tag);
            run.zero(com(gen(K::Wminus, k), gen(K::G, l + 1)) +
                         com(gen(K::G, k + 1), gen(K::Wminus, l)),
                     "[W-,G] sum " + tag);
            run.zero(com(gen(K::Wminus, k), gen(K::Gtilde, l + 1)) +
                         com(gen(K::Gtilde, k + 1), gen(K::Wminus, l)),
                     "[W-,Gt] sum " + tag);
            run.zero(com(gen(K::Wplus, k), gen(K::G, l + 1)) +
                         com(gen(K::G, k + 1), gen(K::Wplus, l)),
                     "[W+,G] sum " + tag);
            run.zero(com(gen(K::Wplus, k), gen(K::Gtilde, l + 1)) +
                         com(gen(K::Gtilde, k + 1), gen(K::Wplus, l)),
                     "[W+,Gt] sum " + tag);
            run.zero(com(gen(K::G, k + 1), gen(K::G, l + 1)), "[G,G] " + tag);
            run.zero(com(gen(K::Gtilde, k + 1), gen(K::Gtilde, l + 1)), "[Gt,Gt] " + tag);
            run.zero(com(gen(K::Gtilde, k + 1), gen(K::G, l + 1)) +
                         com(gen(K::G, k + 1), gen(K::Gtilde, l + 1)),
                     "[Gt,G] sum " + tag);
        }

    // series forms
    Series1<ModelElement> Wm = series_w_minus(N), Wp = series_w_plus(N), G = series_g(N),
                          Gt = series_gtilde(N);
    Series1<ModelElement> W0c = const_series(W0, N), W1c = const_series(W1, N);
    run.zero((W0c * Wp - Wp * W0c) - (Scalar(1) - qm2) * (Gt - G).shift_down(),
             "[W0,W+(t)] = (1-q^-2)t^-1(Gt(t)-G(t))");
    run.zero((Wm * W1c - W1c * Wm) - (Scalar(1) - qm2) * (Gt - G).shift_down(),
             "[W-(t),W1] = (1-q^-2)t^-1(Gt(t)-G(t))");
    run.zero((q1 * (W0c * G) - qm1 * (G * W0c)) - br * Wm, "[W0,G(t)]_q = (q-q^-1)W-(t)");
    run.zero((q1 * (Gt * W0c) - qm1 * (W0c * Gt)) - br * Wm, "[Gt(t),W0]_q = (q-q^-1)W-(t)");
    run.zero((q1 * (G * W1c) - qm1 * (W1c * G)) - br * Wp, "[G(t),W1]_q = (q-q^-1)W+(t)");
    run.zero((q1 * (W1c * Gt) - qm1 * (Gt * W1c)) - br * Wp, "[W1,Gt(t)]_q = (q-q^-1)W+(t)");

    auto S = [&](const Series1<ModelElement>& u) { return Series2<ModelElement>::from_s(u, N2); };
    auto T = [&](const Series1<ModelElement>& u) { return Series2<ModelElement>::from_t(u, N2); };
    auto com2 = [](const Series2<ModelElement>& a, const Series2<ModelElement>& b) {
        return a * b - b * a;
    };
    run.zero(com2(S(Wm), T(Wm)), "[W-(s),W-(t)]");
    run.zero(com2(S(Wp), T(Wp)), "[W+(s),W+(t)]");
    run.zero(com2(S(Wm), T(Wp)) + com2(S(Wp), T(Wm)), "[W-(s),W+(t)]+[W+(s),W-(t)]");
    run.zero(com2(S(Wm), T(G)).mul_s() + com2(S(G), T(Wm)).mul_t(),
             "s[W-(s),G(t)]+t[G(s),W-(t)]");
    run.zero(com2(S(Wm), T(Gt)).mul_s() + com2(S(Gt), T(Wm)).mul_t(),
             "s[W-(s),Gt(t)]+t[Gt(s),W-(t)]");
    run.zero(com2(S(Wp), T(G)).mul_s() + com2(S(G), T(Wp)).mul_t(),
             "s[W+(s),G(t)]+t[G(s),W+(t)]");
    run.zero(com2(S(Wp), T(Gt)).mul_s() + com2(S(Gt), T(Wp)).mul_t(),
             "s[W+(s),Gt(t)]+t[Gt(s),W+(t)]");
    run.zero(com2(S(G), T(G)), "[G(s),G(t)]");
    run.zero(com2(S(Gt), T(Gt)), "[Gt(s),Gt(t)]");
    run.zero(com2(S(Gt), T(G)) + com2(S(G), T(Gt)), "[Gt(s),G(t)]+[G(s),Gt(t)]");
}

inline void uce_rr(CheckRun& run) {
    using K = AlternatingKind;
    const int B = run.params.index_bound;
    const int N2 = run.params.degree2;
    WordLenGuard guard(std::max(4 * B + 8, 4 * N2 + 6));

    // element-level rules, both orders, straight from the rule tables
    std::vector<detail::RuleTerm> expansion;
    auto check_rule = [&](PbwOrder order, GenSymbol a, GenSymbol b, const std::string& tag) {
        if (!detail::reduce_pair(order, a, b, expansion))
            run.fail(tag, "expected a nontrivial reduction rule");
        ModelElement lhs = model_mul(to_model(a), to_model(b)) -
                           model_mul(to_model(b), to_model(a));
        for (const detail::RuleTerm& t : expansion) {
            ModelElement m = ModelElement::unit(t.c);
            for (int k = 0; k < t.n; ++k) m = model_mul(m, to_model(t.s[k]));
            lhs -= m;
        }
        run.zero(lhs, tag);
    };
    for (int i = 0; i <= B; ++i)
        for (int j = 0; j <= B; ++j) {
            std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            check_rule(PbwOrder::Main, {K::Wplus, i}, {K::Wminus, j}, "main W+W- rule " + ij);
            check_rule(PbwOrder::Main, {K::Gtilde, i + 1}, {K::G, j + 1}, "main GtG rule " + ij);
            check_rule(PbwOrder::Main, {K::Wminus, i}, {K::G, j + 1}, "main W-G rule " + ij);
            check_rule(PbwOrder::Main, {K::Wplus, i}, {K::G, j + 1}, "main W+G rule " + ij);
            check_rule(PbwOrder::Main, {K::Gtilde, i + 1}, {K::Wminus, j}, "main GtW- rule " + ij);
            check_rule(PbwOrder::Main, {K::Gtilde, i + 1}, {K::Wplus, j}, "main GtW+ rule " + ij);
            check_rule(PbwOrder::Appendix, {K::G, i + 1}, {K::Wminus, j}, "appendix GW- rule " + ij);
            check_rule(PbwOrder::Appendix, {K::Wplus, i}, {K::Gtilde, j + 1},
                       "appendix W+Gt rule " + ij);
            check_rule(PbwOrder::Appendix, {K::Wplus, i}, {K::G, j + 1}, "appendix W+G rule " + ij);
            check_rule(PbwOrder::Appendix, {K::Gtilde, i + 1}, {K::Wminus, j},
                       "appendix GtW- rule " + ij);
        }

    // series forms, cleared of the (s-t) denominators
    Scalar q1 = Scalar::q_power(1), qm1 = Scalar::q_power(-1), q2 = Scalar::q_power(2),
           qm2 = Scalar::q_power(-2);
    Scalar br = q_bracket();
    Series1<ModelElement> Wm = series_w_minus(N2), Wp = series_w_plus(N2), G = series_g(N2),
                          Gt = series_gtilde(N2);
    auto S = [&](const Series1<ModelElement>& u) { return Series2<ModelElement>::from_s(u, N2); };
    auto T = [&](const Series1<ModelElement>& u) { return Series2<ModelElement>::from_t(u, N2); };
    auto st = [](const Series2<ModelElement>& a) { return a.mul_s() - a.mul_t(); };

    run.zero(st(S(Wp) * T(Wm) - T(Wm) * S(Wp)) -
                 (Scalar(1) - qm2) * (S(G) * T(Gt) - T(G) * S(Gt)),
             "(s-t)[W+(s),W-(t)] = (1-q^-2)(G(s)Gt(t)-G(t)Gt(s))");
    run.zero(st(S(Gt) * T(G) - T(G) * S(Gt)) -
                 (Scalar(1) - q2) * (T(Wm) * S(Wp) - S(Wm) * T(Wp)).mul_s().mul_t(),
             "(s-t)[Gt(s),G(t)] = (1-q^2)st(W-(t)W+(s)-W-(s)W+(t))");
    run.zero(st(S(Wm) * T(G)) -
                 qm1 * (q1 * (T(G) * S(Wm)).mul_s() - qm1 * (T(G) * S(Wm)).mul_t() -
                        br * (S(G) * T(Wm)).mul_t()),
             "(s-t) W-(s)G(t) = q^-1((qs-q^-1 t)G(t)W-(s) - (q-q^-1)t G(s)W-(t))");
    run.zero(st(S(Wp) * T(G)) -
                 q1 * (qm1 * (T(G) * S(Wp)).mul_s() - q1 * (T(G) * S(Wp)).mul_t() +
                       br * (S(G) * T(Wp)).mul_t()),
             "(s-t) W+(s)G(t) = q((q^-1 s-qt)G(t)W+(s) + (q-q^-1)t G(s)W+(t))");
    run.zero(st(S(Gt) * T(Wm)) -
                 qm1 * (qm1 * (T(Wm) * S(Gt)).mul_s() - q1 * (T(Wm) * S(Gt)).mul_t() +
                        br * (S(Wm) * T(Gt)).mul_s()),
             "(s-t) Gt(s)W-(t) = q^-1((q^-1 s-qt)W-(t)Gt(s) + (q-q^-1)s W-(s)Gt(t))");
    run.zero(st(S(Gt) * T(Wp)) -
                 q1 * (q1 * (T(Wp) * S(Gt)).mul_s() - qm1 * (T(Wp) * S(Gt)).mul_t() -
                       br * (S(Wp) * T(Gt)).mul_s()),
             "(s-t) Gt(s)W+(t) = q((qs-q^-1 t)W+(t)Gt(s) - (q-q^-1)s W+(s)Gt(t))");
    run.zero(st(S(G) * T(Wm)) -
                 q1 * (q1 * (T(Wm) * S(G)).mul_s() - qm1 * (T(Wm) * S(G)).mul_t() -
                       br * (S(Wm) * T(G)).mul_s()),
             "(s-t) G(s)W-(t) = q((qs-q^-1 t)W-(t)G(s) - (q-q^-1)s W-(s)G(t))");
    run.zero(st(S(Wp) * T(Gt)) -
                 qm1 * (q1 * (T(Gt) * S(Wp)).mul_s() - qm1 * (T(Gt) * S(Wp)).mul_t() -
                        br * (S(Gt) * T(Wp)).mul_t()),
             "(s-t) W+(s)Gt(t) = q^-1((qs-q^-1 t)Gt(t)W+(s) - (q-q^-1)t Gt(s)W+(t))");
}

}  // namespace checks
}  // namespace uqp

#include "uqp/checks_registry.hpp"
