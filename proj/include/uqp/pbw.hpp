#pragma once

#include "uqp/model_element.hpp"

#include <map>
#include <span>

namespace uqp {

/// Abstract alternating generator.  Index semantics per family:
///   (Wminus, k) = W_{-k}   (k >= 0)
///   (Wplus,  k) = W_{k+1}  (k >= 0)
///   (G,      k) = G_k      (k >= 1; k = 0 is the unit and is never stored)
///   (Gtilde, k) = Gtilde_k (likewise)
struct GenSymbol {
    AlternatingKind kind;
    int index;
    friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
};

using Monomial = std::vector<GenSymbol>;

/// The two PBW orders: G < W- < W+ < Gt, and W- < G < Gt < W+.
/// Within each family, generators are ordered by index.
enum class PbwOrder : std::uint8_t { Main, Appendix };

inline int family_rank(PbwOrder order, AlternatingKind k) {
    if (order == PbwOrder::Main) {
        switch (k) {
            case AlternatingKind::G: return 0;
            case AlternatingKind::Wminus: return 1;
            case AlternatingKind::Wplus: return 2;
            case AlternatingKind::Gtilde: return 3;
        }
    } else {
        switch (k) {
            case AlternatingKind::Wminus: return 0;
            case AlternatingKind::G: return 1;
            case AlternatingKind::Gtilde: return 2;
            case AlternatingKind::Wplus: return 3;
        }
    }
    throw std::logic_error("unreachable");
}

inline std::pair<int, int> symbol_rank(PbwOrder order, const GenSymbol& s) {
    return {family_rank(order, s.kind), s.index};
}

/// grade(W_{-k}) = grade(W_{k+1}) = 2k+1, grade(G_k) = grade(Gtilde_k) = 2k.
inline int symbol_grade(const GenSymbol& s) {
    switch (s.kind) {
        case AlternatingKind::Wminus:
        case AlternatingKind::Wplus: return 2 * s.index + 1;
        case AlternatingKind::G:
        case AlternatingKind::Gtilde: return 2 * s.index;
    }
    throw std::logic_error("unreachable");
}

inline int monomial_grade(const Monomial& m) {
    int g = 0;
    for (const GenSymbol& s : m) g += symbol_grade(s);
    return g;
}

struct MonomialLess {
    PbwOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            auto ra = symbol_rank(order, a[i]);
            auto rb = symbol_rank(order, b[i]);
            if (ra != rb) return ra < rb;
        }
        return a.size() < b.size();
    }
};

struct RewriteLimits {
    long iteration_cap = 1000000;
    int index_bound = 16;
};

struct RewriteOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Linear combination of PBW-ordered monomials in the alternating
/// generators, relative to a fixed order.
class NormalForm {
public:
    explicit NormalForm(PbwOrder order = PbwOrder::Main)
        : order_(order), terms_(MonomialLess{order}) {}

    static NormalForm unit(PbwOrder order, Scalar c = Scalar(1)) {
        NormalForm n(order);
        if (!c.is_zero()) n.terms_.emplace(Monomial{}, std::move(c));
        return n;
    }
    static NormalForm single(PbwOrder order, Monomial m, Scalar c = Scalar(1)) {
        NormalForm n(order);
        if (!c.is_zero()) n.terms_.emplace(std::move(m), std::move(c));
        return n;
    }

    PbwOrder order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Monomial, Scalar, MonomialLess>& terms() const { return terms_; }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NormalForm operator+(const NormalForm& a, const NormalForm& b) {
        require_same_order(a, b);
        NormalForm r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend NormalForm operator-(const NormalForm& a, const NormalForm& b) {
        require_same_order(a, b);
        NormalForm r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    NormalForm operator-() const {
        NormalForm r(order_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend NormalForm operator*(const Scalar& c, const NormalForm& a) {
        NormalForm r(a.order_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    std::optional<NormalForm> try_inverse() const {
        if (terms_.size() != 1 || !terms_.begin()->first.empty()) return std::nullopt;
        return unit(order_, terms_.begin()->second.inv());
    }

    std::string to_string() const;

    static void require_same_order(const NormalForm& a, const NormalForm& b) {
        if (a.order_ != b.order_)
            throw std::invalid_argument("NormalForm: mixed PBW orders");
    }

private:
    PbwOrder order_;
    std::map<Monomial, Scalar, MonomialLess> terms_;
};

namespace detail {

// W_m by actual subscript m.
inline GenSymbol w_sub(int m) {
    return m <= 0 ? GenSymbol{AlternatingKind::Wminus, -m}
                  : GenSymbol{AlternatingKind::Wplus, m - 1};
}

struct RuleTerm {
    Scalar c;
    GenSymbol s[2];
    int n = 0;  // number of symbols (unit factors already dropped)
};

// append G_k / Gtilde_k / W_m factors, dropping unit G_0, Gtilde_0
inline void push_g(RuleTerm& t, AlternatingKind kind, int k) {
    if (k > 0) t.s[t.n++] = GenSymbol{kind, k};
}
inline void push_w(RuleTerm& t, int m) { t.s[t.n++] = detail::w_sub(m); }

/// Expansion of the out-of-order product a*b as swapped term plus
/// corrections.  Returns false when a, b commute (same family), in which
/// case the caller just swaps them.
inline bool reduce_pair(PbwOrder order, const GenSymbol& a, const GenSymbol& b,
                        std::vector<RuleTerm>& out) {
    using K = AlternatingKind;
    if (a.kind == b.kind) return false;
    out.clear();

    Scalar qm = Scalar::q_power(-1) * q_bracket();  // q^{-1}(q - q^{-1})
    Scalar qp = Scalar::q_power(1) * q_bracket();   // q(q - q^{-1})

    int rule_base = order == PbwOrder::Main ? 0 : 6;
    auto factor = [&](int rule, Scalar f) {
        if (config().perturbed_rule == rule_base + rule) return f * Scalar::q_power(1);
        return f;
    };
    auto corr = [&](const Scalar& f, auto&& emit_pair) {
        // emit_pair(t, l) fills one correction difference for summand l
        return std::pair<const Scalar&, decltype(emit_pair)>(f, emit_pair);
    };
    (void)corr;

    // Rules shared by both orders.
    if (a.kind == K::Wplus && b.kind == K::Wminus) {
        // W_{i+1} W_{-j} = W_{-j} W_{i+1}
        //   + q^{-1}(q-q^{-1}) sum_l [ G_{i+j+1-l} Gt_l - G_l Gt_{i+j+1-l} ]
        int i = a.index, j = b.index;
        Scalar f = factor(0, qm);
        for (int l = 0; l <= std::min(i, j); ++l) {
            RuleTerm t1{f, {}, 0};
            push_g(t1, K::G, i + j + 1 - l);
            push_g(t1, K::Gtilde, l);
            out.push_back(t1);
            RuleTerm t2{-f, {}, 0};
            push_g(t2, K::G, l);
            push_g(t2, K::Gtilde, i + j + 1 - l);
            out.push_back(t2);
        }
        return true;
    }
    if (a.kind == K::Gtilde && b.kind == K::G) {
        // Gt_{i+1} G_{j+1} = G_{j+1} Gt_{i+1}
        //   + q(q-q^{-1}) sum_l [ W_{l-i-j-1} W_{l+1} - W_{-l} W_{i+j+2-l} ]
        int i = a.index - 1, j = b.index - 1;
        Scalar f = factor(1, qp);
        for (int l = 0; l <= std::min(i, j); ++l) {
            RuleTerm t1{f, {}, 0};
            push_w(t1, l - i - j - 1);
            push_w(t1, l + 1);
            out.push_back(t1);
            RuleTerm t2{-f, {}, 0};
            push_w(t2, -l);
            push_w(t2, i + j + 2 - l);
            out.push_back(t2);
        }
        return true;
    }

    if (order == PbwOrder::Main) {
        if (a.kind == K::Wminus && b.kind == K::G) {
            // W_{-i} G_{j+1} = G_{j+1} W_{-i}
            //   + q^{-1}(q-q^{-1}) sum_l [ G_l W_{l-i-j-1} - G_{i+j+1-l} W_{-l} ]
            int i = a.index, j = b.index - 1;
            Scalar f = factor(2, qm);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_g(t1, K::G, l);
                push_w(t1, l - i - j - 1);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_g(t2, K::G, i + j + 1 - l);
                push_w(t2, -l);
                out.push_back(t2);
            }
            return true;
        }
        if (a.kind == K::Wplus && b.kind == K::G) {
            // W_{i+1} G_{j+1} = G_{j+1} W_{i+1}
            //   + q(q-q^{-1}) sum_l [ G_{i+j+1-l} W_{l+1} - G_l W_{i+j+2-l} ]
            int i = a.index, j = b.index - 1;
            Scalar f = factor(3, qp);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_g(t1, K::G, i + j + 1 - l);
                push_w(t1, l + 1);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_g(t2, K::G, l);
                push_w(t2, i + j + 2 - l);
                out.push_back(t2);
            }
            return true;
        }
        if (a.kind == K::Gtilde && b.kind == K::Wminus) {
            // Gt_{i+1} W_{-j} = W_{-j} Gt_{i+1}
            //   + q^{-1}(q-q^{-1}) sum_l [ W_{l-i-j-1} Gt_l - W_{-l} Gt_{i+j+1-l} ]
            int i = a.index - 1, j = b.index;
            Scalar f = factor(4, qm);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_w(t1, l - i - j - 1);
                push_g(t1, K::Gtilde, l);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_w(t2, -l);
                push_g(t2, K::Gtilde, i + j + 1 - l);
                out.push_back(t2);
            }
            return true;
        }
        if (a.kind == K::Gtilde && b.kind == K::Wplus) {
            // Gt_{i+1} W_{j+1} = W_{j+1} Gt_{i+1}
            //   + q(q-q^{-1}) sum_l [ W_{l+1} Gt_{i+j+1-l} - W_{i+j+2-l} Gt_l ]
            int i = a.index - 1, j = b.index;
            Scalar f = factor(5, qp);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_w(t1, l + 1);
                push_g(t1, K::Gtilde, i + j + 1 - l);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_w(t2, i + j + 2 - l);
                push_g(t2, K::Gtilde, l);
                out.push_back(t2);
            }
            return true;
        }
    } else {
        if (a.kind == K::G && b.kind == K::Wminus) {
            // G_{i+1} W_{-j} = W_{-j} G_{i+1}
            //   + q(q-q^{-1}) sum_l [ W_{-l} G_{i+j+1-l} - W_{l-i-j-1} G_l ]
            int i = a.index - 1, j = b.index;
            Scalar f = factor(2, qp);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_w(t1, -l);
                push_g(t1, K::G, i + j + 1 - l);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_w(t2, l - i - j - 1);
                push_g(t2, K::G, l);
                out.push_back(t2);
            }
            return true;
        }
        if (a.kind == K::Wplus && b.kind == K::G) {
            // same rule as in the main order
            int i = a.index, j = b.index - 1;
            Scalar f = factor(3, qp);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_g(t1, K::G, i + j + 1 - l);
                push_w(t1, l + 1);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_g(t2, K::G, l);
                push_w(t2, i + j + 2 - l);
                out.push_back(t2);
            }
            return true;
        }
        if (a.kind == K::Gtilde && b.kind == K::Wminus) {
            // same rule as in the main order
            int i = a.index - 1, j = b.index;
            Scalar f = factor(4, qm);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_w(t1, l - i - j - 1);
                push_g(t1, K::Gtilde, l);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_w(t2, -l);
                push_g(t2, K::Gtilde, i + j + 1 - l);
                out.push_back(t2);
            }
            return true;
        }
        if (a.kind == K::Wplus && b.kind == K::Gtilde) {
            // W_{i+1} Gt_{j+1} = Gt_{j+1} W_{i+1}
            //   + q^{-1}(q-q^{-1}) sum_l [ Gt_l W_{i+j+2-l} - Gt_{i+j+1-l} W_{l+1} ]
            int i = a.index, j = b.index - 1;
            Scalar f = factor(5, qm);
            for (int l = 0; l <= std::min(i, j); ++l) {
                RuleTerm t1{f, {}, 0};
                push_g(t1, K::Gtilde, l);
                push_w(t1, i + j + 2 - l);
                out.push_back(t1);
                RuleTerm t2{-f, {}, 0};
                push_g(t2, K::Gtilde, i + j + 1 - l);
                push_w(t2, l + 1);
                out.push_back(t2);
            }
            return true;
        }
    }
    // remaining cross-family adjacent pairs commute in this order's table
    return false;
}

}  // namespace detail

/// Rewrites a product of alternating generators into the PBW normal form
/// for the given order: leftmost out-of-order adjacent pair, worklist of
/// pending terms.  Throws RewriteOverflow at the iteration cap rather than
/// returning a partial answer.
inline NormalForm normal_form(std::span<const GenSymbol> expr, PbwOrder order,
                              Scalar prefactor = Scalar(1), RewriteLimits limits = {}) {
    Monomial start;
    start.reserve(expr.size());
    for (const GenSymbol& s : expr) {
        if (s.index < 0) throw std::domain_error("normal_form: negative generator index");
        if (s.index > limits.index_bound)
            throw std::domain_error("normal_form: generator index exceeds the configured bound");
        if ((s.kind == AlternatingKind::G || s.kind == AlternatingKind::Gtilde) && s.index == 0)
            continue;  // the unit
        start.push_back(s);
    }

    NormalForm result(order);
    if (prefactor.is_zero()) return result;
    std::vector<std::pair<Monomial, Scalar>> work;
    work.emplace_back(std::move(start), std::move(prefactor));

    long steps = 0;
    std::vector<detail::RuleTerm> corrections;
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        std::size_t p = 0;
        bool sorted = true;
        for (; p + 1 < m.size(); ++p) {
            if (symbol_rank(order, m[p]) > symbol_rank(order, m[p + 1])) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            result.add_term(m, c);
            continue;
        }
        if (++steps > limits.iteration_cap)
            throw RewriteOverflow("normal_form: iteration cap exceeded");

        GenSymbol a = m[p], b = m[p + 1];
        if (!detail::reduce_pair(order, a, b, corrections)) {
            std::swap(m[p], m[p + 1]);
            work.emplace_back(std::move(m), std::move(c));
            continue;
        }
        for (const detail::RuleTerm& t : corrections) {
            Monomial mc;
            mc.reserve(m.size() - 2 + static_cast<std::size_t>(t.n));
            mc.insert(mc.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(p));
            for (int k = 0; k < t.n; ++k) mc.push_back(t.s[k]);
            mc.insert(mc.end(), m.begin() + static_cast<std::ptrdiff_t>(p) + 2, m.end());
            work.emplace_back(std::move(mc), c * t.c);
        }
        std::swap(m[p], m[p + 1]);
        work.emplace_back(std::move(m), std::move(c));
    }
    return result;
}

inline NormalForm normal_form(std::initializer_list<GenSymbol> expr, PbwOrder order,
                              Scalar prefactor = Scalar(1), RewriteLimits limits = {}) {
    return normal_form(std::span<const GenSymbol>(expr.begin(), expr.size()), order,
                       std::move(prefactor), limits);
}

/// Bilinear extension of normal_form to products of normal forms.
inline NormalForm pbw_mul(const NormalForm& a, const NormalForm& b, RewriteLimits limits = {}) {
    NormalForm::require_same_order(a, b);
    NormalForm r(a.order());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r = r + normal_form(m, a.order(), ca * cb, limits);
        }
    }
    return r;
}

inline NormalForm ring_mul(const NormalForm& a, const NormalForm& b) { return pbw_mul(a, b); }

/// The oracle map: multiply out the generator images in the model.
inline ModelElement to_model(const GenSymbol& s) { return gen_image(s.kind, s.index); }

inline ModelElement to_model(const Monomial& m) {
    ModelElement r = ModelElement::unit();
    for (const GenSymbol& s : m) r = model_mul(r, to_model(s));
    return r;
}

inline ModelElement to_model(const NormalForm& a) {
    ModelElement r;
    for (const auto& [m, c] : a.terms()) r += c * to_model(m);
    return r;
}

}  // namespace uqp
