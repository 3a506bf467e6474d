#pragma once

#include "uqp/damiani.hpp"
#include "uqp/zmonomial.hpp"

#include <optional>

namespace uqp {

/// Key of a model term: word tensor z-monomial.  Ordered by (z, word), so
/// the z-free part is the leading run of the sorted term vector.
struct MKey {
    Word w = 0;
    ZKey z = 0;
    friend bool operator==(const MKey&, const MKey&) = default;
    friend bool operator<(const MKey& a, const MKey& b) {
        return a.z != b.z ? a.z < b.z : a.w < b.w;
    }
};

/// Element of V (x) F[z_1, z_2, ...], the concrete model of the alternating
/// central extension: a sparse Scalar-linear combination of (word, z)
/// pairs.  The product is the q-shuffle on words and the commutative
/// product on z's.
class ModelElement {
public:
    using Term = std::pair<MKey, Scalar>;

    ModelElement() = default;

    static ModelElement zero() { return {}; }
    static ModelElement unit(Scalar c = Scalar(1)) {
        return single({words::empty(), zmon::one()}, std::move(c));
    }
    static ModelElement single(MKey k, Scalar c = Scalar(1)) {
        ModelElement e;
        if (!c.is_zero()) e.terms_.emplace_back(k, std::move(c));
        return e;
    }
    /// u (x) 1: the embedding of the free algebra given by z_k -> 0 splitting.
    static ModelElement embed(const FreeElement& a) {
        ModelElement e;
        e.terms_.reserve(a.num_terms());
        for (const auto& [w, c] : a.terms()) e.terms_.emplace_back(MKey{w, zmon::one()}, c);
        return e;
    }
    static ModelElement from_terms(detail::TermVec<MKey> terms) {
        ModelElement e;
        e.terms_ = std::move(terms);
        detail::sort_and_collect(e.terms_);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Scalar coeff(MKey k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, const MKey& m) { return t.first < m; });
        return (it != terms_.end() && it->first == k) ? it->second : Scalar();
    }

    friend ModelElement operator+(const ModelElement& a, const ModelElement& b) {
        ModelElement r;
        r.terms_ = detail::merge_linear(a.terms_, b.terms_, false);
        return r;
    }
    friend ModelElement operator-(const ModelElement& a, const ModelElement& b) {
        ModelElement r;
        r.terms_ = detail::merge_linear(a.terms_, b.terms_, true);
        return r;
    }
    ModelElement operator-() const {
        ModelElement r = *this;
        for (Term& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend ModelElement operator*(const Scalar& c, const ModelElement& a) {
        if (c.is_zero()) return {};
        ModelElement r = a;
        for (Term& t : r.terms_) t.second *= c;
        return r;
    }
    ModelElement& operator+=(const ModelElement& b) { *this = *this + b; return *this; }
    ModelElement& operator-=(const ModelElement& b) { *this = *this - b; return *this; }

    friend bool operator==(const ModelElement& a, const ModelElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ModelElement& a, const ModelElement& b) { return !(a == b); }

    /// Letter swap on the word factor; the algebra automorphism sigma.
    ModelElement apply_sigma() const {
        detail::TermVec<MKey> t = terms_;
        for (auto& [k, c] : t) k.w = words::swap_xy(k.w);
        return from_terms(std::move(t));
    }

    /// Word reversal on the word factor; the antiautomorphism dagger.
    ModelElement apply_dagger() const {
        detail::TermVec<MKey> t = terms_;
        for (auto& [k, c] : t) k.w = words::reverse(k.w);
        return from_terms(std::move(t));
    }

    ModelElement apply_tau() const { return apply_sigma().apply_dagger(); }

    /// The retraction z_k -> 0: keeps only z-free terms, as an element of V.
    FreeElement counit_z() const {
        detail::TermVec<Word> t;
        for (const Term& term : terms_) {
            if (term.first.z != zmon::one()) break;  // z-free terms sort first
            t.emplace_back(term.first.w, term.second);
        }
        return FreeElement::from_terms(std::move(t));
    }

    /// grade = word length + sum 2n * exp(z_n).
    static int term_grade(const MKey& k) { return words::length(k.w) + zmon::grade(k.z); }
    bool is_homogeneous(int grade) const {
        for (const Term& t : terms_)
            if (term_grade(t.first) != grade) return false;
        return true;
    }

    std::optional<ModelElement> try_inverse() const {
        if (terms_.size() != 1 || !(terms_[0].first == MKey{words::empty(), zmon::one()}))
            return std::nullopt;
        return unit(terms_[0].second.inv());
    }

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

namespace detail {
struct MKeyHash {
    std::size_t operator()(const MKey& k) const {
        return static_cast<std::size_t>(splitmix64(k.w ^ splitmix64(k.z)));
    }
};
}  // namespace detail

/// Bilinear product (u (x) p)(v (x) r) = (u * v) (x) pr.
inline ModelElement model_mul(const ModelElement& a, const ModelElement& b) {
    if (a.is_zero() || b.is_zero()) return ModelElement::zero();
    using Acc = detail::OpenAcc<MKey, detail::MKeyHash>;
    std::vector<LaurentPoly> na, nb;
    LaurentPoly da = detail::hoist_denominators(a.terms(), na);
    LaurentPoly db = detail::hoist_denominators(b.terms(), nb);
    Scalar inv_d = Scalar(LaurentPoly::one(), da * db);

    // group the left terms by (z-monomial, length, bidegree)
    std::map<std::tuple<ZKey, int, int>, std::size_t> group_of;
    std::vector<std::pair<std::vector<Word>, std::vector<const LaurentPoly*>>> groups;
    std::vector<ZKey> group_z;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const MKey& k = a.terms()[i].first;
        auto key = std::make_tuple(k.z, words::length(k.w), words::y_count(k.w));
        auto [it, fresh] = group_of.emplace(key, groups.size());
        if (fresh) {
            groups.emplace_back();
            group_z.push_back(k.z);
        }
        groups[it->second].first.push_back(k.w);
        groups[it->second].second.push_back(&na[i]);
    }
    std::vector<Word> rw;
    std::vector<ZKey> rz;
    rw.reserve(b.terms().size());
    for (const auto& [k, c] : b.terms()) {
        rw.push_back(k.w);
        rz.push_back(k.z);
    }

    Acc acc(a.num_terms() * b.num_terms());
    std::map<MKey, LaurentPoly> slow;
    detail::grouped_shuffle_product(acc, slow, groups, rw, nb,
                                    [&](std::size_t g, Word w, std::size_t j) {
                                        return MKey{w, zmon::mul(group_z[g], rz[j])};
                                    });

    detail::note_terms_stat(acc.size());
    detail::TermVec<MKey> out;
    out.reserve(acc.size() + slow.size());
    acc.for_each([&](Acc::Slot& s) {
        LaurentPoly p = Acc::slot_poly(s);
        auto it = slow.find(s.key);
        if (it != slow.end()) {
            p += it->second;
            slow.erase(it);
        }
        if (p.is_zero()) return;
        out.emplace_back(s.key, inv_d.is_one() ? Scalar(std::move(p))
                                               : Scalar(std::move(p)) * inv_d);
    });
    for (auto& [k, p] : slow) {
        if (p.is_zero()) continue;
        out.emplace_back(k, inv_d.is_one() ? Scalar(std::move(p)) : Scalar(std::move(p)) * inv_d);
    }
    return ModelElement::from_terms(std::move(out));
}

inline ModelElement ring_mul(const ModelElement& a, const ModelElement& b) {
    return model_mul(a, b);
}

/// Image of the alternating generator under phi followed by natural (x) id:
///   W_{-n} -> sum_k x(yx)^{n-k} (x) z_k      (the generator of grade 2n+1)
///   W_{n+1} -> sum_k y(xy)^{n-k} (x) z_k
///   G_n -> sum_k (yx)^{n-k} (x) z_k,  Gtilde_n -> sum_k (xy)^{n-k} (x) z_k.
inline ModelElement gen_image(AlternatingKind kind, int n) {
    if (n < 0) throw std::domain_error("gen_image: negative index");
    detail::TermVec<MKey> t;
    for (int k = 0; k <= n; ++k) {
        ZKey z = k == 0 ? zmon::one() : zmon::z(k);
        int m = n - k;
        Word w;
        switch (kind) {
            case AlternatingKind::Wminus: w = words::alt_word(words::kX, 2 * m + 1); break;
            case AlternatingKind::Wplus: w = words::alt_word(words::kY, 2 * m + 1); break;
            case AlternatingKind::G: w = words::alt_word(words::kY, 2 * m); break;
            case AlternatingKind::Gtilde: w = words::alt_word(words::kX, 2 * m); break;
        }
        t.emplace_back(MKey{w, z}, Scalar(1));
    }
    return ModelElement::from_terms(std::move(t));
}

/// Z^vee_n = sum_{k=0}^n G_k Gtilde_{n-k} q^{n-2k}
///           - q sum_{k=0}^{n-1} W_{-k} W_{n-k} q^{n-1-2k};  Z^vee_0 = 1.
inline ModelElement zvee_element(int n) {
    if (n < 0) throw std::domain_error("zvee_element: negative index");
    if (n == 0) return ModelElement::unit();
    ModelElement r;
    for (int k = 0; k <= n; ++k)
        r += Scalar::q_power(n - 2 * k) *
             model_mul(gen_image(AlternatingKind::G, k), gen_image(AlternatingKind::Gtilde, n - k));
    for (int k = 0; k <= n - 1; ++k)
        r -= Scalar::q_power(n - 2 * k) *
             model_mul(gen_image(AlternatingKind::Wminus, k),
                       gen_image(AlternatingKind::Wplus, n - k - 1));
    return r;
}

/// 1 (x) z^vee_n where z^vee_n = sum_{k=0}^n z_k z_{n-k} q^{n-2k}; the
/// expected phi-image of Z^vee_n.
inline ModelElement zvee_expected(int n) {
    if (n < 0) throw std::domain_error("zvee_expected: negative index");
    if (n == 0) return ModelElement::unit();
    detail::TermVec<MKey> t;
    for (int k = 0; k <= n; ++k) {
        ZKey z = zmon::one();
        if (k > 0) z = zmon::mul(z, zmon::z(k));
        if (n - k > 0) z = zmon::mul(z, zmon::z(n - k));
        t.emplace_back(MKey{words::empty(), z}, Scalar::q_power(n - 2 * k));
    }
    return ModelElement::from_terms(std::move(t));
}

}  // namespace uqp
