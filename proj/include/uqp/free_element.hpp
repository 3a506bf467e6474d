#pragma once

#include "uqp/scalar.hpp"
#include "uqp/word.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace uqp {

namespace detail {

/// Shared machinery for sparse linear combinations kept as sorted
/// (key, Scalar) vectors with no zero coefficients.
template <class Key>
using TermVec = std::vector<std::pair<Key, Scalar>>;

template <class Key>
void sort_and_collect(TermVec<Key>& t) {
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        Key k = t[i].first;
        Scalar c = std::move(t[i].second);
        for (++i; i < t.size() && t[i].first == k; ++i) c += t[i].second;
        if (!c.is_zero()) t[out++] = {k, std::move(c)};
    }
    t.resize(out);
}

template <class Key>
TermVec<Key> merge_linear(const TermVec<Key>& a, const TermVec<Key>& b, bool subtract) {
    TermVec<Key> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Scalar c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!c.is_zero()) r.emplace_back(a[i].first, std::move(c));
            ++i; ++j;
        }
    }
    return r;
}

}  // namespace detail

/// Element of the free algebra V on x, y: a finite Scalar-linear
/// combination of words, stored sorted by packed word (so grouped by
/// length) with no zero coefficients.
class FreeElement {
public:
    using Term = std::pair<Word, Scalar>;

    FreeElement() = default;

    static FreeElement zero() { return {}; }
    static FreeElement unit(Scalar c = Scalar(1)) { return single(words::empty(), std::move(c)); }
    static FreeElement single(Word w, Scalar c = Scalar(1)) {
        FreeElement e;
        if (!c.is_zero()) e.terms_.emplace_back(w, std::move(c));
        return e;
    }
    static FreeElement letter(int c) { return single(words::single(c)); }
    static FreeElement from_terms(detail::TermVec<Word> terms) {
        FreeElement e;
        e.terms_ = std::move(terms);
        detail::sort_and_collect(e.terms_);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Scalar coeff(Word w) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                   [](const Term& t, Word k) { return t.first < k; });
        return (it != terms_.end() && it->first == w) ? it->second : Scalar();
    }

    friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
        FreeElement r;
        r.terms_ = detail::merge_linear(a.terms_, b.terms_, false);
        return r;
    }
    friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
        FreeElement r;
        r.terms_ = detail::merge_linear(a.terms_, b.terms_, true);
        return r;
    }
    FreeElement operator-() const {
        FreeElement r = *this;
        for (Term& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend FreeElement operator*(const Scalar& c, const FreeElement& a) {
        if (c.is_zero()) return {};
        FreeElement r = a;
        for (Term& t : r.terms_) t.second *= c;
        return r;
    }
    FreeElement& operator+=(const FreeElement& b) { *this = *this + b; return *this; }
    FreeElement& operator-=(const FreeElement& b) { *this = *this - b; return *this; }

    friend bool operator==(const FreeElement& a, const FreeElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

    /// Bilinear extension of word concatenation (the free product).
    friend FreeElement concat_mul(const FreeElement& a, const FreeElement& b) {
        detail::TermVec<Word> t;
        t.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& ta : a.terms_)
            for (const Term& tb : b.terms_)
                t.emplace_back(words::concat(ta.first, tb.first), ta.second * tb.second);
        return from_terms(std::move(t));
    }

    /// The letter-swap map realizing sigma; an algebra map for the
    /// q-shuffle product.
    FreeElement swap_letters() const {
        detail::TermVec<Word> t = terms_;
        for (auto& [w, c] : t) w = words::swap_xy(w);
        return from_terms(std::move(t));
    }

    /// Word reversal realizing the antiautomorphism dagger.
    FreeElement reverse_words() const {
        detail::TermVec<Word> t = terms_;
        for (auto& [w, c] : t) w = words::reverse(w);
        return from_terms(std::move(t));
    }

    /// tau = swap o reverse.
    FreeElement tau() const { return swap_letters().reverse_words(); }

    /// True when every term has the given numbers of x and y letters.
    bool is_homogeneous(int nx, int ny) const {
        for (const Term& t : terms_)
            if (words::x_count(t.first) != nx || words::y_count(t.first) != ny) return false;
        return true;
    }

    int max_word_length() const {
        return terms_.empty() ? 0 : words::length(terms_.back().first);
    }

    /// Inverse when the element is a nonzero scalar multiple of the empty
    /// word (the only invertible elements here); nullopt otherwise.
    std::optional<FreeElement> try_inverse() const {
        if (terms_.size() != 1 || terms_[0].first != words::empty()) return std::nullopt;
        return unit(terms_[0].second.inv());
    }

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

}  // namespace uqp
