#pragma once

#include "uqp/config.hpp"
#include "uqp/free_element.hpp"

#include <cstdint>
#include <map>
#include <span>

namespace uqp {

/// The bilinear form on letters: <u,v> = 2 if u = v, else -2.
inline int pairing(int u, int v) {
    return config().pairing_sign * (u == v ? 2 : -2);
}

namespace detail {

/// High-water mark of product support sizes, for per-check statistics.
inline std::size_t& max_terms_stat() {
    thread_local std::size_t v = 0;
    return v;
}
inline void note_terms_stat(std::size_t n) {
    if (n > max_terms_stat()) max_terms_stat() = n;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct WordHash {
    std::size_t operator()(Word w) const { return static_cast<std::size_t>(splitmix64(w)); }
};

/// Numerator coefficients that fit comfortably in int64; products against
/// the int64 path-count polynomials then accumulate exactly in __int128
/// (|coeff| < 2^48, path counts < 2^28, so every partial sum stays far
/// below 2^127).  Oversized coefficients take the arbitrary-precision side
/// path instead.
inline constexpr std::int64_t kFastCoeffBound = std::int64_t(1) << 48;

inline bool to_int64_coeffs(const LaurentPoly& p, std::vector<std::int64_t>& out) {
    out.clear();
    out.reserve(p.raw_coeffs().size());
    for (const Int& c : p.raw_coeffs()) {
        if (c > -kFastCoeffBound && c < kFastCoeffBound) {
            out.push_back(static_cast<std::int64_t>(c));
        } else {
            return false;
        }
    }
    return true;
}

/// Open-addressing accumulator: key -> dense __int128 coefficient vector
/// indexed by q-exponent.  Keys must never equal the default Key{}.
template <class Key, class Hash>
class OpenAcc {
public:
    struct Slot {
        Key key{};
        int low = 0;
        std::vector<__int128> c;
    };

    explicit OpenAcc(std::size_t expect = 64) {
        std::size_t cap = 16;
        while (cap < expect * 2) cap <<= 1;
        slots_.resize(cap);
    }

    Slot& at(const Key& k) {
        if (count_ * 2 >= slots_.size()) grow_();
        std::size_t mask = slots_.size() - 1;
        std::size_t i = Hash{}(k) & mask;
        while (true) {
            Slot& s = slots_[i];
            if (s.key == k) return s;
            if (s.key == Key{}) {
                s.key = k;
                ++count_;
                return s;
            }
            i = (i + 1) & mask;
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) {
        for (Slot& s : slots_)
            if (!(s.key == Key{})) fn(s);
    }

    std::size_t size() const { return count_; }

    /// slot += (coeff polynomial) * m * q^shift
    static void add_mul(Slot& s, std::span<const std::int64_t> cs, int cs_low, std::int64_t m,
                        int shift) {
        int lo = cs_low + shift;
        int hi = lo + static_cast<int>(cs.size()) - 1;
        reserve_range(s, lo, hi);
        __int128* dst = s.c.data() + (lo - s.low);
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i] != 0) dst[i] += static_cast<__int128>(cs[i]) * m;
    }

    static void reserve_range(Slot& s, int lo, int hi) {
        if (s.c.empty()) {
            s.low = lo - 4;
            s.c.assign(static_cast<std::size_t>(hi - lo + 9), 0);
            return;
        }
        int cur_hi = s.low + static_cast<int>(s.c.size()) - 1;
        if (lo >= s.low && hi <= cur_hi) return;
        int nlo = std::min(s.low, lo) - 4;
        int nhi = std::max(cur_hi, hi) + 4;
        std::vector<__int128> nc(static_cast<std::size_t>(nhi - nlo + 1), 0);
        std::copy(s.c.begin(), s.c.end(), nc.begin() + (s.low - nlo));
        s.c = std::move(nc);
        s.low = nlo;
    }

    static LaurentPoly slot_poly(const Slot& s) {
        std::vector<Int> c;
        c.reserve(s.c.size());
        for (__int128 v : s.c) {
            bool neg = v < 0;
            unsigned __int128 a = neg ? static_cast<unsigned __int128>(-v)
                                      : static_cast<unsigned __int128>(v);
            Int x = static_cast<std::uint64_t>(a >> 64);
            x <<= 64;
            x += static_cast<std::uint64_t>(a);
            c.push_back(neg ? Int(-x) : x);
        }
        return LaurentPoly::from_raw(s.low, std::move(c));
    }

private:
    void grow_() {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(old.size() * 2, Slot{});
        std::size_t mask = slots_.size() - 1;
        for (Slot& s : old) {
            if (s.key == Key{}) continue;
            std::size_t i = Hash{}(s.key) & mask;
            while (!(slots_[i].key == Key{})) i = (i + 1) & mask;
            slots_[i] = std::move(s);
        }
    }

    std::vector<Slot> slots_;
    std::size_t count_ = 0;
};

/// q-shuffle engine for one homogeneous group (words of equal length and
/// bidegree) against a single right word.  The left words are shared
/// through their prefix trie: the crossing weight of a right-letter
/// emission depends only on the bidegree of the pending left suffix, which
/// is uniform per trie node for a homogeneous group.  Path counts are
/// collected per q^2-exponent as int64 (bounded by C(a+b,a), far below
/// overflow for the word lengths the encoding admits).
class TrieDP {
public:
    struct Mini {
        std::uint32_t off = 0;
        std::int32_t len = 0;
        std::int32_t base = 0;  // exponent of first entry, q^2 units
    };

    /// words: nonempty, same length, same bidegree, strictly increasing.
    void build(std::span<const Word> words) {
        nodes_.clear();
        leaf_node_.clear();
        len_ = words::length(words.front());
        const int balance = words::x_count(words.front()) - words::y_count(words.front());
        nodes_.push_back(Node{-1, 0, balance, words::empty()});
        std::vector<std::int32_t> stack{0};  // path of node ids for the previous word
        Word prev = 0;
        for (Word w : words) {
            int common = 0;
            if (prev != 0) {
                common = len_;
                while (common > 0 && prefix_of(w, common) != prefix_of(prev, common)) --common;
            }
            stack.resize(static_cast<std::size_t>(common) + 1);
            for (int d = common; d < len_; ++d) {
                int letter = words::letter(w, d);
                Node n;
                n.parent = stack.back();
                n.letter = static_cast<std::int8_t>(letter);
                n.prefix = words::append(nodes_[static_cast<std::size_t>(n.parent)].prefix, letter);
                int bal = nodes_[static_cast<std::size_t>(n.parent)].suffix_bal;
                n.suffix_bal = bal - (letter == words::kX ? 1 : -1);
                nodes_.push_back(n);
                stack.push_back(static_cast<std::int32_t>(nodes_.size()) - 1);
            }
            leaf_node_.push_back(stack.back());
            prev = w;
        }
    }

    int left_length() const { return len_; }

    /// sink(word_index, words, minis, arena) once per left word, where the
    /// parallel arrays list the terms of left_word * v in increasing order.
    template <class LeafSink>
    void run(Word v, LeafSink&& sink) {
        const int b = words::length(v);
        if (len_ + b > config().max_word_length)
            throw std::length_error("shuffle product exceeds the word-length cap (" +
                                    std::to_string(config().max_word_length) +
                                    "); raise it for deeper computations");
        const int sign = config().pairing_sign;
        arena_.clear();
        for (auto& layer : layers_) {
            layer.resize(nodes_.size());
        }
        std::vector<Cell>* cur = &layers_[0];
        std::vector<Cell>* prev = &layers_[1];
        // layer j = 0: each node holds its prefix with coefficient 1
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
            Cell& c = (*cur)[n];
            c.clear();
            c.w.push_back(nodes_[n].prefix);
            c.p.push_back(push_one_());
        }
        for (int j = 1; j <= b; ++j) {
            std::swap(cur, prev);
            const int vc = words::letter(v, j - 1);
            for (std::size_t n = 0; n < nodes_.size(); ++n) {
                const int w_q2 =
                    sign * (vc == words::kX ? nodes_[n].suffix_bal : -nodes_[n].suffix_bal);
                Cell& out = (*cur)[n];
                out.clear();
                const Cell& from_v = (*prev)[n];
                if (nodes_[n].parent < 0) {
                    out.w.push_back(words::append(from_v.w[0], vc));
                    Mini m = from_v.p[0];
                    m.base += w_q2;
                    out.p.push_back(m);
                    continue;
                }
                const Cell& from_u = (*cur)[static_cast<std::size_t>(nodes_[n].parent)];
                merge_(from_u, nodes_[n].letter, from_v, vc, w_q2, out);
            }
        }
        for (std::size_t i = 0; i < leaf_node_.size(); ++i) {
            const Cell& c = (*cur)[static_cast<std::size_t>(leaf_node_[i])];
            sink(i, c.w, c.p, arena_);
        }
    }

private:
    struct Node {
        std::int32_t parent;
        std::int8_t letter = 0;
        std::int32_t suffix_bal;  // x-count minus y-count of the pending suffix
        Word prefix;
    };
    struct Cell {
        std::vector<Word> w;
        std::vector<Mini> p;
        void clear() { w.clear(); p.clear(); }
    };

    static Word prefix_of(Word w, int len) {
        int full = words::length(w);
        return (w >> (full - len)) | (Word(1) << len);
    }

    Mini push_one_() {
        Mini m{static_cast<std::uint32_t>(arena_.size()), 1, 0};
        arena_.push_back(1);
        return m;
    }

    void merge_(const Cell& cu, int lu, const Cell& cv, int lv, int wv, Cell& out) {
        std::size_t i = 0, j = 0;
        const std::size_t nu = cu.w.size(), nv = cv.w.size();
        out.w.reserve(nu + nv);
        out.p.reserve(nu + nv);
        while (i < nu || j < nv) {
            Word a = i < nu ? words::append(cu.w[i], lu) : ~Word(0);
            Word b = j < nv ? words::append(cv.w[j], lv) : ~Word(0);
            if (a < b) {
                out.w.push_back(a);
                out.p.push_back(cu.p[i++]);
            } else if (b < a) {
                Mini m = cv.p[j++];
                m.base += wv;
                out.w.push_back(b);
                out.p.push_back(m);
            } else {
                Mini mb = cv.p[j++];
                mb.base += wv;
                out.w.push_back(a);
                out.p.push_back(add_(cu.p[i++], mb));
            }
        }
    }

    Mini add_(const Mini& a, const Mini& b) {
        int lo = std::min(a.base, b.base);
        int hi = std::max(a.base + a.len, b.base + b.len);
        Mini r{static_cast<std::uint32_t>(arena_.size()), hi - lo, lo};
        arena_.resize(arena_.size() + static_cast<std::size_t>(hi - lo), 0);
        std::int64_t* dst = arena_.data() + r.off;
        const std::int64_t* pa = arena_.data() + a.off;
        const std::int64_t* pb = arena_.data() + b.off;
        for (int k = 0; k < a.len; ++k) dst[a.base - lo + k] += pa[k];
        for (int k = 0; k < b.len; ++k) dst[b.base - lo + k] += pb[k];
        return r;
    }

    std::vector<Node> nodes_;
    std::vector<std::int32_t> leaf_node_;
    int len_ = 0;
    std::vector<Cell> layers_[2];
    std::vector<std::int64_t> arena_;
};

inline TrieDP& trie_dp() {
    thread_local TrieDP dp;
    return dp;
}

/// Least common multiple of the coefficient denominators, and the
/// numerators scaled to that common denominator.
template <class Key>
LaurentPoly hoist_denominators(const std::vector<std::pair<Key, Scalar>>& terms,
                               std::vector<LaurentPoly>& nums) {
    LaurentPoly d = LaurentPoly::one();
    for (const auto& [w, c] : terms)
        if (!c.is_laurent()) d = divexact(d * c.den(), gcd(d, c.den()));
    nums.clear();
    nums.reserve(terms.size());
    for (const auto& [w, c] : terms) {
        LaurentPoly n = c.num();
        if (!(d.is_one() && c.is_laurent())) n *= divexact(d, c.den());
        nums.push_back(std::move(n));
    }
    return d;
}

/// Generic driver shared by the free-algebra and model products.  Left
/// terms arrive pre-grouped into homogeneous batches; every batch is
/// multiplied against every right term.
template <class Acc, class Key, class MakeKey>
void grouped_shuffle_product(
    Acc& acc, std::map<Key, LaurentPoly>& slow_acc,
    const std::vector<std::pair<std::vector<Word>, std::vector<const LaurentPoly*>>>& groups,
    std::span<const Word> right_words, std::span<const LaurentPoly> right_nums,
    MakeKey&& make_key) {
    TrieDP& dp = trie_dp();
    std::vector<std::int64_t> cuv64;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& [words_g, nums_g] = groups[g];
        dp.build(words_g);
        for (std::size_t j = 0; j < right_words.size(); ++j) {
            if (right_nums[j].is_zero()) continue;
            dp.run(right_words[j], [&](std::size_t leaf, const std::vector<Word>& w,
                                       const std::vector<TrieDP::Mini>& p,
                                       const std::vector<std::int64_t>& arena) {
                LaurentPoly cuv = *nums_g[leaf] * right_nums[j];
                if (cuv.is_zero()) return;
                if (to_int64_coeffs(cuv, cuv64)) {
                    std::span<const std::int64_t> cs(cuv64);
                    const int clow = cuv.low();
                    for (std::size_t t = 0; t < w.size(); ++t) {
                        auto& slot = acc.at(make_key(g, w[t], j));
                        const std::int64_t* mini = arena.data() + p[t].off;
                        for (int k = 0; k < p[t].len; ++k)
                            if (mini[k] != 0)
                                Acc::add_mul(slot, cs, clow, mini[k],
                                             2 * (p[t].base + k));
                    }
                } else {
                    // exact fallback for oversized coefficients
                    for (std::size_t t = 0; t < w.size(); ++t) {
                        LaurentPoly& dst = slow_acc[make_key(g, w[t], j)];
                        const std::int64_t* mini = arena.data() + p[t].off;
                        for (int k = 0; k < p[t].len; ++k)
                            if (mini[k] != 0)
                                dst.add_scaled(cuv, Int(mini[k]), 2 * (p[t].base + k));
                    }
                }
            });
        }
    }
}

}  // namespace detail

/// Rosso's q-shuffle product, extended bilinearly; on letters it is
/// u*v = uv + q^{<u,v>}vu.
inline FreeElement shuffle_mul(const FreeElement& a, const FreeElement& b) {
    if (a.is_zero() || b.is_zero()) return FreeElement::zero();
    using Acc = detail::OpenAcc<Word, detail::WordHash>;
    std::vector<LaurentPoly> na, nb;
    LaurentPoly da = detail::hoist_denominators(a.terms(), na);
    LaurentPoly db = detail::hoist_denominators(b.terms(), nb);
    Scalar inv_d = Scalar(LaurentPoly::one(), da * db);

    // group the left terms by (length, bidegree); terms are sorted by the
    // packed word, so groups of one length are contiguous
    std::map<std::pair<int, int>, std::size_t> group_of;
    std::vector<std::pair<std::vector<Word>, std::vector<const LaurentPoly*>>> groups;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        Word w = a.terms()[i].first;
        auto key = std::make_pair(words::length(w), words::y_count(w));
        auto [it, fresh] = group_of.emplace(key, groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].first.push_back(w);
        groups[it->second].second.push_back(&na[i]);
    }
    std::vector<Word> rw;
    rw.reserve(b.terms().size());
    for (const auto& [w, c] : b.terms()) rw.push_back(w);

    Acc acc(a.num_terms() * b.num_terms());
    std::map<Word, LaurentPoly> slow;
    detail::grouped_shuffle_product(acc, slow, groups, rw, nb,
                                    [](std::size_t, Word w, std::size_t) { return w; });

    detail::note_terms_stat(acc.size());
    detail::TermVec<Word> out;
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
    for (auto& [w, p] : slow) {
        if (p.is_zero()) continue;
        out.emplace_back(w, inv_d.is_one() ? Scalar(std::move(p)) : Scalar(std::move(p)) * inv_d);
    }
    return FreeElement::from_terms(std::move(out));
}

inline FreeElement ring_mul(const FreeElement& a, const FreeElement& b) {
    return shuffle_mul(a, b);
}

}  // namespace uqp
