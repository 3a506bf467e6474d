#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace uqp {

/// A word over {x, y} packed into a uint64: a sentinel 1-bit at position
/// len, below it one bit per letter (x = 0, y = 1), first letter highest.
/// The empty word is 1.  Integer order on the packed value sorts words by
/// length, then lexicographically -- which groups terms by length for free.
using Word = std::uint64_t;

namespace words {

inline constexpr int kMaxLen = 62;
inline constexpr int kX = 0;
inline constexpr int kY = 1;

inline constexpr Word empty() { return 1; }

inline int length(Word w) { return 63 - std::countl_zero(w); }

inline bool is_empty(Word w) { return w == 1; }

/// Letter at position i (0-based from the start).
inline int letter(Word w, int i) {
    int len = length(w);
    return static_cast<int>((w >> (len - 1 - i)) & 1u);
}

inline Word append(Word w, int c) { return (w << 1) | static_cast<Word>(c); }

inline Word prepend(Word w, int c) {
    int len = length(w);
    Word body = w ^ (Word(1) << len);
    return (Word(2 | c) << len) | body;
}

inline Word concat(Word a, Word b) {
    int lb = length(b);
    return (a << lb) | (b ^ (Word(1) << lb));
}

inline Word single(int c) { return append(empty(), c); }

inline int y_count(Word w) { return std::popcount(w) - 1; }
inline int x_count(Word w) { return length(w) - y_count(w); }

/// Letter swap x <-> y.
inline Word swap_xy(Word w) {
    int len = length(w);
    return w ^ ((Word(1) << len) - 1);
}

inline Word reverse(Word w) {
    int len = length(w);
    Word r = empty();
    for (int i = 0; i < len; ++i) r = append(r, static_cast<int>((w >> i) & 1u));
    return r;
}

inline std::string to_string(Word w) {
    int len = length(w);
    if (len == 0) return "1";
    std::string s;
    s.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) s.push_back(letter(w, i) == kX ? 'x' : 'y');
    return s;
}

inline Word from_string(const std::string& s) {
    if (s == "1") return empty();
    if (s.size() > static_cast<std::size_t>(kMaxLen))
        throw std::invalid_argument("word too long");
    Word w = empty();
    for (char ch : s) {
        if (ch == 'x') w = append(w, kX);
        else if (ch == 'y') w = append(w, kY);
        else throw std::invalid_argument("word letters must be x or y");
    }
    return w;
}

/// x(yx)^k, y(xy)^k, (yx)^k, (xy)^k builders.
inline Word alt_word(int first, int len) {
    Word w = empty();
    int c = first;
    for (int i = 0; i < len; ++i) { w = append(w, c); c ^= 1; }
    return w;
}

}  // namespace words
}  // namespace uqp
