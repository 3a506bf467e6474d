#pragma once

#include "uqp/pbw.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace uqp {

// ---------------------------------------------------------------------------
// printers
// ---------------------------------------------------------------------------

inline std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high(); e >= low(); --e) {
        Int c = coeff(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = c < 0 ? Int(-c) : c;
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

inline std::string Scalar::to_string() const {
    auto wrap = [](const LaurentPoly& p) {
        std::string s = p.to_string();
        return p.num_terms() > 1 ? "(" + s + ")" : s;
    };
    if (is_laurent()) return num_.to_string();
    return wrap(num_) + " / " + wrap(den_);
}

namespace detail {
inline std::string coeff_word_string(const Scalar& c, const std::string& word_part) {
    bool plain = c.is_laurent() && c.num().num_terms() <= 1;
    std::string cs = c.to_string();
    if (word_part.empty() || word_part == "1") {
        return plain ? cs : "(" + cs + ")";
    }
    if (c.is_one()) return word_part;
    return (plain ? cs : "(" + cs + ")") + "*" + word_part;
}
}  // namespace detail

inline std::string FreeElement::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        s += detail::coeff_word_string(t.second, words::to_string(t.first));
    }
    return s;
}

inline std::string ModelElement::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        std::string body = detail::coeff_word_string(t.second, words::to_string(t.first.w));
        if (t.first.z != zmon::one()) body += " (*) " + zmon::to_string(t.first.z);
        s += body;
    }
    return s;
}

inline std::string gen_token(const GenSymbol& s) {
    switch (s.kind) {
        case AlternatingKind::Wminus: return "W[" + std::to_string(-s.index) + "]";
        case AlternatingKind::Wplus: return "W[" + std::to_string(s.index + 1) + "]";
        case AlternatingKind::G: return "G[" + std::to_string(s.index) + "]";
        case AlternatingKind::Gtilde: return "Gt[" + std::to_string(s.index) + "]";
    }
    throw std::logic_error("unreachable");
}

inline std::string NormalForm::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (const GenSymbol& g : m) {
            if (!mono.empty()) mono += " ";
            mono += gen_token(g);
        }
        s += detail::coeff_word_string(c, mono.empty() ? "1" : mono);
    }
    return s;
}

// ---------------------------------------------------------------------------
// parsers
// ---------------------------------------------------------------------------

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    char peek_raw(std::size_t ahead = 0) {
        return i_ + ahead < s_.size() ? s_[i_ + ahead] : '\0';
    }
    char get() {
        skip_ws();
        return i_ < s_.size() ? s_[i_++] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++i_; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument(std::string("parse error: expected '") + c + "' at \"" +
                                        std::string(s_.substr(i_)) + "\"");
    }
    long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) (void)eat('+');
        skip_ws();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            throw std::invalid_argument("parse error: expected an integer");
        long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            v = v * 10 + (s_[i_++] - '0');
        return neg ? -v : v;
    }
    Int big_integer() {
        skip_ws();
        std::string digits;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            digits.push_back(s_[i_++]);
        if (digits.empty()) throw std::invalid_argument("parse error: expected an integer");
        return Int(digits);
    }
    bool at_end() {
        skip_ws();
        return i_ >= s_.size();
    }
    std::size_t pos() const { return i_; }
    void rewind(std::size_t p) { i_ = p; }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

// scalar grammar:  expr := term (('+'|'-') term)*
//                  term := factor (('*'|'/') factor)*
//                  factor := ['-'] (int | q ['^' int] | '(' expr ')') ['^' int]
// a '*' immediately followed by a word letter ends the scalar (element syntax)
inline Scalar parse_scalar_expr(Lexer& lx);

inline Scalar parse_scalar_factor(Lexer& lx) {
    if (lx.eat('-')) return -parse_scalar_factor(lx);
    Scalar v;
    char c = lx.peek();
    if (c == '(') {
        lx.get();
        v = parse_scalar_expr(lx);
        lx.expect(')');
    } else if (c == 'q') {
        lx.get();
        int e = 1;
        if (lx.eat('^')) e = static_cast<int>(lx.integer());
        v = Scalar::q_power(e);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
        lx.skip_ws();
        v = Scalar(lx.big_integer());
    } else {
        throw std::invalid_argument("parse error: expected a scalar factor");
    }
    if (lx.peek() == '^') {
        lx.get();
        v = v.pow(static_cast<int>(lx.integer()));
    }
    return v;
}

inline Scalar parse_scalar_term(Lexer& lx) {
    Scalar v = parse_scalar_factor(lx);
    while (true) {
        char c = lx.peek();
        if (c == '*') {
            // stop if this is the coefficient--word separator
            std::size_t save = lx.pos();
            lx.get();
            char n = lx.peek();
            if (n == 'x' || n == 'y') { lx.rewind(save); return v; }
            lx.rewind(save);
            lx.get();
            v *= parse_scalar_factor(lx);
        } else if (c == '/') {
            lx.get();
            v /= parse_scalar_factor(lx);
        } else {
            return v;
        }
    }
}

inline Scalar parse_scalar_expr(Lexer& lx) {
    Scalar v = parse_scalar_term(lx);
    while (true) {
        char c = lx.peek();
        if (c == '+') { lx.get(); v += parse_scalar_term(lx); }
        else if (c == '-') { lx.get(); v -= parse_scalar_term(lx); }
        else return v;
    }
}

inline Word parse_word_token(Lexer& lx) {
    std::string s;
    char c = lx.peek();
    if (c == '1') { lx.get(); return words::empty(); }
    while (true) {
        c = lx.peek_raw();
        if (c == 'x' || c == 'y') { s.push_back(c); lx.get(); }
        else break;
    }
    if (s.empty()) throw std::invalid_argument("parse error: expected a word over x,y");
    return words::from_string(s);
}

inline ZKey parse_z_monomial(Lexer& lx) {
    ZKey z = zmon::one();
    while (lx.peek() == 'z') {
        lx.get();
        int n = static_cast<int>(lx.integer());
        int e = 1;
        if (lx.peek() == '^') { lx.get(); e = static_cast<int>(lx.integer()); }
        z = zmon::mul(z, zmon::z(n, e));
    }
    return z;
}

}  // namespace detail

inline Scalar parse_scalar(std::string_view s) {
    detail::Lexer lx(s);
    Scalar v = detail::parse_scalar_expr(lx);
    if (!lx.at_end()) throw std::invalid_argument("parse error: trailing input in scalar");
    return v;
}

namespace detail {
// one element term: word | scalar | scalar '*' word; a scalar-only term is
// a multiple of the empty word
inline std::pair<Word, Scalar> parse_element_term(Lexer& lx) {
    char c = lx.peek();
    if (c == 'x' || c == 'y') return {parse_word_token(lx), Scalar(1)};
    Scalar coeff = parse_scalar_term(lx);
    if (lx.peek() == '*') {
        lx.get();
        return {parse_word_token(lx), coeff};
    }
    return {words::empty(), coeff};
}
}  // namespace detail

inline FreeElement parse_free_element(std::string_view s) {
    detail::Lexer lx(s);
    if (lx.peek() == '0') {
        lx.get();
        if (lx.at_end()) return FreeElement::zero();
        throw std::invalid_argument("parse error: trailing input");
    }
    detail::TermVec<Word> terms;
    bool neg = lx.eat('-');
    while (true) {
        auto [w, c] = detail::parse_element_term(lx);
        terms.emplace_back(w, neg ? -c : c);
        if (lx.eat('+')) neg = false;
        else if (lx.eat('-')) neg = true;
        else break;
    }
    if (!lx.at_end()) throw std::invalid_argument("parse error: trailing input in element");
    return FreeElement::from_terms(std::move(terms));
}

inline ModelElement parse_model_element(std::string_view s) {
    detail::Lexer lx(s);
    if (lx.peek() == '0') {
        lx.get();
        if (lx.at_end()) return ModelElement::zero();
        throw std::invalid_argument("parse error: trailing input");
    }
    detail::TermVec<MKey> terms;
    bool neg = lx.eat('-');
    while (true) {
        auto [w, c] = detail::parse_element_term(lx);
        ZKey z = zmon::one();
        // optional " (*) z1^a ..." tail
        std::size_t save = lx.pos();
        if (lx.eat('(')) {
            if (lx.eat('*') && lx.eat(')')) z = detail::parse_z_monomial(lx);
            else lx.rewind(save);
        }
        terms.emplace_back(MKey{w, z}, neg ? -c : c);
        if (lx.eat('+')) neg = false;
        else if (lx.eat('-')) neg = true;
        else break;
    }
    if (!lx.at_end()) throw std::invalid_argument("parse error: trailing input in element");
    return ModelElement::from_terms(std::move(terms));
}

/// Generator tokens: W[-2], W[3] (= Wt[3]), G[1], Gt[2].
inline std::optional<GenSymbol> parse_gen_token(std::string_view tok) {
    auto bracket = [&](std::size_t at) -> std::optional<long> {
        if (at >= tok.size() || tok[at] != '[' || tok.back() != ']') return std::nullopt;
        try {
            std::size_t used = 0;
            long v = std::stol(std::string(tok.substr(at + 1, tok.size() - at - 2)), &used);
            if (used != tok.size() - at - 2) return std::nullopt;
            return v;
        } catch (...) {
            return std::nullopt;
        }
    };
    if (tok.starts_with("Gt")) {
        auto v = bracket(2);
        if (!v || *v < 0) return std::nullopt;
        return GenSymbol{AlternatingKind::Gtilde, static_cast<int>(*v)};
    }
    if (tok.starts_with("G")) {
        auto v = bracket(1);
        if (!v || *v < 0) return std::nullopt;
        return GenSymbol{AlternatingKind::G, static_cast<int>(*v)};
    }
    if (tok.starts_with("Wt")) {
        auto v = bracket(2);
        if (!v || *v < 1) return std::nullopt;
        return GenSymbol{AlternatingKind::Wplus, static_cast<int>(*v) - 1};
    }
    if (tok.starts_with("W")) {
        auto v = bracket(1);
        if (!v) return std::nullopt;
        if (*v <= 0) return GenSymbol{AlternatingKind::Wminus, static_cast<int>(-*v)};
        return GenSymbol{AlternatingKind::Wplus, static_cast<int>(*v) - 1};
    }
    return std::nullopt;
}

}  // namespace uqp
