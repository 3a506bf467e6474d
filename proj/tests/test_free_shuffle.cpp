#include "uqp/damiani.hpp"
#include "uqp/text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <string>

using namespace uqp;

namespace {

FreeElement X() { return FreeElement::letter(words::kX); }
FreeElement Y() { return FreeElement::letter(words::kY); }
FreeElement w(const std::string& s) { return FreeElement::single(words::from_string(s)); }

// Independent combinatorial oracle for the q-shuffle of two words: list
// every interleaving pattern and weight it by the crossing pairs (a letter
// of v emitted before a letter of u contributes pairing(v-letter, u-letter)).
void oracle_rec(const std::string& u, const std::string& v, std::size_t i, std::size_t j,
                std::vector<int>& upos, std::vector<int>& vpos, std::string& out,
                std::map<std::string, Scalar>& acc) {
    if (i == u.size() && j == v.size()) {
        int e = 0;
        for (std::size_t a = 0; a < u.size(); ++a)
            for (std::size_t b = 0; b < v.size(); ++b)
                if (vpos[b] < upos[a])
                    e += pairing(v[b] == 'x' ? words::kX : words::kY,
                                 u[a] == 'x' ? words::kX : words::kY);
        acc[out] += Scalar::q_power(e);
        return;
    }
    if (i < u.size()) {
        upos[i] = static_cast<int>(out.size());
        out.push_back(u[i]);
        oracle_rec(u, v, i + 1, j, upos, vpos, out, acc);
        out.pop_back();
    }
    if (j < v.size()) {
        vpos[j] = static_cast<int>(out.size());
        out.push_back(v[j]);
        oracle_rec(u, v, i, j + 1, upos, vpos, out, acc);
        out.pop_back();
    }
}

FreeElement shuffle_oracle(const std::string& u, const std::string& v) {
    std::map<std::string, Scalar> acc;
    std::vector<int> upos(u.size()), vpos(v.size());
    std::string out;
    oracle_rec(u, v, 0, 0, upos, vpos, out, acc);
    detail::TermVec<Word> terms;
    for (auto& [s, c] : acc) terms.emplace_back(words::from_string(s), c);
    return FreeElement::from_terms(std::move(terms));
}

std::string word_string(int bits, int len) {
    std::string s;
    for (int i = len - 1; i >= 0; --i) s.push_back((bits >> i) & 1 ? 'y' : 'x');
    return s;
}

}  // namespace

TEST_CASE("word encoding") {
    Word w1 = words::from_string("xyy");
    CHECK(words::to_string(w1) == "xyy");
    CHECK(words::length(w1) == 3);
    CHECK(words::x_count(w1) == 1);
    CHECK(words::y_count(w1) == 2);
    CHECK(words::to_string(words::reverse(w1)) == "yyx");
    CHECK(words::to_string(words::swap_xy(w1)) == "yxx");
    CHECK(words::to_string(words::concat(words::from_string("xy"), words::from_string("yx"))) ==
          "xyyx");
    CHECK(words::to_string(words::empty()) == "1");
}

TEST_CASE("concatenation product") {
    CHECK(concat_mul(X(), Y()) == w("xy"));
    FreeElement e = w("yxx");
    CHECK(concat_mul(FreeElement::unit(), e) == e);
    CHECK(concat_mul(X() + Y(), X()) == w("xx") + w("yx"));
}

TEST_CASE("pairing values") {
    CHECK(pairing(words::kX, words::kX) == 2);
    CHECK(pairing(words::kX, words::kY) == -2);
    CHECK(pairing(words::kY, words::kY) == 2);
}

TEST_CASE("shuffle on letters and short words") {
    CHECK(shuffle_mul(X(), Y()) == w("xy") + Scalar::q_power(-2) * w("yx"));
    CHECK(shuffle_mul(X(), X()) == (Scalar(1) + Scalar::q_power(2)) * w("xx"));
    CHECK(shuffle_mul(X(), w("yx")) ==
          w("xyx") + Scalar::q_power(-2) * (Scalar(1) + Scalar::q_power(2)) * w("yxx"));
}

TEST_CASE("shuffle agrees with the combinatorial oracle") {
    for (int la = 0; la <= 3; ++la)
        for (int lb = 0; lb <= 4; ++lb)
            for (int a = 0; a < (1 << la); ++a)
                for (int b = 0; b < (1 << lb); ++b) {
                    std::string u = word_string(a, la), v = word_string(b, lb);
                    FreeElement got = shuffle_mul(FreeElement::single(words::from_string(u)),
                                                  FreeElement::single(words::from_string(v)));
                    CHECK(got == shuffle_oracle(u, v));
                }
}

TEST_CASE("shuffle associativity") {
    // exhaustive on short words
    for (int la = 1; la <= 2; ++la)
        for (int lb = 1; lb <= 2; ++lb)
            for (int lc = 1; lc <= 2; ++lc)
                for (int a = 0; a < (1 << la); ++a)
                    for (int b = 0; b < (1 << lb); ++b)
                        for (int c = 0; c < (1 << lc); ++c) {
                            FreeElement ea = w(word_string(a, la)), eb = w(word_string(b, lb)),
                                        ec = w(word_string(c, lc));
                            CHECK(shuffle_mul(shuffle_mul(ea, eb), ec) ==
                                  shuffle_mul(ea, shuffle_mul(eb, ec)));
                        }
    // randomized longer words
    std::mt19937 gen(777);
    std::uniform_int_distribution<int> len(0, 3), bit(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto rand_word = [&] {
            int l = len(gen);
            std::string s;
            for (int i = 0; i < l; ++i) s.push_back(bit(gen) ? 'y' : 'x');
            return s.empty() ? FreeElement::unit() : w(s);
        };
        FreeElement a = rand_word() + rand_word(), b = rand_word(), c = rand_word();
        CHECK(shuffle_mul(shuffle_mul(a, b), c) == shuffle_mul(a, shuffle_mul(b, c)));
    }
}

TEST_CASE("q-Serre relations vanish") {
    auto mul = [](const FreeElement& a, const FreeElement& b) { return shuffle_mul(a, b); };
    FreeElement x = X(), y = Y();
    FreeElement r1 = commutator(
        x, q_commutator(x, q_commutator(x, y, Scalar::q_power(1), mul), Scalar::q_power(-1), mul),
        mul);
    FreeElement r2 = commutator(
        y, q_commutator(y, q_commutator(y, x, Scalar::q_power(1), mul), Scalar::q_power(-1), mul),
        mul);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());
}

TEST_CASE("letter swap and reversal symmetries") {
    std::mt19937 gen(31337);
    std::uniform_int_distribution<int> len(0, 3), bit(0, 1);
    auto rand_elem = [&] {
        FreeElement e;
        for (int t = 0; t < 2; ++t) {
            int l = len(gen);
            Word wd = words::empty();
            for (int i = 0; i < l; ++i) wd = words::append(wd, bit(gen));
            e += FreeElement::single(wd, Scalar::q_power(bit(gen) ? 1 : -1));
        }
        return e;
    };
    for (int trial = 0; trial < 20; ++trial) {
        FreeElement a = rand_elem(), b = rand_elem();
        CHECK(a.swap_letters().swap_letters() == a);
        CHECK(a.reverse_words().reverse_words() == a);
        CHECK(shuffle_mul(a, b).swap_letters() ==
              shuffle_mul(a.swap_letters(), b.swap_letters()));
        CHECK(shuffle_mul(a, b).reverse_words() ==
              shuffle_mul(b.reverse_words(), a.reverse_words()));
        CHECK(a.swap_letters().reverse_words() == a.reverse_words().swap_letters());
        CHECK(a.tau().tau() == a);
    }
    CHECK(X().swap_letters() == Y());
    CHECK(w("xy").swap_letters() == w("yx"));
    CHECK(w("xyy").reverse_words() == w("yyx"));
    CHECK(X().reverse_words() == X());
    // reverse(x * y) = y * x
    CHECK(shuffle_mul(X(), Y()).reverse_words() == shuffle_mul(Y(), X()));
}

TEST_CASE("word length cap is enforced") {
    FreeElement big = w("xyxyxyxy");  // length 8
    CHECK_THROWS_AS(shuffle_mul(big, big), std::length_error);  // 16 > default 14
    WordLenGuard guard(16);
    CHECK(shuffle_mul(big, big).num_terms() > 0);
}
