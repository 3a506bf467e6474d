#include "uqp/damiani.hpp"
#include "uqp/text.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace uqp;

namespace {
FreeElement w(const std::string& s) { return FreeElement::single(words::from_string(s)); }
}

TEST_CASE("E_delta") {
    FreeElement ed = e_delta_1();
    CHECK(ed == (Scalar::q_power(-4) - Scalar(1)) * w("xy"));
    CHECK(ed.swap_letters() == (Scalar::q_power(-4) - Scalar(1)) * w("yx"));
    CHECK(ed.is_homogeneous(1, 1));
}

TEST_CASE("alternating words") {
    CHECK(alternating_word(AlternatingKind::Wminus, 2) == w("xyxyx"));
    CHECK(alternating_word(AlternatingKind::Gtilde, 0) == FreeElement::unit());
    CHECK(alternating_word(AlternatingKind::Wplus, 1) == w("yxy"));
    CHECK(alternating_word(AlternatingKind::G, 3) == w("yxyxyx"));
    CHECK_THROWS_AS(alternating_word(AlternatingKind::G, -1), std::domain_error);
}

TEST_CASE("Damiani base cases and gradings") {
    DamianiCache dc;
    CHECK(dc.e_minus(0) == w("x"));
    CHECK(dc.e_plus(0) == w("y"));
    // n = 1 instantiates the commutator recursion directly
    Scalar norm = (Scalar::q_power(1) + Scalar::q_power(-1)).inv();
    FreeElement direct = norm * (shuffle_mul(e_delta_1(), w("x")) - shuffle_mul(w("x"), e_delta_1()));
    CHECK(dc.e_minus(1) == direct);
    CHECK(dc.e_minus(2).is_homogeneous(3, 2));
    CHECK(dc.e_plus(1).is_homogeneous(1, 2));
    CHECK(dc.e_delta(3).is_homogeneous(3, 3));
    // E_{0 delta} is the scalar constant
    CHECK(dc.e_delta(0) == FreeElement::unit(-q_bracket().inv()));
    CHECK_THROWS_AS(damiani_e_delta(0, dc), std::domain_error);
}

TEST_CASE("two E_delta constructions agree") {
    DamianiCache dc;
    CHECK(dc.e_delta(1) == e_delta_1());
    for (int n = 1; n <= 5; ++n) CHECK(dc.e_delta(n) == damiani_e_delta_alt(n, dc));
}

TEST_CASE("tau symmetry of the PBW generators") {
    DamianiCache dc;
    for (int n = 0; n <= 4; ++n) CHECK(dc.e_minus(n).tau() == dc.e_plus(n));
    for (int n = 1; n <= 4; ++n) CHECK(dc.e_delta(n).tau() == dc.e_delta(n));
}

TEST_CASE("the E_delta family commutes") {
    DamianiCache dc;
    WordLenGuard guard(16);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            CHECK(shuffle_mul(dc.e_delta(i), dc.e_delta(j)) ==
                  shuffle_mul(dc.e_delta(j), dc.e_delta(i)));
}

TEST_CASE("Catalan-sized supports") {
    // the images are far sparser than their bidegree components; the
    // support sizes follow the Catalan numbers
    DamianiCache dc;
    CHECK(dc.e_minus(3).num_terms() == 5);
    CHECK(dc.e_minus(4).num_terms() == 14);
    CHECK(dc.e_delta(4).num_terms() == 14);
}
