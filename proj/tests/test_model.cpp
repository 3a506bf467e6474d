#include "uqp/model_element.hpp"
#include "uqp/text.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace uqp;
using K = AlternatingKind;

namespace {
ModelElement term(const std::string& w, std::initializer_list<std::pair<int, int>> exps,
                  Scalar c = Scalar(1)) {
    ZKey z = zmon::one();
    for (auto [n, e] : exps) z = zmon::mul(z, zmon::z(n, e));
    return ModelElement::single({words::from_string(w), z}, c);
}
}  // namespace

TEST_CASE("z-monomial packing") {
    ZKey z = zmon::mul(zmon::z(1, 2), zmon::z(3));
    CHECK(zmon::exponent(z, 1) == 2);
    CHECK(zmon::exponent(z, 3) == 1);
    CHECK(zmon::grade(z) == 2 * 1 * 2 + 2 * 3);
    CHECK(zmon::to_string(z) == "z1^2 z3");
    CHECK(zmon::mul(zmon::one(), z) == z);
    CHECK_THROWS_AS(zmon::z(17), std::domain_error);
    CHECK_THROWS_AS(zmon::mul(zmon::z(1, 15), zmon::z(1, 15)), std::overflow_error);
}

TEST_CASE("generator images") {
    CHECK(gen_image(K::Wminus, 0) == term("x", {}));
    CHECK(gen_image(K::G, 1) == term("yx", {}) + term("1", {{1, 1}}));
    CHECK(gen_image(K::Wminus, 1) == term("xyx", {}) + term("x", {{1, 1}}));
    CHECK(gen_image(K::Gtilde, 0) == ModelElement::unit());
    for (int n = 0; n <= 4; ++n) {
        CHECK(gen_image(K::Wminus, n).is_homogeneous(2 * n + 1));
        CHECK(gen_image(K::Wplus, n).is_homogeneous(2 * n + 1));
        CHECK(gen_image(K::G, n).is_homogeneous(2 * n));
        CHECK(gen_image(K::Gtilde, n).is_homogeneous(2 * n));
    }
}

TEST_CASE("model product basics") {
    ModelElement a = gen_image(K::G, 2);
    CHECK(model_mul(ModelElement::unit(), a) == a);
    CHECK(model_mul(a, ModelElement::unit()) == a);
    ModelElement z1 = term("1", {{1, 1}});
    CHECK(model_mul(z1, z1) == term("1", {{1, 2}}));
    // central factor: z2 commutes with x (x) 1
    ModelElement x = term("x", {});
    ModelElement z2 = term("1", {{2, 1}});
    CHECK(model_mul(x, z2) == model_mul(z2, x));
    // the product is shuffle (x) commutative
    CHECK(model_mul(x, term("y", {{1, 1}})) ==
          term("xy", {{1, 1}}) + term("yx", {{1, 1}}, Scalar::q_power(-2)));
}

TEST_CASE("Z^vee elements") {
    CHECK(zvee_element(0) == ModelElement::unit());
    CHECK(zvee_element(1) == term("1", {{1, 1}}, Scalar::q_power(1) + Scalar::q_power(-1)));
    CHECK(zvee_element(2) ==
          term("1", {{2, 1}}, Scalar::q_power(2) + Scalar::q_power(-2)) + term("1", {{1, 2}}));
    for (int n = 0; n <= 4; ++n) CHECK(zvee_element(n) == zvee_expected(n));
}

TEST_CASE("sigma and dagger on the model") {
    for (int k = 0; k <= 3; ++k) {
        CHECK(gen_image(K::Wminus, k).apply_sigma() == gen_image(K::Wplus, k));
        CHECK(gen_image(K::G, k).apply_sigma() == gen_image(K::Gtilde, k));
        CHECK(gen_image(K::G, k).apply_dagger() == gen_image(K::Gtilde, k));
        CHECK(gen_image(K::Wminus, k).apply_dagger() == gen_image(K::Wminus, k));
        CHECK(gen_image(K::G, k).apply_tau() == gen_image(K::G, k));
    }
    ModelElement z1 = term("1", {{1, 1}});
    CHECK(z1.apply_sigma() == z1);
    ModelElement a = gen_image(K::Wminus, 2) + term("xy", {{1, 1}}, Scalar::q_power(3));
    CHECK(a.apply_sigma().apply_sigma() == a);
    CHECK(a.apply_dagger().apply_dagger() == a);
    CHECK(a.apply_sigma().apply_dagger() == a.apply_dagger().apply_sigma());
    // dagger is an antiautomorphism
    ModelElement b = gen_image(K::G, 1);
    CHECK(model_mul(a, b).apply_dagger() == model_mul(b.apply_dagger(), a.apply_dagger()));
}

TEST_CASE("counit to the free algebra") {
    for (int n = 0; n <= 3; ++n)
        CHECK(gen_image(K::Wminus, n).counit_z() == alternating_word(K::Wminus, n));
    CHECK(zvee_element(1).counit_z().is_zero());
    CHECK(ModelElement::unit().counit_z() == FreeElement::unit());
    // algebra map: counit(ab) = counit(a) * counit(b)
    ModelElement a = gen_image(K::Wminus, 1), b = gen_image(K::Gtilde, 1);
    CHECK(model_mul(a, b).counit_z() == shuffle_mul(a.counit_z(), b.counit_z()));
}

TEST_CASE("defining relations hold in the model (small indices)") {
    Scalar q1 = Scalar::q_power(1), qm1 = Scalar::q_power(-1), qm2 = Scalar::q_power(-2);
    ModelElement W0 = gen_image(K::Wminus, 0), W1 = gen_image(K::Wplus, 0);
    for (int k = 0; k <= 2; ++k) {
        ModelElement rhs = (Scalar(1) - qm2) * (gen_image(K::Gtilde, k + 1) - gen_image(K::G, k + 1));
        CHECK(model_mul(W0, gen_image(K::Wplus, k)) - model_mul(gen_image(K::Wplus, k), W0) == rhs);
        CHECK(model_mul(gen_image(K::Wminus, k), W1) - model_mul(W1, gen_image(K::Wminus, k)) == rhs);
        CHECK(q1 * model_mul(W0, gen_image(K::G, k + 1)) -
                  qm1 * model_mul(gen_image(K::G, k + 1), W0) ==
              q_bracket() * gen_image(K::Wminus, k + 1));
    }
}

TEST_CASE("model element text round-trip") {
    ModelElement a = gen_image(K::Wminus, 2) + term("1", {{2, 1}}, -q_bracket().inv());
    CHECK(parse_model_element(a.to_string()) == a);
}
