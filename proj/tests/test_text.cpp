#include "uqp/text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace uqp;

namespace {

std::mt19937& rng() {
    static std::mt19937 gen(4242);
    return gen;
}

Scalar random_scalar() {
    std::uniform_int_distribution<int> coeff(-9, 9), exp(-4, 4), nterms(1, 3), frac(0, 1);
    auto poly = [&] {
        LaurentPoly p;
        int n = nterms(rng());
        for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coeff(rng()), exp(rng()));
        return p;
    };
    LaurentPoly num = poly();
    if (frac(rng())) {
        LaurentPoly den = poly();
        if (den.is_zero()) den = LaurentPoly::one();
        return Scalar(num, den);
    }
    return Scalar(num);
}

}  // namespace

TEST_CASE("scalar text round-trip") {
    CHECK(parse_scalar("(q^2 - q^-2) / (q - q^-1)") ==
          Scalar(LaurentPoly::q_power(2) - LaurentPoly::q_power(-2),
                 LaurentPoly::q_power(1) - LaurentPoly::q_power(-1)));
    CHECK(parse_scalar("0") == Scalar());
    CHECK(parse_scalar("-3*q^2 + 1") == Scalar(-3) * Scalar::q_power(2) + Scalar(1));
    CHECK(parse_scalar("q^-1").to_string() == "q^-1");
    for (int i = 0; i < 100; ++i) {
        Scalar s = random_scalar();
        CHECK(parse_scalar(s.to_string()) == s);
    }
}

TEST_CASE("free element text round-trip") {
    FreeElement e = parse_free_element("(q^-4 - 1)*xy");
    CHECK(e == FreeElement::single(words::from_string("xy"),
                                   Scalar::q_power(-4) - Scalar(1)));
    CHECK(parse_free_element("0").is_zero());
    CHECK(parse_free_element("xy + q^-2*yx") ==
          FreeElement::single(words::from_string("xy")) +
              FreeElement::single(words::from_string("yx"), Scalar::q_power(-2)));
    std::uniform_int_distribution<int> len(0, 5), bit(0, 1), nterms(1, 4);
    for (int i = 0; i < 60; ++i) {
        detail::TermVec<Word> terms;
        int n = nterms(rng());
        for (int t = 0; t < n; ++t) {
            Word w = words::empty();
            int l = len(rng());
            for (int k = 0; k < l; ++k) w = words::append(w, bit(rng()));
            terms.emplace_back(w, random_scalar());
        }
        FreeElement e2 = FreeElement::from_terms(std::move(terms));
        CHECK(parse_free_element(e2.to_string()) == e2);
    }
}

TEST_CASE("model element text round-trip") {
    ModelElement m = parse_model_element("xyx + x (*) z1");
    CHECK(m == gen_image(AlternatingKind::Wminus, 1));
    CHECK(parse_model_element("(q + q^-1)*1 (*) z1") == zvee_element(1));
    std::uniform_int_distribution<int> len(0, 4), bit(0, 1), zi(0, 3), ze(1, 2), nterms(1, 4);
    for (int i = 0; i < 60; ++i) {
        detail::TermVec<MKey> terms;
        int n = nterms(rng());
        for (int t = 0; t < n; ++t) {
            Word w = words::empty();
            int l = len(rng());
            for (int k = 0; k < l; ++k) w = words::append(w, bit(rng()));
            ZKey z = zmon::one();
            if (int zn = zi(rng())) z = zmon::z(zn, ze(rng()));
            terms.emplace_back(MKey{w, z}, random_scalar());
        }
        ModelElement m2 = ModelElement::from_terms(std::move(terms));
        CHECK(parse_model_element(m2.to_string()) == m2);
    }
}

TEST_CASE("generator token parsing") {
    using K = AlternatingKind;
    CHECK(*parse_gen_token("W[-2]") == GenSymbol{K::Wminus, 2});
    CHECK(*parse_gen_token("W[0]") == GenSymbol{K::Wminus, 0});
    CHECK(*parse_gen_token("W[3]") == GenSymbol{K::Wplus, 2});
    CHECK(*parse_gen_token("Wt[3]") == GenSymbol{K::Wplus, 2});
    CHECK(*parse_gen_token("G[1]") == GenSymbol{K::G, 1});
    CHECK(*parse_gen_token("Gt[2]") == GenSymbol{K::Gtilde, 2});
    CHECK_FALSE(parse_gen_token("Wt[0]").has_value());
    CHECK_FALSE(parse_gen_token("H[1]").has_value());
    CHECK_FALSE(parse_gen_token("G[x]").has_value());
}

TEST_CASE("parse errors are reported") {
    CHECK_THROWS_AS(parse_scalar("q^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("(q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_free_element("xz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_free_element("xy +"), std::invalid_argument);
}
