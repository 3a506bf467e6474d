#include "uqp/checks.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace uqp;

TEST_CASE("registry lookup") {
    CHECK(find_check("qserre") != nullptr);
    CHECK(find_check("main-theorem") != nullptr);
    CHECK(find_check("nope") == nullptr);
    CHECK_THROWS_AS(run_check("nope"), std::invalid_argument);
    CHECK(check_registry().size() == 13);
    for (const CheckDef& d : check_registry()) CHECK_FALSE(d.anchor.empty());
}

TEST_CASE("qserre check passes") {
    CheckOutcome o = run_check("qserre");
    CHECK(o.status == CheckStatus::Pass);
    CHECK(o.counterexample.empty());
}

TEST_CASE("small-bound runs of the heavier checks") {
    ParamOverrides ov;
    ov.degree = 3;
    ov.degree2 = 2;
    ov.index_bound = 2;
    ov.grade_bound = 4;
    for (const char* name :
         {"damiani-rr", "gf-uqp", "uce-relations", "uce-rr", "zvee", "compare", "factorization",
          "main-theorem", "recover", "pbw-independence"}) {
        CheckOutcome o = run_check(name, ov);
        INFO(o.name << ": " << o.counterexample);
        CHECK(o.status == CheckStatus::Pass);
    }
}

TEST_CASE("order filter") {
    ParamOverrides ov;
    ov.index_bound = 1;
    ov.grade_bound = 3;
    ov.order = OrderFilter::MainOnly;
    CheckOutcome o = run_check("rewrite-oracle", ov);
    CHECK(o.status == CheckStatus::Pass);
    CHECK(o.params.find("order=main") != std::string::npos);
}

TEST_CASE("exact rank") {
    ExactMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = Scalar(1);
    CHECK(rank_over_field(id) == 3);
    ExactMatrix z(2, 5);
    CHECK(rank_over_field(z) == 0);
    // a dependent symbolic row: r2 = q r0 + (1+q) r1
    ExactMatrix m(3, 3);
    Scalar q1 = Scalar::q_power(1);
    m.at(0, 0) = q_bracket();
    m.at(0, 2) = Scalar(1);
    m.at(1, 1) = Scalar(2) * q1;
    m.at(1, 2) = q1.inv();
    for (std::size_t c = 0; c < 3; ++c)
        m.at(2, c) = q1 * m.at(0, c) + (Scalar(1) + q1) * m.at(1, c);
    CHECK(rank_over_field(m) == 2);
}

TEST_CASE("independence counts at tiny grades") {
    using checks::ordered_monomials;
    CHECK(ordered_monomials(PbwOrder::Main, 0).size() == 1);
    CHECK(ordered_monomials(PbwOrder::Main, 1).size() == 3);   // 1, W0, W1
    CHECK(ordered_monomials(PbwOrder::Main, 2).size() == 8);   // + G1, Gt1, W0^2, W0W1, W1^2
    CHECK(ordered_monomials(PbwOrder::Appendix, 2).size() == 8);
    ParamOverrides ov;
    ov.grade_bound = 2;
    CHECK(run_check("pbw-independence", ov).status == CheckStatus::Pass);
}

TEST_CASE("failure reports carry the first offending coordinate") {
    // run a check body against a deliberately broken identity
    CheckRun run(CheckParams{});
    FreeElement bogus = FreeElement::single(words::from_string("xy"), q_bracket());
    bool thrown = false;
    try {
        run.zero(bogus, "demo identity");
    } catch (const CheckFailure& f) {
        thrown = true;
        CHECK(f.message.find("demo identity") != std::string::npos);
        CHECK(f.message.find("xy") != std::string::npos);
    }
    CHECK(thrown);
}

TEST_CASE("mutation guards break identities while active") {
    {
        MutationGuard mg(-1, -1);
        // x*y now carries q^{+2} on the crossed term
        FreeElement x = FreeElement::letter(words::kX), y = FreeElement::letter(words::kY);
        CHECK(shuffle_mul(x, y) ==
              FreeElement::single(words::from_string("xy")) +
                  FreeElement::single(words::from_string("yx"), Scalar::q_power(2)));
        CHECK(zvee_element(1) != zvee_expected(1));
    }
    // guard restored
    CHECK(zvee_element(1) == zvee_expected(1));
    {
        MutationGuard mg(1, 0);  // perturb the main-order W+W- rule
        NormalForm nf = normal_form({GenSymbol{AlternatingKind::Wplus, 0},
                                     GenSymbol{AlternatingKind::Wminus, 0}},
                                    PbwOrder::Main);
        CHECK(to_model(nf) != model_mul(to_model(GenSymbol{AlternatingKind::Wplus, 0}),
                                        to_model(GenSymbol{AlternatingKind::Wminus, 0})));
    }
    CheckOutcome o = run_check("self-test");
    CHECK(o.status == CheckStatus::Pass);
}
