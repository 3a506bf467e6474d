#include "uqp/model_element.hpp"
#include "uqp/series.hpp"
#include "uqp/text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace uqp;

namespace {

Series1<Scalar> scalar_series(std::initializer_list<Scalar> cs) {
    Series1<Scalar> s(static_cast<int>(cs.size()) - 1);
    int n = 0;
    for (const Scalar& c : cs) s.coeff(n++) = c;
    return s;
}

ModelElement zm(std::initializer_list<std::pair<int, int>> exps, Scalar c = Scalar(1)) {
    ZKey z = zmon::one();
    for (auto [n, e] : exps) z = zmon::mul(z, zmon::z(n, e));
    return ModelElement::single({words::empty(), z}, c);
}

}  // namespace

TEST_CASE("series multiplication") {
    auto a = scalar_series({Scalar(1), Scalar(2), Scalar(3)});
    CHECK(a * Series1<Scalar>::one(2) == a);
    auto one_plus_t = scalar_series({Scalar(1), Scalar(1), Scalar(0)});
    auto one_minus_t = scalar_series({Scalar(1), Scalar(-1), Scalar(0)});
    auto prod = one_plus_t * one_minus_t;
    CHECK(prod.coeff(0) == Scalar(1));
    CHECK(prod.coeff(1) == Scalar(0));
    CHECK(prod.coeff(2) == Scalar(-1));
    // truncation is the minimum of the operands
    CHECK((a * Series1<Scalar>::one(1)).trunc() == 1);
}

TEST_CASE("series inverse reproduces the closed forms in commuting variables") {
    // a(t) = 1 + z1 t + z2 t^2 + z3 t^3 + z4 t^4 over the z-polynomial ring
    const int N = 4;
    Series1<ModelElement> a(N);
    a.coeff(0) = ModelElement::unit();
    for (int n = 1; n <= N; ++n) a.coeff(n) = zm({{n, 1}});
    Series1<ModelElement> b = a.inverse();
    CHECK(b.coeff(0) == ModelElement::unit());
    CHECK(b.coeff(1) == zm({{1, 1}}, Scalar(-1)));
    CHECK(b.coeff(2) == zm({{1, 2}}) + zm({{2, 1}}, Scalar(-1)));
    CHECK(b.coeff(3) == zm({{1, 1}, {2, 1}}, Scalar(2)) + zm({{1, 3}}, Scalar(-1)) +
                            zm({{3, 1}}, Scalar(-1)));
    CHECK(b.coeff(4) == zm({{1, 4}}) + zm({{1, 1}, {3, 1}}, Scalar(2)) + zm({{2, 2}}) +
                            zm({{1, 2}, {2, 1}}, Scalar(-3)) + zm({{4, 1}}, Scalar(-1)));
    CHECK((a * b).is_zero() == false);
    CHECK(a * b == Series1<ModelElement>::one(N));
    CHECK(b * a == Series1<ModelElement>::one(N));
}

TEST_CASE("series inverse with noncommutative coefficients") {
    WordLenGuard guard(16);
    Series1<FreeElement> a(3);
    a.coeff(0) = FreeElement::unit();
    a.coeff(1) = FreeElement::single(words::from_string("x"));
    a.coeff(2) = FreeElement::single(words::from_string("yx"), Scalar::q_power(2));
    a.coeff(3) = FreeElement::single(words::from_string("y"), Scalar(-1));
    Series1<FreeElement> b = a.inverse();
    CHECK(a * b == Series1<FreeElement>::one(3));
    CHECK(b * a == Series1<FreeElement>::one(3));
    CHECK(b.inverse() == a);
}

TEST_CASE("non-invertible constant term is rejected") {
    Series1<FreeElement> a(2);
    a.coeff(0) = FreeElement::single(words::from_string("x"));
    CHECK_THROWS_AS(a.inverse(), std::domain_error);
    Series1<Scalar> z(2);
    CHECK_THROWS_AS(z.inverse(), std::domain_error);
}

TEST_CASE("argument scaling") {
    auto a = scalar_series({Scalar(1), Scalar(2), Scalar(3)});
    CHECK(a.scale_arg(Scalar(1)) == a);
    auto b = a.scale_arg(Scalar::q_power(1));
    CHECK(b.coeff(1) == Scalar(2) * Scalar::q_power(1));
    CHECK(b.coeff(2) == Scalar(3) * Scalar::q_power(2));
    CHECK(a.scale_arg(xi()).scale_arg(xi().inv()) == a);
    // multiplicative in the scaling constant
    CHECK(a.scale_arg(Scalar::q_power(1)).scale_arg(Scalar::q_power(2)) ==
          a.scale_arg(Scalar::q_power(3)));
}

TEST_CASE("shift down") {
    auto t = scalar_series({Scalar(0), Scalar(1)});
    auto one = t.shift_down();
    CHECK(one.trunc() == 0);
    CHECK(one.coeff(0) == Scalar(1));
    auto a = scalar_series({Scalar(2), Scalar(5), Scalar(7)});
    CHECK(a.shift_up().shift_down() == a);  // compared at truncation 1
    CHECK_THROWS_AS(a.shift_down(), std::domain_error);
}

TEST_CASE("divided difference") {
    // a(t) = t^2 gives (a(s)-a(t))/(s-t) = s + t
    auto a = scalar_series({Scalar(0), Scalar(0), Scalar(1)});
    auto dd = divided_difference(a);
    CHECK(dd.coeff(1, 0) == Scalar(1));
    CHECK(dd.coeff(0, 1) == Scalar(1));
    CHECK(dd.coeff(0, 0) == Scalar(0));
    CHECK(divided_difference(scalar_series({Scalar(4)})).is_zero());

    // (s - t) * dd(a) == a(s) - a(t) for random coefficients
    std::mt19937 gen(99);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Series1<Scalar> r(5);
    for (int n = 0; n <= 5; ++n) r.coeff(n) = Scalar(coeff(gen));
    auto d = divided_difference(r);
    auto lhs = d.mul_s() - d.mul_t();
    auto rhs = Series2<Scalar>::from_s(r, 4) - Series2<Scalar>::from_t(r, 4);
    CHECK(series2_check_zero(lhs - rhs));
}

TEST_CASE("two-variable zero test") {
    Series2<Scalar> z(3);
    CHECK(series2_check_zero(z));
    auto f = Series2<Scalar>::from_s(scalar_series({Scalar(1), Scalar(2)}), 3);
    CHECK((f.mul_s() - f.mul_s()).is_zero());
    CHECK_FALSE(series2_check_zero(f));
    CHECK(f.first_nonzero() == std::pair<int, int>(0, 0));
}

TEST_CASE("noncommutative coefficient order is preserved") {
    WordLenGuard guard(8);
    Series1<FreeElement> xs(2), ys(2);
    xs.coeff(1) = FreeElement::single(words::from_string("x"));
    ys.coeff(1) = FreeElement::single(words::from_string("y"));
    auto prod = xs * ys;
    CHECK(prod.coeff(2) == shuffle_mul(FreeElement::single(words::from_string("x")),
                                       FreeElement::single(words::from_string("y"))));
}
