#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/basefield.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

TEST_CASE("field strings") {
    CHECK(parse_field("Q").is_rational());
    auto K = parse_field("Q(sqrt5)");
    CHECK(K.is_real_quadratic());
    CHECK(K.discriminant == 5);
    CHECK(parse_field("Q(sqrt{-3})").discriminant == -3);
    CHECK(parse_field("Q(sqrt-1)").discriminant == -4);
    CHECK(parse_field("Q(sqrt2)").discriminant == 8);
    CHECK(parse_field("Q(sqrt-5)").discriminant == -20);
    CHECK_THROWS_AS(parse_field("Q(sqrt 8)"), InvalidInput);
    CHECK_THROWS_AS(parse_field("R"), InvalidInput);
    CHECK_THROWS_AS(parse_field("Q(sqrt4)"), InvalidInput);
}

TEST_CASE("supported base fields") {
    for (int d : {-1, -2, -3, -7, -11}) CHECK(make_quadratic_field(d, FieldRole::Base).is_supported_base());
    CHECK(make_rational_field().is_supported_base());
    CHECK_THROWS_AS(make_quadratic_field(-5, FieldRole::Base), Unsupported);
    CHECK_THROWS_AS(make_quadratic_field(2, FieldRole::Base), Unsupported);
    CHECK(make_quadratic_field(-3).w == 6);
    CHECK(make_quadratic_field(-1).w == 4);
    CHECK(make_quadratic_field(-7).w == 2);
}

TEST_CASE("element arithmetic") {
    auto K = make_quadratic_field(5);
    QuadElement w = K.omega();
    CHECK(w.norm() == -1);
    CHECK(w.trace() == 1);
    QuadElement x = K.element(Rational(3, 2), Rational(-7, 3));
    CHECK(x * x.inverse() == K.one());
    CHECK((x * w).norm() == x.norm() * w.norm());
    CHECK(x.conjugate().conjugate() == x);
    auto [r, q] = K.element(0, 1).sqrt_form();
    CHECK(r == Rational(1, 2));
    CHECK(q == Rational(1, 2));
    CHECK(w.embed().real() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
    CHECK(w.embed_conjugate().real() == doctest::Approx((1 - std::sqrt(5.0)) / 2).epsilon(1e-15));
}

TEST_CASE("fundamental units") {
    // 1 + sqrt2, (1 + sqrt5)/2, 2 + sqrt3
    CHECK(fundamental_unit(2) == QuadElement::from_sqrt_form(1, 1, 2));
    CHECK(fundamental_unit(5) == QuadElement::from_sqrt_form(Rational(1, 2), Rational(1, 2), 5));
    CHECK(fundamental_unit(3) == QuadElement::from_sqrt_form(2, 1, 3));
    CHECK(fundamental_unit(2).norm() == -1);
    CHECK(fundamental_unit(3).norm() == 1);
    // 1520 + 273 sqrt31
    CHECK(fundamental_unit(31) == QuadElement::from_sqrt_form(1520, 273, 31));
    CHECK(make_quadratic_field(5).regulator == doctest::Approx(0.48121182505960347).epsilon(1e-14));
}

TEST_CASE("roots of unity") {
    CHECK(roots_of_unity(-1).size() == 4);
    CHECK(roots_of_unity(-3).size() == 6);
    CHECK(roots_of_unity(-7).size() == 2);
}

TEST_CASE("ideals") {
    auto K = make_quadratic_field(-5);
    auto A = FracIdeal::hnf(K, 2, 1, 1);
    CHECK(A.norm() == 2);
    auto A2 = multiply(K, A, A);
    CHECK(A2 == FracIdeal::principal(K, K.element(2)));
    CHECK(multiply(K, A, A.inverse(K)) == FracIdeal::principal(K, K.one()));
    CHECK(A.conjugate(K) == A);
    auto B = FracIdeal::from_generators(K, {K.element(3), K.element(1, 1)});
    CHECK(B.norm() == 3);

    auto Q = make_rational_field();
    auto h = FracIdeal::principal(Q, QuadElement::rational(Rational(-3, 4)));
    CHECK(h.norm() == Rational(3, 4));
}

TEST_CASE("dual ideals") {
    auto Fi = make_quadratic_field(-1, FieldRole::Base);
    auto O = FracIdeal::principal(Fi, Fi.one());
    // the different of Z[i] is (2)
    CHECK(dual_ideal(Fi, O).norm() == Rational(1, 4));
    auto F3 = make_quadratic_field(-3, FieldRole::Base);
    CHECK(dual_ideal(F3, FracIdeal::principal(F3, F3.one())).norm() == Rational(1, 3));
    auto Q = make_rational_field();
    CHECK(dual_ideal(Q, FracIdeal::principal(Q, QuadElement::rational(2))).norm() == Rational(1, 2));
}

TEST_CASE("unit domain test") {
    auto K = make_quadratic_field(2);
    CHECK(unit_fundamental_domain_test(K, K.one()));
    CHECK_FALSE(unit_fundamental_domain_test(K, -K.one()));
    // eps^2 lies on the excluded end of [1, eps^2)
    QuadElement e = *K.fundamental_unit;
    CHECK_FALSE(unit_fundamental_domain_test(K, e * e));
    // exactly one of x eps^k (k = -4..4) lies in the domain
    QuadElement x = K.element(3, 1);
    QuadElement y = x * e.inverse() * e.inverse() * e.inverse() * e.inverse();
    int hits = 0;
    for (int k = -4; k <= 4; ++k, y = y * e)
        if (unit_fundamental_domain_test(K, y)) ++hits;
    CHECK(hits == 1);
}
