#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/dalgebra.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

Quaternion random_quaternion(std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return Quaternion::from_coords(u(g), u(g), u(g), u(g));
}

double dist(const Quaternion& p, const Quaternion& q) { return (p - q).abs(); }

}  // namespace

TEST_CASE("Hamilton relations") {
    Quaternion i = Quaternion::from_coords(0, 1, 0, 0);
    Quaternion j = Quaternion::from_coords(0, 0, 1, 0);
    Quaternion k = Quaternion::from_coords(0, 0, 0, 1);
    Quaternion one = Quaternion::from_coords(1, 0, 0, 0);
    CHECK(dist(i * j, k) == 0.0);
    CHECK(dist(j * i, -k) == 0.0);
    CHECK(dist(i * i, -one) == 0.0);
    CHECK(dist(j * j, -one) == 0.0);
    CHECK(dist(i * j * k, -one) == 0.0);
    // j c = conj(c) j
    Quaternion c({0.3, 0.8}, 0.0);
    CHECK(dist(j * c, Quaternion(std::conj(c.x()), 0.0) * j) < 1e-15);
}

TEST_CASE("quaternion algebra laws") {
    std::mt19937_64 g(11);
    for (int n = 0; n < 50; ++n) {
        Quaternion p = random_quaternion(g), q = random_quaternion(g), r = random_quaternion(g);
        CHECK(dist((p * q) * r, p * (q * r)) < 1e-13);
        CHECK((p * q).abs() == doctest::Approx(p.abs() * q.abs()).epsilon(1e-13));
        CHECK(dist((p * q).conj(), q.conj() * p.conj()) < 1e-13);
        CHECK(dist(p * p.inverse(), Quaternion::from_coords(1, 0, 0, 0)) < 1e-14);
    }
}

TEST_CASE("D_F numbers") {
    auto Fi = make_quadratic_field(-1, FieldRole::Base);
    auto Q = make_rational_field();
    CHECK(place_degrees(Q) == std::vector<int>{1});
    CHECK(place_degrees(Fi) == std::vector<int>{2});

    DNumber z = DNumber::from_parts(Fi, {cplx(0.3, -0.2)}, {cplx(0.9, 0.6)});
    CHECK(std::abs(z.x_part()[0] - cplx(0.3, -0.2)) == 0.0);
    CHECK(std::abs(z.y_part()[0] - cplx(0.9, 0.6)) == 0.0);
    CHECK(z.real_dim() == 4);
    DNumber w = DNumber::from_parts(Fi, {cplx(-1.1, 0.4)}, {cplx(0.2, -0.7)});
    CHECK(dnorm(z * w) == doctest::Approx(dnorm(z) * dnorm(w)).epsilon(1e-13));
    CHECK(dnorm(z) == doctest::Approx(0.09 + 0.04 + 0.81 + 0.36).epsilon(1e-14));

    DNumber r = DNumber::from_parts(Q, {cplx(0.5)}, {cplx(2.0)});
    CHECK(dnorm(r) == doctest::Approx(std::sqrt(4.25)).epsilon(1e-15));
    CHECK(std::abs((r * r.inverse()).x_part()[0] - 1.0) < 1e-15);
    CHECK(DNumber::from_coords(r.place_degrees(), r.coords()).coords() == r.coords());
}

TEST_CASE("trace, norm and the Gaussian") {
    auto Fi = make_quadratic_field(-1, FieldRole::Base);
    auto n = place_degrees(Fi);
    QuadElement a = Fi.element(2, 3);  // 2 + 3i
    FReal ar = embed_freal(Fi, a);
    CHECK(abs_norm(n, ar) == doctest::Approx(13.0));
    CHECK(trace(n, ar) == doctest::Approx(4.0));
    CHECK(haar_factor(n) == 4.0);
    DNumber z = DNumber::from_parts(Fi, ar, {cplx(1.0, 1.0)});
    CHECK(psi_exponent(z) == doctest::Approx(4.0));
    CHECK(gaussian_f(DNumber::from_parts(Fi, {cplx(0)}, {cplx(0)})) == 1.0);
    CHECK(gaussian_f(z) == doctest::Approx(std::exp(-2 * kPi * 15.0)).epsilon(1e-12));
}

TEST_CASE("rho for quadratic K over Q") {
    auto Q = make_rational_field();
    auto K = make_quadratic_field(5);
    QuadElement w = K.omega();
    KReal e = embed_kreal(K, w);
    REQUIRE(e.size() == 2);
    DNumber r = rho(Q, K, e);
    CHECK(r.x_part()[0].real() == doctest::Approx(e[0].real()));
    CHECK(r.y_part()[0].real() == doctest::Approx(e[1].real()));
    DNumber rs = rho_star(Q, K, e);
    CHECK(dnorm(r) == doctest::Approx(dnorm(rs)));
    CHECK(gaussian_g(K, e) == doctest::Approx(gaussian_f(r)).epsilon(1e-14));

    auto Ki = make_quadratic_field(-1);
    KReal ei = embed_kreal(Ki, Ki.element(1, 2));
    DNumber ri = rho(Q, Ki, ei);
    CHECK(gaussian_g(Ki, ei) == doctest::Approx(gaussian_f(ri)).epsilon(1e-14));
    CHECK(rho_measure_ratio(Q, K) == doctest::Approx(1.0));
    CHECK(rho_measure_ratio(Q, Ki) == doctest::Approx(1.0));
    CHECK_THROWS_AS(rho(Ki, K, e), Unsupported);
}
