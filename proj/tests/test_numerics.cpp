#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hecke/numerics.hpp"

using namespace hecke;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    auto rule = gauss_legendre(8);
    double w = 0.0, x14 = 0.0, x15 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        w += rule.weights[i];
        x14 += rule.weights[i] * std::pow(rule.nodes[i], 14);
        x15 += rule.weights[i] * std::pow(rule.nodes[i], 15);
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(x14 == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
    CHECK(std::abs(x15) < 1e-15);
    CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("richardson removes h^2 error") {
    std::vector<cplx> samples;
    for (double h = 0.4; h > 0.02; h /= 2.0) samples.push_back(1.0 + 3.0 * h * h - h * h * h * h);
    CHECK(std::abs(richardson(samples, 2.0, 2) - 1.0) < 1e-13);
}

TEST_CASE("cauchy contour coefficients of exp") {
    auto f = [](cplx z) { return std::exp(z); };
    cplx z0(0.3, -0.2);
    CHECK(std::abs(cauchy_derivative(f, z0, 0.5) - std::exp(z0)) < 1e-13);
    // k = 3 picks the second Taylor coefficient
    CHECK(std::abs(cauchy_coefficient(f, z0, 0.5, 3) - std::exp(z0) / 2.0) < 1e-13);
}

TEST_CASE("compensated sum keeps small terms") {
    CompensatedSum<double> acc;
    acc += 1.0;
    for (int i = 0; i < 1000; ++i) acc += 1e-17;
    acc += -1.0;
    CHECK(acc.value() == doctest::Approx(1e-14).epsilon(1e-10));
    CompensatedSum<cplx> z;
    z += cplx(1e16, 1.0);
    z += cplx(1.0, 1e-17);
    z += cplx(-1e16, 0.0);
    CHECK(z.value().real() == 1.0);
}

TEST_CASE("parallel_map preserves order") {
    std::vector<int> xs(37);
    for (int i = 0; i < 37; ++i) xs[i] = i;
    auto sq = [](const int& x) { return x * x; };
    CHECK(parallel_map(xs, sq, 4) == parallel_map(xs, sq, 1));
    CHECK(parallel_map(xs, sq, 3)[36] == 1296);
}

TEST_CASE("trapezoid on a gaussian") {
    cplx v = integrate_trapezoid([](double t) { return cplx(std::exp(-t * t), 0.0); }, -9.0, 9.0);
    CHECK(std::abs(v - std::sqrt(kPi)) < 1e-14);
}
