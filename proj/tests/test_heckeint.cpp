#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/heckeint.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

HeckeSetup setup(int d) {
    auto K = make_quadratic_field(d);
    return make_hecke_setup(K, FracIdeal::principal(K, K.one()), {}, 4);
}

cplx completed_factor(const FieldDescriptor& K, cplx s) {
    return std::exp(s / 2.0 * std::log(static_cast<double>(K.abs_discriminant()))) *
           oracle::gamma_k(K.is_real_quadratic(), s);
}

}  // namespace

TEST_CASE("unit data of the torus") {
    auto S5 = setup(5);
    CHECK(S5.norm_eps == -1);
    CHECK(S5.w_KF == 2);
    CHECK(S5.eps0 == doctest::Approx(std::pow((1 + std::sqrt(5.0)) / 2, 4)));
    auto S3 = setup(3);
    CHECK(S3.norm_eps == 1);
    CHECK(S3.w_KF == 1);
    CHECK(S3.eps0 == doctest::Approx(std::pow(2 + std::sqrt(3.0), 2)));
    CHECK(S5.z2 > S5.z1);
    CHECK_NOTHROW(confirm_unit_data(S5));
    CHECK_NOTHROW(confirm_unit_data(S3));
    // (w, eps0) = (2, eps^4) and (1, eps^2) describe the same orbit integral; a lone slip in w does not
    HeckeSetup same = S3;
    same.w_KF = 2;
    same.eps0 = std::pow(S3.eps, 4);
    CHECK_NOTHROW(confirm_unit_data(same));
    HeckeSetup bad = S5;
    bad.w_KF = 1;
    CHECK_THROWS_AS(confirm_unit_data(bad), Error);
}

TEST_CASE("torus lattices") {
    auto S = setup(2);
    CHECK_THROWS_AS(lattice_at(S, 1, 0.5), InvalidInput);
    CHECK_THROWS_AS(lattice_at(S, 2, 1.5), InvalidInput);
    // covolume of rho(u A) does not depend on u
    double v = lattice_at(S, 1, 1.0).points.covolume();
    CHECK(lattice_at(S, -1, 2.3).points.covolume() == doctest::Approx(v));
    CHECK(v == doctest::Approx(std::sqrt(8.0)));
    // E^ is periodic in t with period eps0
    for (double t : {1.3, 4.1}) {
        cplx a = eisenstein_completed(lattice_at(S, 1, t).pseudo, 1.7, Method::Auto);
        cplx b = eisenstein_completed(lattice_at(S, 1, t * S.eps0, true).pseudo, 1.7, Method::Auto);
        CHECK(std::abs(a - b) < 1e-11);
    }
    CHECK(lattice_at(S, 1, 1.7).pseudo.z()[0].y().real() > 0.0);
}

TEST_CASE("Hecke integral for real K") {
    for (int d : {2, 5, 3}) {
        auto S = setup(d);
        for (cplx s : {cplx(2.0), cplx(3.0)}) {
            cplx o = oracle::completed_dedekind(S.K.discriminant, s);
            CHECK(std::abs(hecke_integral(S, s) - o) < 1e-8);
        }
        // classical form over [1, eps^2]
        cplx z2 = oracle::zeta(2.0) * oracle::l_series(S.K.discriminant, 2.0);
        CHECK(std::abs(classical_real_zeta(S, 2.0) - z2) < 1e-8);
    }
    auto S = setup(5);
    cplx s(1.5, 0.5);
    CHECK(std::abs(hecke_integral(S, s) - oracle::completed_dedekind(5, s)) < 1e-8);
    CHECK_THROWS_AS(hecke_integral(S, 1.0), PoleError);
}

TEST_CASE("ideal scaling") {
    auto K = make_quadratic_field(2);
    auto S1 = make_hecke_setup(K, FracIdeal::principal(K, K.one()));
    auto S2 = make_hecke_setup(K, FracIdeal::principal(K, K.element(3, 1)));
    CHECK(std::abs(hecke_integral(S1, 2.5) - hecke_integral(S2, 2.5)) < 1e-9);
}

TEST_CASE("imaginary K") {
    for (int d : {-1, -3}) {
        auto K = make_quadratic_field(d);
        auto S = make_hecke_setup(K, FracIdeal::principal(K, K.one()));
        for (double s : {1.5, 2.0, 3.0}) {
            cplx zk = oracle::zeta(s) * oracle::l_series(K.discriminant, s);
            CHECK(std::abs(classical_imaginary_zeta(S, s) - zk) < 1e-8);
            CHECK(std::abs(hecke_integral(S, s) - completed_factor(K, s) * zk) < 1e-8);
        }
    }
    auto K = make_quadratic_field(-5);
    auto A = FracIdeal::hnf(K, 2, 1, 1);
    auto S = make_hecke_setup(K, A);
    for (double s : {1.5, 2.0, 3.0}) {
        cplx genus = 0.5 * (oracle::zeta(s) * oracle::l_series(-20, s) - oracle::l_series(-4, s) * oracle::l_series(5, s));
        CHECK(std::abs(classical_imaginary_zeta(S, s) - genus) < 1e-8);
        CHECK(std::abs(completed_partial_zeta_oracle(K, A, s) - completed_factor(K, s) * genus) < 1e-8);
        CHECK(std::abs(hecke_integral(S, s) - completed_factor(K, s) * genus) < 1e-8);
    }
    auto P = make_hecke_setup(K, FracIdeal::principal(K, K.one()));
    cplx principal = 0.5 * (oracle::zeta(2.0) * oracle::l_series(-20, 2.0) + oracle::l_series(-4, 2.0) * oracle::l_series(5, 2.0));
    CHECK(std::abs(classical_imaginary_zeta(P, 2.0) - principal) < 1e-8);
}

TEST_CASE("relative limit formula") {
    for (int d : {5, 2}) {
        auto S = setup(d);
        RelativeKlf k = relative_klf(S);
        double lhs = oracle::completed_dedekind_ct(S.K.discriminant) / S.C_K;
        CHECK(k.lhs_oracle == doctest::Approx(lhs).epsilon(1e-9));
        CHECK(std::abs(k.rhs - lhs) < 1e-5);
        CHECK(std::abs(k.lhs_integral - lhs) < 1e-5);
        CHECK(k.domain_measure == doctest::Approx(k.residue_identity).epsilon(1e-8));
        CHECK(k.rhs == doctest::Approx(k.ct_xi_F_term + k.log_norm_term + k.quadrature_term).epsilon(1e-14));
    }
}
