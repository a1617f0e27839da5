#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/lattice.hpp"
#include "hecke/suites.hpp"

using namespace hecke;

namespace {

std::vector<FieldDescriptor> base_fields() {
    std::vector<FieldDescriptor> out = {make_rational_field()};
    for (int d : {-1, -2, -3, -7, -11}) out.push_back(make_quadratic_field(d, FieldRole::Base));
    return out;
}

DNumber conj_point(const DNumber& p) { return p.conj(); }

}  // namespace

TEST_CASE("matrix helpers") {
    Matrix m = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(determinant(m) == doctest::Approx(18.0));
    Matrix inv = invert(m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * inv[k][j];
            CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0));
        }
    CHECK_THROWS_AS(invert(Matrix{{1, 2}, {2, 4}}), DegenerateLattice);
}

TEST_CASE("short vectors of Z^2 and a skew basis") {
    int brute = 0;
    for (int m = -5; m <= 5; ++m)
        for (int n = -5; n <= 5; ++n)
            if ((m || n) && m * m + n * n <= 6.25) ++brute;
    int found = 0;
    for_each_short_vector({{1, 0}, {0, 1}}, 2.5, [&](auto&, auto&, double) { ++found; });
    CHECK(found == brute);

    // same lattice, badly reduced basis
    int skew = 0;
    for_each_short_vector({{1, 0}, {37, 1}}, 2.5, [&](auto&, auto&, double r2) {
        CHECK(r2 <= 6.25 + 1e-12);
        ++skew;
    });
    CHECK(skew == brute);
    CHECK_THROWS_AS(for_each_short_vector({{1, 0}, {0, 1}}, 50.0, [](auto&, auto&, double) {}, 100), ConvergenceError);
}

TEST_CASE("covolumes") {
    auto Q = make_rational_field();
    CHECK(OFLattice::standard(Q, DNumber::from_parts(Q, {0.0}, {1.0})).volume() == doctest::Approx(1.0));
    auto Fi = make_quadratic_field(-1, FieldRole::Base);
    OFLattice J = OFLattice::standard(Fi, DNumber::from_parts(Fi, {cplx(0)}, {cplx(1)}));
    CHECK(J.volume() == doctest::Approx(4.0));
    CHECK(J.z_lattice().covolume() == doctest::Approx(4.0));
    OFLattice L(Q, QuadElement::rational(2), QuadElement::rational(Rational(1, 3)), DNumber::from_parts(Q, {0.2}, {1.5}));
    CHECK(L.volume() == doctest::Approx(1.0));
    CHECK(L.norm_a() == 2.0);
    CHECK(L.norm_b() == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(OFLattice::standard(Q, DNumber::from_parts(Q, {0.2}, {0.0})), DegenerateLattice);
}

TEST_CASE("dual lattices") {
    Draw draw(5);
    for (const auto& F : base_fields()) {
        for (int rep = 0; rep < 3; ++rep) {
            OFLattice L = random_lattice(F, draw);
            PointLattice D = L.z_lattice().dual();
            CHECK(D.covolume() * L.volume() == doctest::Approx(1.0).epsilon(1e-10));
            // the pairing is integral on L x D and unimodular
            for (const auto& l : L.z_lattice().basis())
                for (const auto& m : D.basis()) {
                    double p = psi_exponent(l * m);
                    CHECK(std::abs(p - std::round(p)) < 1e-9);
                }
            // closed-form pseudo-basis spans the same lattice
            DNumber rf;
            OFLattice P = L.dual_pseudo_basis(&rf);
            std::vector<DNumber> conj_basis;
            for (const auto& m : D.basis()) conj_basis.push_back(conj_point(m));
            PointLattice C(D.place_degrees(), conj_basis);
            CHECK(C.same_span(P.z_lattice().right_scaled(rf)));
        }
    }
}

TEST_CASE("rational pseudo-basis") {
    auto Q = make_rational_field();
    PointLattice P({1}, {DNumber::from_parts(Q, {0.7}, {-1.1}), DNumber::from_parts(Q, {2.0}, {0.3})});
    cplx rf;
    cplx z = rational_pseudo_basis(P, &rf);
    CHECK(z.imag() > 0.0);
    OFLattice L = OFLattice::standard(Q, DNumber::from_parts(Q, {z.real()}, {z.imag()}));
    DNumber r = DNumber::from_parts(Q, {rf.real()}, {rf.imag()});
    CHECK(P.same_span(L.z_lattice().right_scaled(r)));
}

TEST_CASE("enumeration") {
    auto Fi = make_quadratic_field(-1, FieldRole::Base);
    OFLattice L = OFLattice::standard(Fi, DNumber::from_parts(Fi, {cplx(0.3, 0.1)}, {cplx(0.9, 0.2)}));
    auto pts = enumerate(Fi, L.z_lattice(), 5.937);
    // brute force over a coefficient box
    int brute = 0;
    const auto& B = L.z_lattice().basis();
    for (int a = -9; a <= 9; ++a)
        for (int b = -9; b <= 9; ++b)
            for (int c = -9; c <= 9; ++c)
                for (int d = -9; d <= 9; ++d) {
                    if (!a && !b && !c && !d) continue;
                    DNumber p = double(a) * B[0] + double(b) * B[1] + double(c) * B[2] + double(d) * B[3];
                    if (dnorm(p) <= 5.937) ++brute;
                }
    CHECK(static_cast<int>(pts.size()) == brute);
    CHECK(pts.size() % 4 == 0);
    for (const auto& p : pts) CHECK(p.orbit_size == 4);
}

TEST_CASE("theta") {
    auto Q = make_rational_field();
    OFLattice L = OFLattice::standard(Q, DNumber::from_parts(Q, {0.0}, {1.0}));
    double jacobi = 0.0;
    for (int n = -30; n <= 30; ++n) jacobi += std::exp(-kPi * n * n);
    CHECK(jacobi == doctest::Approx(1.0864348112133080).epsilon(1e-15));
    CHECK(theta(L.z_lattice(), {1.0}) == doctest::Approx(jacobi * jacobi).epsilon(1e-15));

    Draw draw(9);
    for (const auto& F : base_fields()) {
        OFLattice M = random_lattice(F, draw);
        for (double t : {0.6, 1.7}) {
            double nt = std::pow(t, F.degree());
            double lhs = theta(M.z_lattice(), {t});
            double rhs = theta(M.z_lattice().dual(), {1.0 / t}) / (M.volume() * nt * nt);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }
}
