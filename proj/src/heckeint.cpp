#include "hecke/heckeint.hpp"

#include <cmath>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

const FieldDescriptor& rationals() {
    static const FieldDescriptor Q = make_rational_field();
    return Q;
}

OFLattice standard_lattice(cplx z) {
    const auto& Q = rationals();
    return OFLattice::standard(Q, DNumber::from_parts(Q, {cplx(z.real(), 0.0)}, {cplx(z.imag(), 0.0)}));
}

HeckeLattice from_points(PointLattice pts) {
    cplx rf;
    cplx z = rational_pseudo_basis(pts, &rf);
    return {std::move(pts), standard_lattice(z), rf};
}

// Gauss-Legendre on [lo, hi] with node doubling until successive values differ by < tol / 2.
cplx integrate_gl(const std::function<cplx(double)>& fn, double lo, double hi, double tol, unsigned jobs) {
    cplx prev;
    bool have_prev = false;
    for (int n = 16; n <= 256; n *= 2) {
        GaussLegendreRule rule = gauss_legendre(n);
        std::vector<double> us;
        for (double x : rule.nodes) us.push_back(0.5 * (hi - lo) * x + 0.5 * (hi + lo));
        auto vals = parallel_map(us, [&](const double& u) { return fn(u); }, jobs);
        CompensatedSum<cplx> acc;
        for (int i = 0; i < n; ++i) acc += rule.weights[i] * vals[i];
        cplx cur = 0.5 * (hi - lo) * acc.value();
        if (have_prev && std::abs(cur - prev) < tol / 2.0) return cur;
        prev = cur;
        have_prev = true;
    }
    throw ConvergenceError("torus quadrature did not converge at 256 nodes");
}

double quadrature_tol(const HeckeSetup& setup) { return std::max(setup.cfg.target_abs_tol * 100.0, 1e-11); }

}  // namespace

HeckeSetup make_hecke_setup(const FieldDescriptor& K, const FracIdeal& A, PrecisionConfig cfg, unsigned jobs) {
    cfg.validate();
    if (K.kind != FieldDescriptor::Kind::Quadratic) throw InvalidInput("Hecke setup: K must be quadratic");
    if (A.is_rational_field() || A.d() != K.d) throw InvalidInput("Hecke setup: ideal from another field");
    HeckeSetup S;
    S.K = K;
    S.ideal = A;
    S.cfg = cfg;
    S.jobs = std::max(1u, jobs);
    auto zb = A.z_basis();
    S.omega2 = zb[0];
    S.z = zb[1] / zb[0];
    S.C_K = c_F(K);
    S.C_F = c_F(rationals());
    if (K.is_real_quadratic()) {
        S.z1 = S.z.embed().real();
        S.z2 = S.z.embed_conjugate().real();
        if (S.z2 < S.z1) {
            S.z = -S.z;
            S.z1 = -S.z1;
            S.z2 = -S.z2;
        }
        S.eps = K.fundamental_unit->embed().real();
        S.norm_eps = K.fundamental_unit->norm() > 0 ? 1 : -1;
        if (S.norm_eps == -1) {
            S.w_KF = 2;
            S.eps0 = std::pow(S.eps, 4);
        } else {
            S.w_KF = 1;
            S.eps0 = S.eps * S.eps;
        }
    } else {
        S.zc = S.z.embed();
        if (S.zc.imag() < 0.0) {
            S.z = -S.z;
            S.zc = -S.zc;
        }
        S.w_KF = 1;
    }
    return S;
}

HeckeLattice lattice_at(const HeckeSetup& S, int sign, double t, bool allow_any_t) {
    if (!S.K.is_real_quadratic()) throw InvalidInput("lattice_at: needs real K");
    if (sign != 1 && sign != -1) throw InvalidInput("lattice_at: sign must be +1 or -1");
    if (!(t > 0.0)) throw InvalidInput("lattice_at: t must be positive");
    if (!allow_any_t && (t < 1.0 - 1e-12 || t > S.eps0 * (1.0 + 1e-12))) {
        throw InvalidInput("lattice_at: t outside [1, eps0)");
    }
    const double a = sign * std::sqrt(t), b = 1.0 / std::sqrt(t);
    const QuadElement w1 = S.z * S.omega2;
    std::vector<DNumber> basis;
    for (const auto& w : {w1, S.omega2}) {
        KReal uw{a * w.embed().real(), b * w.embed_conjugate().real()};
        basis.push_back(rho(rationals(), S.K, uw));
    }
    return from_points(PointLattice({1}, basis));
}

HeckeLattice lattice_imaginary(const HeckeSetup& S) {
    if (!S.K.is_imaginary_quadratic()) throw InvalidInput("lattice_imaginary: needs imaginary K");
    std::vector<DNumber> basis;
    for (const auto& w : {S.z * S.omega2, S.omega2}) basis.push_back(rho(rationals(), S.K, KReal{w.embed()}));
    return from_points(PointLattice({1}, basis));
}

cplx hecke_component(const HeckeSetup& S, int sign, cplx s) {
    auto fn = [&](double u) {
        return eisenstein_completed(lattice_at(S, sign, std::exp(u)).pseudo, s, Method::Auto, S.cfg);
    };
    return integrate_gl(fn, 0.0, std::log(S.eps0), quadrature_tol(S), S.jobs);
}

cplx hecke_integral(const HeckeSetup& S, cplx s) {
    try {
        if (S.K.is_real_quadratic()) {
            return (hecke_component(S, 1, s) + hecke_component(S, -1, s)) / static_cast<double>(S.w_KF);
        }
        cplx e = eisenstein_completed(lattice_imaginary(S).pseudo, s, Method::Auto, S.cfg);
        return 2.0 * kPi / (S.K.w / 2.0) * e / static_cast<double>(S.w_KF);
    } catch (const PoleError& e) {
        cplx pole = e.pole();
        throw PoleError("hecke_integral: too close to a pole", pole, pole == 0.0 ? -S.C_K : S.C_K);
    }
}

void confirm_unit_data(const HeckeSetup& S, double tolerance) {
    if (!S.K.is_real_quadratic()) return;
    const cplx target = completed_partial_zeta_oracle(S.K, S.ideal, 2.0);
    const cplx got = hecke_integral(S, 2.0);
    if (std::abs(got - target) <= tolerance) return;
    HeckeSetup alt = S;
    alt.w_KF = S.w_KF == 2 ? 1 : 2;
    const cplx other = hecke_integral(alt, 2.0);
    throw Error("Hecke unit data rejected at s = 2: (w, eps0) = (" + std::to_string(S.w_KF) + ", " +
                std::to_string(S.eps0) + ") gives " + std::to_string(got.real()) + ", (" + std::to_string(alt.w_KF) +
                ", " + std::to_string(alt.eps0) + ") gives " + std::to_string(other.real()) + ", oracle " +
                std::to_string(target.real()));
}

cplx classical_real_zeta(const HeckeSetup& S, cplx s) {
    if (!S.K.is_real_quadratic()) throw InvalidInput("classical_real_zeta: needs real K");
    auto fn = [&](double u) {
        const double t = std::exp(u);
        const cplx i(0.0, 1.0);
        cplx zt = (std::sqrt(t) * S.z1 + S.z2 / std::sqrt(t) * i) / (std::sqrt(t) + i / std::sqrt(t));
        return EisensteinEvaluator(reduce_lattice(standard_lattice(zt)), S.cfg).uncompleted(s);
    };
    cplx integral = integrate_gl(fn, 0.0, 2.0 * std::log(S.eps), quadrature_tol(S), S.jobs);
    const double d = static_cast<double>(S.K.abs_discriminant());
    cplx g = gamma(0.5 * s);
    return 2.0 * std::exp(-0.5 * s * std::log(d)) * gamma(s) / (g * g) * integral;
}

cplx classical_imaginary_zeta(const HeckeSetup& S, cplx s) {
    if (!S.K.is_imaginary_quadratic()) throw InvalidInput("classical_imaginary_zeta: needs imaginary K");
    const double d = static_cast<double>(S.K.abs_discriminant());
    cplx E = eisenstein_direct(standard_lattice(S.zc), s, S.cfg.target_abs_tol);
    return 2.0 / S.K.w * std::exp(-s * std::log(std::sqrt(d) / 2.0)) * E;
}

namespace {

bool class_number_one(const FieldDescriptor& K) {
    static const int imag[] = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
    static const int real[] = {2,  3,  5,  6,  7,  11, 13, 14, 17, 19, 21, 22, 23, 29, 31, 33, 37, 38, 41,
                               43, 46, 47, 53, 57, 59, 61, 62, 67, 69, 71, 73, 77, 83, 86, 89, 93, 94, 97};
    for (int d : imag)
        if (K.d == d) return true;
    for (int d : real)
        if (K.d == d) return true;
    return false;
}

bool is_principal(const FieldDescriptor& K, const FracIdeal& A) {
    // imaginary K: A principal iff it contains an element of norm N(A)
    const double NA = to_double(A.norm());
    Matrix rows;
    for (const auto& e : A.z_basis()) {
        cplx c = QuadElement(e.a(), e.b(), K.d).embed();
        rows.push_back({c.real(), c.imag()});
    }
    bool found = false;
    for_each_short_vector(rows, std::sqrt(NA) * (1.0 + 1e-9),
                          [&](const std::vector<std::int64_t>&, const std::vector<double>&, double r2) {
                              if (std::abs(r2 - NA) < 1e-9 * NA) found = true;
                          });
    return found;
}

}  // namespace

cplx completed_partial_zeta_oracle(const FieldDescriptor& K, const FracIdeal& A, cplx s) {
    if (class_number_one(K)) return completed_dedekind_zeta(K, s);
    if (K.d != -5) throw Unsupported("partial zeta oracle: only class number one fields and Q(sqrt-5)");
    // genus theory: the two classes are separated by the characters chi_{-4} and chi_5
    cplx genus = dirichlet_l(-4, s) * dirichlet_l(5, s);
    cplx total = riemann_zeta(s) * dirichlet_l(-20, s);
    cplx zeta_class = is_principal(K, A) ? (total + genus) / 2.0 : (total - genus) / 2.0;
    const double d = 20.0;
    return std::exp(0.5 * s * std::log(d)) * std::exp((1.0 - s) * std::log(2.0 * kPi)) * gamma(s) * zeta_class;
}

RelativeKlf relative_klf(const HeckeSetup& S, bool integral_lhs) {
    if (!S.K.is_real_quadratic()) throw InvalidInput("relative KLF: needs real K");
    RelativeKlf r{};
    const auto& Q = rationals();
    r.ct_xi_F_term = 2.0 * xi_laurent_ct(Q, QuadElement::rational(1), S.cfg).real() / S.C_F;
    r.log_norm_term = 0.0;  // a = b = Z
    r.domain_measure = 2.0 * std::log(S.eps0);
    r.residue_identity = 2.0 * S.w_KF * S.C_K / S.C_F;

    CompensatedSum<double> quad;
    for (int sign : {1, -1}) {
        auto fn = [&](double u) {
            OFLattice L = reduce_lattice(lattice_at(S, sign, std::exp(u)).pseudo);
            double h = EisensteinEvaluator(L, S.cfg).h();
            return cplx(h - std::log(L.norm_y()), 0.0);
        };
        quad += integrate_gl(fn, 0.0, std::log(S.eps0), quadrature_tol(S), S.jobs).real();
    }
    r.quadrature_term = S.C_F / (2.0 * S.w_KF * S.C_K) * quad.value();
    r.rhs = r.ct_xi_F_term + r.log_norm_term + r.quadrature_term;
    r.lhs_oracle = completed_dedekind_zeta_ct(S.K) / S.C_K;
    if (integral_lhs) {
        std::vector<cplx> samples;
        for (double h = 0.2; h > 0.01; h /= 2.0) {
            samples.push_back((hecke_integral(S, 1.0 + h) + hecke_integral(S, 1.0 - h)) / 2.0);
        }
        r.lhs_integral = richardson(samples, 2.0, 2).real() / S.C_K;
    } else {
        r.lhs_integral = std::nan("");
    }
    return r;
}

}  // namespace hecke
