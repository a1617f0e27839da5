#pragma once

#include <optional>

#include "hecke/eisenstein.hpp"

namespace hecke {

/// Quadratic K over Q with an ideal A = (Z z + Z) w2 and the unit data of the torus.
struct HeckeSetup {
    FieldDescriptor K;
    FracIdeal ideal;
    QuadElement z;       ///< orientation-corrected: z' > z for real K, Im z > 0 for imaginary K
    QuadElement omega2;  ///< rational second basis vector
    double z1 = 0.0, z2 = 0.0;  ///< real K: first and second embeddings of z
    cplx zc;                    ///< imaginary K: embedding of z
    double eps = 1.0;           ///< fundamental unit (real K)
    int norm_eps = 1;
    int w_KF = 1;               ///< [U_K : U_F U_{K/F}]
    double eps0 = 1.0;          ///< endpoint of the t-domain [1, eps0)
    double C_K = 0.0, C_F = 1.0;
    PrecisionConfig cfg;
    unsigned jobs = 1;
};

HeckeSetup make_hecke_setup(const FieldDescriptor& K, const FracIdeal& A, PrecisionConfig cfg = {}, unsigned jobs = 1);

/// The lattice rho(u~ A) for real K at the torus point with coordinate sign * t.
struct HeckeLattice {
    PointLattice points;  ///< Z-basis rho(u~ w1), rho(u~ w2)
    OFLattice pseudo;     ///< Z z_t + Z with Im z_t > 0
    cplx right_factor;    ///< points = pseudo * right_factor
};

/// sign = +1 uses the lift (sqrt t, t^{-1/2}), sign = -1 uses (-sqrt t, t^{-1/2}).
/// Requires t in [1, eps0) unless allow_any_t is set.
HeckeLattice lattice_at(const HeckeSetup& setup, int sign, double t, bool allow_any_t = false);

/// rho(A) for imaginary K.
HeckeLattice lattice_imaginary(const HeckeSetup& setup);

/// xi_K(s, A) from the torus integral of the completed Eisenstein series over Q.
cplx hecke_integral(const HeckeSetup& setup, cplx s);

/// Compares hecke_integral at s = 2 with the L-function oracle and throws Error
/// naming both (w_{K/F}, eps0) candidates when the frozen choice misses.
void confirm_unit_data(const HeckeSetup& setup, double tolerance = 1e-6);

/// Component integral int_1^{eps0} E^(lattice_at(sign, t), s) dt / t.
cplx hecke_component(const HeckeSetup& setup, int sign, cplx s);

/// zeta_K(s, A) from the classical real quadratic formula over [1, eps^2].
cplx classical_real_zeta(const HeckeSetup& setup, cplx s);
/// zeta_K(s, A) = (2 / w_K) (sqrt(d_K) / 2)^{-s} E(z, s) with E from the direct sum.
cplx classical_imaginary_zeta(const HeckeSetup& setup, cplx s);

/// xi_K(s, class of A^{-1}) = |d_K|^{s/2} Gamma_K(s) zeta_K(s, A) from Dirichlet L-functions.
/// Supports class number one fields and Q(sqrt-5).
cplx completed_partial_zeta_oracle(const FieldDescriptor& K, const FracIdeal& A, cplx s);

struct RelativeKlf {
    double lhs_oracle;        ///< CT xi_K / C_K from zeta(s) L(s, chi)
    double lhs_integral;      ///< CT xi_K / C_K from the torus integral (Richardson)
    double rhs;
    double ct_xi_F_term;      ///< 2 CT xi_F(s, a) / C_F
    double log_norm_term;     ///< -log(N a / N b)
    double quadrature_term;   ///< C_F / (2 w C_K) int (h - log|N y|) d u
    double domain_measure;    ///< sum over signs of log eps0 ... i.e. int d u
    double residue_identity;  ///< 2 w C_K / C_F
};

/// Relative Kronecker limit formula for real K with A = Z z + Z (a = b = Z).
/// integral_lhs = false skips the (slow) Richardson limit of the torus integral.
RelativeKlf relative_klf(const HeckeSetup& setup, bool integral_lhs = true);

}  // namespace hecke
