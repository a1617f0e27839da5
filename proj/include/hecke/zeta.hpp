#pragma once

#include <cstdint>

#include "hecke/basefield.hpp"
#include "hecke/numerics.hpp"
#include "hecke/specialfun.hpp"

namespace hecke {

/// C_F = 2^{r1} (2 pi)^{r2} R_F / w_F.
double c_F(const FieldDescriptor& F);

struct SeriesValue {
    cplx value;          ///< partial sum up to the cutoff
    cplx tail_estimate;  ///< continuum estimate of the omitted tail (not included in value)
    double tail_bound;   ///< crude bound on |true tail|
};

/// N(a)^s sum over alpha in a / U_F with 0 < |N alpha| <= cutoff of |N alpha|^{-s}.
/// F is Q, a supported imaginary base field, or a real quadratic field.
SeriesValue partial_zeta_series(const FieldDescriptor& F, const FracIdeal& a, cplx s, double cutoff);

/// Globally continued completed partial zeta function xi_F(s, a) for F = Q or a
/// supported imaginary quadratic field, with a = (generator).
class CompletedZeta {
public:
    CompletedZeta(const FieldDescriptor& F, QuadElement generator, PrecisionConfig cfg = {});

    /// xi_F(s, a). Throws PoleError within 1e-8 of s = 0 or s = 1.
    cplx operator()(cplx s) const;
    /// Constant term of the Laurent expansion at s = 1.
    cplx laurent_ct() const;
    double residue() const { return c_; }

    /// sqrt(d_F) N(c a) for the internally rescaled representative c a.
    double volume() const { return vol_; }
    const FieldDescriptor& field() const { return F_; }

    /// Incomplete-gamma sum Phi(s, a) (dual = false) or Phi(s, a*) (dual = true).
    cplx phi(cplx s, bool dual) const;

private:
    struct Shell {
        double x;     ///< n pi |alpha|^2
        double mult;  ///< number of alpha with this value
    };
    std::vector<Shell> collect(const QuadElement& g) const;

    FieldDescriptor F_;
    PrecisionConfig cfg_;
    double c_;
    double vol_;
    int n_;
    std::vector<Shell> shells_, dual_shells_;
};

cplx xi_global(const FieldDescriptor& F, const QuadElement& generator, cplx s, const PrecisionConfig& cfg = {});
cplx xi_laurent_ct(const FieldDescriptor& F, const QuadElement& generator, const PrecisionConfig& cfg = {});

// Independent Dirichlet-series machinery.

/// Hurwitz zeta(s, a) by Euler-Maclaurin, 0 < a <= 1, s != 1.
cplx hurwitz_zeta(cplx s, double a);
cplx riemann_zeta(cplx s);
/// Kronecker symbol (D / n).
int kronecker_symbol(std::int64_t D, std::int64_t n);
/// L(s, chi_D) for the quadratic character of the fundamental discriminant D (D != 1).
cplx dirichlet_l(std::int64_t D, cplx s);

/// |d_K|^{s/2} Gamma_K(s) zeta_K(s) for quadratic K, via zeta(s) L(s, chi_{d_K}).
cplx completed_dedekind_zeta(const FieldDescriptor& K, cplx s);
/// Constant term at s = 1 of completed_dedekind_zeta.
double completed_dedekind_zeta_ct(const FieldDescriptor& K);

}  // namespace hecke
