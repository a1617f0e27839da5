#pragma once

#include "hecke/basefield.hpp"
#include "hecke/dalgebra.hpp"
#include "hecke/numerics.hpp"

namespace hecke {

struct PrecisionConfig {
    double target_abs_tol = 1e-12;
    int max_halvings = 12;       ///< Bessel trapezoid refinement levels
    int series_cap = 20000;      ///< incomplete gamma series / continued fraction terms

    /// Throws InvalidInput unless target_abs_tol lies in [1e-14, 1e-4].
    void validate() const;
};

/// Complex Gamma function (Lanczos, g = 7, with reflection).
cplx gamma(cplx z);
cplx log_gamma(cplx z);

/// Upper incomplete gamma Gamma(s, x) = int_x^oo e^{-u} u^{s-1} du, x > 0.
cplx upper_incomplete_gamma(cplx s, double x, const PrecisionConfig& cfg = {});

/// K_s(x) = int_0^oo exp(-x (u + 1/u)) u^{s-1} du. Note this is 2 K_s(2x) in the
/// usual normalisation. Evaluated as 2 int_0^oo exp(-2x cosh t) cosh(s t) dt by
/// the trapezoid rule with step halving.
cplx bessel_k(cplx s, double x, const PrecisionConfig& cfg = {});

/// Gamma_F(s) = [pi^{-s/2} Gamma(s/2)]^{r1} [(2 pi)^{1-s} Gamma(s)]^{r2}.
/// Returns complex infinity at the poles.
cplx gamma_F(const FieldDescriptor& F, cplx s);
/// The defining integral of Gamma_F over T_F, by quadrature (real s > 0).
double gamma_F_quadrature(const FieldDescriptor& F, double s);

/// B_F(a, b, s) = (2 pi)^{r2} |N(b/a)|^s prod_v K_{n_v s}(n_v pi |a_v b_v|).
cplx b_F(const FieldDescriptor& F, const FReal& a, const FReal& b, cplx s, const PrecisionConfig& cfg = {});
/// B_F from its defining integral over T_F (real s), by quadrature.
double b_F_quadrature(const FieldDescriptor& F, const FReal& a, const FReal& b, double s);

}  // namespace hecke
