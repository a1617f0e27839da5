#pragma once

#include <memory>

#include "hecke/lattice.hpp"
#include "hecke/specialfun.hpp"
#include "hecke/zeta.hpp"

namespace hecke {

enum class Method { Direct, Expansion, Auto };

/// sum over nonzero l with ||l|| <= bound of ||l||^{-2s}; every point counted.
cplx raw_lattice_sum(const PointLattice& lat, cplx s, double norm_bound);

/// E(L, s) = V(L)^s sum_{L / U_F} ||l||^{-2s} by a Gaussian-regularised lattice sum
/// with its continuum term added back. Needs Re(s) > 1.05.
cplx eisenstein_direct(const FieldDescriptor& F, const PointLattice& lat, cplx s, double tol = 1e-12);
cplx eisenstein_direct(const OFLattice& L, cplx s, double tol = 1e-12);

/// Laurent coefficients around a point: value(s) ~ sum_{m >= -1} c[m] (s - center)^m.
struct LaurentData {
    cplx center;
    cplx residue;  ///< c_{-1}
    cplx ct;       ///< c_0
    cplx linear;   ///< c_1
};

/// Completed Eisenstein series of a z + b through its Fourier-Bessel expansion.
class EisensteinEvaluator {
public:
    explicit EisensteinEvaluator(OFLattice L, PrecisionConfig cfg = {});

    const OFLattice& lattice() const { return L_; }

    /// Completed series at s. Throws PoleError within 1e-3 of s = 0 or s = 1; within
    /// 1e-3 of s = 1/2 the value comes from the local Taylor expansion.
    cplx completed(cplx s) const;
    /// E(L, s) = completed(s) / Gamma_F(2s).
    cplx uncompleted(cplx s) const;

    /// Laurent data by contour integration on |s - center| = radius.
    LaurentData laurent(cplx center, double radius = 0.25, int points = 64) const;

    /// C_F / 2.
    double residue() const;
    /// Residue at s = 1 from symmetric differences, Richardson-extrapolated.
    double residue_numeric() const;
    /// CT at s = 1 from the limit formula.
    double ct() const;
    /// CT at s = 1 from symmetric averages, Richardson-extrapolated.
    double ct_numeric() const;
    /// The Kronecker limit function; imag_part receives the discarded imaginary part.
    double h(double* imag_part = nullptr) const;

    /// Number of (alpha, beta*) norm-shell pairs in the current truncation.
    std::size_t pair_shell_count() const;

private:
    struct PairShell {
        double a_abs;  ///< |alpha| (first place)
        double b_abs;  ///< |beta*|
        double prod;   ///< n pi |alpha y beta*|
        cplx phase;    ///< sum of exp(2 pi i Tr(x alpha beta*)) over the shell pair
    };
    void build_pairs(double threshold) const;
    cplx pair_sum(cplx s, double threshold) const;
    cplx raw_completed(cplx s) const;

    OFLattice L_;
    PrecisionConfig cfg_;
    int n_;
    double C_, A_, Va_, Vb_, Ny_, y_abs_;
    std::shared_ptr<CompletedZeta> xi_a_, xi_b_;
    mutable std::vector<PairShell> pairs_;  // sorted by prod
    mutable double built_threshold_ = -1.0;
};

/// For F = Q: a z + b rewritten as Z z~ + Z with z~ reduced into the standard
/// fundamental domain of SL2(Z). Other fields are returned unchanged.
OFLattice reduce_lattice(const OFLattice& L);

/// Completed series with method choice (auto = expansion after reduction).
cplx eisenstein_completed(const OFLattice& L, cplx s, Method method, const PrecisionConfig& cfg = {});

/// h_F(z, a, b).
double h_function(const FieldDescriptor& F, const DNumber& z, const QuadElement& a, const QuadElement& b,
                  const PrecisionConfig& cfg = {});

/// Completed series of the dual lattice, via its pseudo-basis.
cplx eisenstein_dual_completed(const OFLattice& L, cplx s, Method method, const PrecisionConfig& cfg = {});

}  // namespace hecke
