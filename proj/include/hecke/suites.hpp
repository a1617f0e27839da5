#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/eisenstein.hpp"
#include "hecke/heckeint.hpp"
#include "hecke/report.hpp"

namespace hecke {

/// Seeded draws that do not depend on the standard library's distributions.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    std::size_t index(std::size_t n);

private:
    std::uint64_t state_;
};

/// A random O_F-lattice a z + b with small ideal generators.
OFLattice random_lattice(const FieldDescriptor& F, Draw& draw);

/// Textual form "a,z,b" as accepted by the CLI.
std::string lattice_text(const OFLattice& L);

/// |E^(L, s) - E^(L*, 1 - s)|. For F = Q the dual comes from the inverse Gram matrix.
VerificationReport functional_equation_check(const OFLattice& L, cplx s, double tolerance,
                                             const PrecisionConfig& cfg = {});
/// Expansion against the regularised direct sum (Re s > 1.05).
VerificationReport fourier_check(const OFLattice& L, cplx s, double tolerance, const PrecisionConfig& cfg = {});
/// Relative Kronecker limit formula: oracle LHS against the RHS assembled from h_F.
VerificationReport relative_klf_check(const HeckeSetup& setup, double tolerance = 1e-5);
/// The check above, then the torus-integral LHS against the same RHS, then the
/// domain measure against 2 w_{K/F} C_K / C_F.
std::vector<VerificationReport> relative_klf_reports(const HeckeSetup& setup, double tolerance = 1e-5);

struct SuiteOptions {
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    PrecisionConfig cfg;
};

/// fourier, fe, klf, hecke, theta, special.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Runs one suite, or every suite for "all". Throws InvalidInput for unknown names.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace hecke
