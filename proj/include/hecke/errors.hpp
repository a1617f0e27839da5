#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hecke {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (parse errors, non-squarefree d, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Field or signature combination outside the supported set.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// Lattice with a vanishing y-part, singular Gram matrix, or similar.
class DegenerateLattice : public Error {
public:
    using Error::Error;
};

/// Iterative method hit its cap before meeting the requested tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested too close to a pole. Carries the pole location and,
/// when known, the residue there.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::complex<double> pole,
              std::complex<double> residue = {})
        : Error(what), pole_(pole), residue_(residue) {}

    std::complex<double> pole() const { return pole_; }
    std::complex<double> residue() const { return residue_; }

private:
    std::complex<double> pole_;
    std::complex<double> residue_;
};

}  // namespace hecke
