#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hecke/basefield.hpp"
#include "hecke/dalgebra.hpp"

namespace hecke {

/// Real square matrix in row-major nested vectors.
using Matrix = std::vector<std::vector<double>>;

Matrix invert(const Matrix& m);
double determinant(Matrix m);

/// Fincke-Pohst enumeration of the nonzero integer combinations c of the given row
/// vectors with |sum c_k rows_k|^2 <= radius^2. fn receives (c, vector, squared length).
/// Throws ConvergenceError once more than `cap` vectors have been produced.
void for_each_short_vector(
    const Matrix& rows, double radius,
    const std::function<void(const std::vector<std::int64_t>&, const std::vector<double>&, double)>& fn,
    std::size_t cap = 50'000'000);

/// A full-rank Z-lattice in D_F given by a Z-basis.
class PointLattice {
public:
    PointLattice() = default;
    PointLattice(std::vector<int> place_degrees, std::vector<DNumber> basis);

    const std::vector<int>& place_degrees() const { return n_; }
    const std::vector<DNumber>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    /// Haar covolume of D_F / lattice.
    double covolume() const;
    /// Gram matrix of the pairing B(l, m) = Tr(x-part(l m)).
    Matrix psi_gram() const;
    /// Dual lattice {m : B(l, m) in Z for all l}, basis from the inverse Gram matrix.
    PointLattice dual() const;

    /// t * lattice and lattice * t.
    PointLattice left_scaled(const DNumber& t) const;
    PointLattice right_scaled(const DNumber& t) const;

    /// Integer coordinates of p in this basis (rounded) and the rounding residual.
    std::vector<std::int64_t> coordinates(const DNumber& p, double* residual = nullptr) const;
    /// True when both lattices have the same Z-span (to tol in coordinates).
    bool same_span(const PointLattice& other, double tol = 1e-8) const;

    /// Calls fn(point) for every nonzero lattice point with sum_v |p_v|^2 <= radius^2.
    /// Throws ConvergenceError once more than `cap` points have been produced.
    void for_each_in_ball(double radius, const std::function<void(const DNumber&)>& fn,
                          std::size_t cap = 50'000'000) const;

private:
    std::vector<int> n_;
    std::vector<DNumber> basis_;
    Matrix coords_;  // coords_[k] = real coordinates of basis_[k]
};

/// A lattice point together with the size of its unit orbit.
struct LatticePoint {
    DNumber point;
    int orbit_size = 1;
};

/// O_F-lattice a z + b with principal base-field ideals a = (ga), b = (gb).
class OFLattice {
public:
    OFLattice(const FieldDescriptor& F, QuadElement ideal_a, QuadElement ideal_b, DNumber z);
    /// a = b = O_F.
    static OFLattice standard(const FieldDescriptor& F, DNumber z);

    const FieldDescriptor& field() const { return F_; }
    const QuadElement& ideal_a() const { return a_; }
    const QuadElement& ideal_b() const { return b_; }
    const DNumber& z() const { return z_; }
    FReal x() const { return z_.x_part(); }
    FReal y() const { return z_.y_part(); }
    double norm_a() const;
    double norm_b() const;
    /// |N(y)|.
    double norm_y() const;

    const PointLattice& z_lattice() const { return lat_; }
    /// d_F N(a) N(b) |N(y)|, after checking it against the basis determinant.
    double volume() const;

    /// A pseudo-basis a' z' + b' for the dual lattice up to quaternion conjugation and a
    /// right unit multiplier: conj(dual) = (a' z' + b') * right_factor.
    OFLattice dual_pseudo_basis(DNumber* right_factor = nullptr) const;

private:
    FieldDescriptor F_;
    QuadElement a_, b_;
    DNumber z_;
    PointLattice lat_;
};

/// Z-basis of a z + b: {alpha z : alpha in Z-basis of a} followed by the Z-basis of b.
std::vector<DNumber> of_lattice_basis(const FieldDescriptor& F, const QuadElement& a, const QuadElement& b,
                                      const DNumber& z);

/// For F = Q: writes Z w1 + Z w2 as (Z z + Z) w2 with Im z > 0 and returns z.
cplx rational_pseudo_basis(const PointLattice& lat, cplx* right_factor = nullptr);

/// All nonzero points with ||l|| <= bound, each with orbit size w_F.
std::vector<LatticePoint> enumerate(const FieldDescriptor& F, const PointLattice& lat, double norm_bound,
                                    std::size_t cap = 5'000'000);

/// Theta(t, L) = sum_{l in L} f(t l), including l = 0. t is an element of F_R^x.
double theta(const PointLattice& lat, const FReal& t, double tol = 1e-16);

}  // namespace hecke
