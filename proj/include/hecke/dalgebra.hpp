#pragma once

#include <array>
#include <complex>
#include <vector>

#include "hecke/basefield.hpp"
#include "hecke/numerics.hpp"

namespace hecke {

/// Hamilton quaternion stored in the C + Cj split: q = x + y j with x, y complex.
/// j c = conj(c) j for complex c. A complex number at a real place is the
/// special case where x and y are both real (j playing the role of i).
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(cplx x, cplx y) : x_(x), y_(y) {}
    static Quaternion from_coords(double c1, double ci, double cj, double ck) { return {{c1, ci}, {cj, ck}}; }

    cplx x() const { return x_; }
    cplx y() const { return y_; }
    std::array<double, 4> coords() const { return {x_.real(), x_.imag(), y_.real(), y_.imag()}; }

    double abs2() const { return std::norm(x_) + std::norm(y_); }
    double abs() const { return std::sqrt(abs2()); }
    Quaternion conj() const { return {std::conj(x_), -y_}; }
    Quaternion inverse() const;

    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.x_ * q.x_ - p.y_ * std::conj(q.y_), p.x_ * q.y_ + p.y_ * std::conj(q.x_)};
    }
    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) { return {p.x_ + q.x_, p.y_ + q.y_}; }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) { return {p.x_ - q.x_, p.y_ - q.y_}; }
    friend Quaternion operator-(const Quaternion& p) { return {-p.x_, -p.y_}; }
    friend Quaternion operator*(double a, const Quaternion& q) { return {a * q.x_, a * q.y_}; }

private:
    cplx x_{};
    cplx y_{};
};

/// Element of F_R = prod_v F_v (real components stored with zero imaginary part).
using FReal = std::vector<cplx>;

/// Element of D_F = prod_v D_v. Component v is a quaternion; at a real place its
/// x and y parts are real so it is the complex number x + y i.
class DNumber {
public:
    DNumber() = default;
    DNumber(std::vector<int> place_degrees, std::vector<Quaternion> comps);
    /// z = x + y j_F.
    static DNumber from_parts(const FieldDescriptor& F, const FReal& x, const FReal& y);
    static DNumber from_field_element(const FieldDescriptor& F, const QuadElement& a);
    static DNumber from_freal(const FieldDescriptor& F, const FReal& x);

    std::size_t places() const { return comps_.size(); }
    const std::vector<int>& place_degrees() const { return n_; }
    const std::vector<Quaternion>& components() const { return comps_; }
    const Quaternion& operator[](std::size_t v) const { return comps_[v]; }

    FReal x_part() const;
    FReal y_part() const;

    /// Real coordinates: 2 per real place, 4 per complex place.
    std::vector<double> coords() const;
    static DNumber from_coords(const std::vector<int>& place_degrees, const std::vector<double>& c);
    std::size_t real_dim() const;

    DNumber inverse() const;
    DNumber conj() const;

    friend DNumber operator*(const DNumber& p, const DNumber& q);
    friend DNumber operator+(const DNumber& p, const DNumber& q);
    friend DNumber operator-(const DNumber& p, const DNumber& q);
    friend DNumber operator*(double a, const DNumber& q);

private:
    std::vector<int> n_;
    std::vector<Quaternion> comps_;
};

/// Place degrees n_v of F (1 per real place, 2 per complex place).
std::vector<int> place_degrees(const FieldDescriptor& F);
/// Embedding F -> F_R using the first embedding at each place.
FReal embed_freal(const FieldDescriptor& F, const QuadElement& a);
/// |N_{F/Q}| of an element of F_R.
double abs_norm(const std::vector<int>& place_degrees, const FReal& a);
/// Tr_{F/Q} of an element of F_R (real part at real places, 2 Re at complex places).
double trace(const std::vector<int>& place_degrees, const FReal& a);
/// Haar measure factor relative to Lebesgue in the real coordinates: 4 per complex place.
double haar_factor(const std::vector<int>& place_degrees);

/// ||z|| = prod_real |z_v| * prod_complex |z_v|^2.
double dnorm(const DNumber& z);
/// Tr_{F/Q}(x) where z = x + y j_F; psi(z) = exp(2 pi i * result).
double psi_exponent(const DNumber& z);
/// Gaussian f(z) = prod_v exp(-n_v pi |z_v|^2).
double gaussian_f(const DNumber& z);

/// Element of K_R for K quadratic over Q: two real components (real K) or one
/// complex component (imaginary K), ordered first embedding first.
using KReal = std::vector<cplx>;

KReal embed_kreal(const FieldDescriptor& K, const QuadElement& a);
/// g(z) = prod_w exp(-n_w pi |z_w|^2) on K_R.
double gaussian_g(const FieldDescriptor& K, const KReal& z);

/// rho: K_R -> D_Q. Real K: z_w + z_w' i; imaginary K: (1 + i) z_w.
DNumber rho(const FieldDescriptor& F, const FieldDescriptor& K, const KReal& z);
/// rho*: real K: z_w - z_w' i; imaginary K: (1 - i) z_w.
DNumber rho_star(const FieldDescriptor& F, const FieldDescriptor& K, const KReal& z);
/// Ratio (Haar image measure)/(Haar source measure) of rho; 1 when rho preserves measure.
double rho_measure_ratio(const FieldDescriptor& F, const FieldDescriptor& K);

}  // namespace hecke
