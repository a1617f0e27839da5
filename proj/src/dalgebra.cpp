#include "hecke/dalgebra.hpp"

#include <cmath>

#include "hecke/errors.hpp"

namespace hecke {

Quaternion Quaternion::inverse() const {
    double n = abs2();
    if (n == 0.0) throw InvalidInput("Quaternion: inverse of zero");
    Quaternion c = conj();
    return {c.x() / n, c.y() / n};
}

DNumber::DNumber(std::vector<int> place_degrees, std::vector<Quaternion> comps)
    : n_(std::move(place_degrees)), comps_(std::move(comps)) {
    if (n_.size() != comps_.size()) throw InvalidInput("DNumber: component count mismatch");
}

std::vector<int> place_degrees(const FieldDescriptor& F) {
    std::vector<int> n(F.r1, 1);
    n.insert(n.end(), F.r2, 2);
    return n;
}

FReal embed_freal(const FieldDescriptor& F, const QuadElement& a) {
    if (F.is_rational()) return {cplx(a.embed().real(), 0.0)};
    if (F.is_imaginary_quadratic()) return {a.embed()};
    // real quadratic F: both real embeddings
    return {a.embed(), a.embed_conjugate()};
}

DNumber DNumber::from_parts(const FieldDescriptor& F, const FReal& x, const FReal& y) {
    auto n = hecke::place_degrees(F);
    if (x.size() != n.size() || y.size() != n.size()) throw InvalidInput("DNumber: wrong number of places");
    std::vector<Quaternion> c;
    for (std::size_t v = 0; v < n.size(); ++v) {
        if (n[v] == 1 && (x[v].imag() != 0.0 || y[v].imag() != 0.0)) {
            throw InvalidInput("DNumber: complex value at a real place");
        }
        c.emplace_back(x[v], y[v]);
    }
    return DNumber(n, c);
}

DNumber DNumber::from_freal(const FieldDescriptor& F, const FReal& x) {
    return from_parts(F, x, FReal(x.size(), 0.0));
}

DNumber DNumber::from_field_element(const FieldDescriptor& F, const QuadElement& a) {
    return from_freal(F, embed_freal(F, a));
}

FReal DNumber::x_part() const {
    FReal out;
    for (const auto& q : comps_) out.push_back(q.x());
    return out;
}

FReal DNumber::y_part() const {
    FReal out;
    for (const auto& q : comps_) out.push_back(q.y());
    return out;
}

std::size_t DNumber::real_dim() const {
    std::size_t dim = 0;
    for (int n : n_) dim += 2 * n;
    return dim;
}

std::vector<double> DNumber::coords() const {
    std::vector<double> c;
    for (std::size_t v = 0; v < comps_.size(); ++v) {
        auto q = comps_[v].coords();
        if (n_[v] == 1) {
            c.push_back(q[0]);
            c.push_back(q[2]);
        } else {
            c.insert(c.end(), q.begin(), q.end());
        }
    }
    return c;
}

DNumber DNumber::from_coords(const std::vector<int>& place_degrees, const std::vector<double>& c) {
    std::vector<Quaternion> comps;
    std::size_t k = 0;
    for (int n : place_degrees) {
        if (n == 1) {
            comps.push_back(Quaternion::from_coords(c.at(k), 0.0, c.at(k + 1), 0.0));
            k += 2;
        } else {
            comps.push_back(Quaternion::from_coords(c.at(k), c.at(k + 1), c.at(k + 2), c.at(k + 3)));
            k += 4;
        }
    }
    return {place_degrees, comps};
}

DNumber DNumber::inverse() const {
    std::vector<Quaternion> c;
    for (const auto& q : comps_) c.push_back(q.inverse());
    return {n_, c};
}

DNumber DNumber::conj() const {
    std::vector<Quaternion> c;
    for (const auto& q : comps_) c.push_back(q.conj());
    return {n_, c};
}

namespace {

template <typename Op>
DNumber zip(const DNumber& p, const DNumber& q, Op op) {
    if (p.place_degrees() != q.place_degrees()) throw InvalidInput("DNumber: different fields");
    std::vector<Quaternion> c;
    for (std::size_t v = 0; v < p.places(); ++v) c.push_back(op(p[v], q[v]));
    return {p.place_degrees(), c};
}

}  // namespace

DNumber operator*(const DNumber& p, const DNumber& q) {
    return zip(p, q, [](const Quaternion& a, const Quaternion& b) { return a * b; });
}
DNumber operator+(const DNumber& p, const DNumber& q) {
    return zip(p, q, [](const Quaternion& a, const Quaternion& b) { return a + b; });
}
DNumber operator-(const DNumber& p, const DNumber& q) {
    return zip(p, q, [](const Quaternion& a, const Quaternion& b) { return a - b; });
}
DNumber operator*(double a, const DNumber& q) {
    std::vector<Quaternion> c;
    for (const auto& x : q.components()) c.push_back(a * x);
    return {q.place_degrees(), c};
}

double abs_norm(const std::vector<int>& n, const FReal& a) {
    double r = 1.0;
    for (std::size_t v = 0; v < n.size(); ++v) r *= std::pow(std::abs(a[v]), n[v]);
    return r;
}

double trace(const std::vector<int>& n, const FReal& a) {
    double t = 0.0;
    for (std::size_t v = 0; v < n.size(); ++v) t += n[v] == 1 ? a[v].real() : 2.0 * a[v].real();
    return t;
}

double haar_factor(const std::vector<int>& n) {
    double f = 1.0;
    for (int nv : n)
        if (nv == 2) f *= 4.0;
    return f;
}

double dnorm(const DNumber& z) {
    double r = 1.0;
    for (std::size_t v = 0; v < z.places(); ++v) {
        r *= z.place_degrees()[v] == 1 ? z[v].abs() : z[v].abs2();
    }
    return r;
}

double psi_exponent(const DNumber& z) { return trace(z.place_degrees(), z.x_part()); }

double gaussian_f(const DNumber& z) {
    double e = 0.0;
    for (std::size_t v = 0; v < z.places(); ++v) e += z.place_degrees()[v] * kPi * z[v].abs2();
    return std::exp(-e);
}

KReal embed_kreal(const FieldDescriptor& K, const QuadElement& a) {
    if (K.is_real_quadratic()) return {a.embed(), a.embed_conjugate()};
    if (K.is_imaginary_quadratic()) return {a.embed()};
    throw InvalidInput("embed_kreal: K must be quadratic");
}

double gaussian_g(const FieldDescriptor& K, const KReal& z) {
    double e = 0.0;
    if (K.is_real_quadratic()) {
        e = kPi * (std::norm(z.at(0)) + std::norm(z.at(1)));
    } else {
        e = 2.0 * kPi * std::norm(z.at(0));
    }
    return std::exp(-e);
}

namespace {

DNumber rho_impl(const FieldDescriptor& F, const FieldDescriptor& K, const KReal& z, double sign) {
    if (!F.is_rational() || K.kind != FieldDescriptor::Kind::Quadratic) {
        throw Unsupported("rho: only quadratic K over F = Q is supported");
    }
    if (K.is_real_quadratic()) {
        if (z.size() != 2) throw InvalidInput("rho: real K needs two components");
        return DNumber({1}, {Quaternion(z[0].real(), sign * z[1].real())});
    }
    if (z.size() != 1) throw InvalidInput("rho: imaginary K needs one component");
    cplx v = cplx(1.0, sign) * z[0];
    return DNumber({1}, {Quaternion(v.real(), v.imag())});
}

}  // namespace

DNumber rho(const FieldDescriptor& F, const FieldDescriptor& K, const KReal& z) { return rho_impl(F, K, z, 1.0); }

DNumber rho_star(const FieldDescriptor& F, const FieldDescriptor& K, const KReal& z) {
    return rho_impl(F, K, z, -1.0);
}

double rho_measure_ratio(const FieldDescriptor& F, const FieldDescriptor& K) {
    // Determinant of rho in real coordinates, times the Haar factors of target and source.
    if (K.is_real_quadratic()) {
        DNumber e1 = rho(F, K, {1.0, 0.0}), e2 = rho(F, K, {0.0, 1.0});
        auto a = e1.coords(), b = e2.coords();
        return std::abs(a[0] * b[1] - a[1] * b[0]);
    }
    // K_R = C with twice Lebesgue; D_Q = C with Lebesgue
    DNumber e1 = rho(F, K, {cplx(1.0, 0.0)}), e2 = rho(F, K, {cplx(0.0, 1.0)});
    auto a = e1.coords(), b = e2.coords();
    return std::abs(a[0] * b[1] - a[1] * b[0]) / 2.0;
}

}  // namespace hecke
