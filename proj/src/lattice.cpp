#include "hecke/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "hecke/errors.hpp"

namespace hecke {

// ---------------------------------------------------------------------------
// small dense linear algebra

double determinant(Matrix m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = i;
        for (std::size_t r = i + 1; r < n; ++r)
            if (std::abs(m[r][i]) > std::abs(m[piv][i])) piv = r;
        if (m[piv][i] == 0.0) return 0.0;
        if (piv != i) {
            std::swap(m[piv], m[i]);
            det = -det;
        }
        det *= m[i][i];
        for (std::size_t r = i + 1; r < n; ++r) {
            double f = m[r][i] / m[i][i];
            for (std::size_t c = i; c < n; ++c) m[r][c] -= f * m[i][c];
        }
    }
    return det;
}

Matrix invert(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix m = a;
    Matrix inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = i;
        for (std::size_t r = i + 1; r < n; ++r)
            if (std::abs(m[r][i]) > std::abs(m[piv][i])) piv = r;
        if (m[piv][i] == 0.0) throw DegenerateLattice("invert: singular matrix");
        std::swap(m[piv], m[i]);
        std::swap(inv[piv], inv[i]);
        double p = m[i][i];
        for (std::size_t c = 0; c < n; ++c) {
            m[i][c] /= p;
            inv[i][c] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            double f = m[r][i];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[i][c];
                inv[r][c] -= f * inv[i][c];
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Fincke-Pohst

void for_each_short_vector(
    const Matrix& rows, double radius,
    const std::function<void(const std::vector<std::int64_t>&, const std::vector<double>&, double)>& fn,
    std::size_t cap) {
    const std::size_t D = rows.size();
    if (D == 0) return;
    const std::size_t m = rows[0].size();
    Matrix q(D, std::vector<double>(D, 0.0));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j)
            for (std::size_t k = 0; k < m; ++k) q[i][j] += rows[i][k] * rows[j][k];
    for (std::size_t i = 0; i < D; ++i) {
        if (!(q[i][i] > 0.0)) throw DegenerateLattice("for_each_short_vector: basis is not independent");
        for (std::size_t j = i + 1; j < D; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < D; ++k)
            for (std::size_t l = k; l < D; ++l) q[k][l] -= q[k][i] * q[i][l];
    }

    const double r2 = radius * radius;
    const double slack = r2 * (1.0 + 1e-12) + 1e-300;
    std::vector<std::int64_t> c(D, 0);
    std::vector<double> v(m, 0.0);
    std::size_t produced = 0;

    std::function<void(std::size_t, double)> rec = [&](std::size_t level, double remaining) {
        const std::size_t i = level - 1;
        double center = 0.0;
        for (std::size_t j = i + 1; j < D; ++j) center -= q[i][j] * static_cast<double>(c[j]);
        double half = std::sqrt(std::max(remaining, 0.0) / q[i][i]);
        auto lo = static_cast<std::int64_t>(std::ceil(center - half));
        auto hi = static_cast<std::int64_t>(std::floor(center + half));
        for (std::int64_t ci = lo; ci <= hi; ++ci) {
            c[i] = ci;
            double d = static_cast<double>(ci) - center;
            double rest = remaining - q[i][i] * d * d;
            if (rest < 0.0) continue;
            if (i > 0) {
                rec(i, rest);
                continue;
            }
            bool zero = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
            if (zero) continue;
            double n2 = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                double s = 0.0;
                for (std::size_t b = 0; b < D; ++b) s += static_cast<double>(c[b]) * rows[b][k];
                v[k] = s;
                n2 += s * s;
            }
            if (n2 > r2) continue;
            if (++produced > cap) throw ConvergenceError("lattice enumeration exceeded the point cap");
            fn(c, v, n2);
        }
        c[i] = 0;
    };
    rec(D, slack);
}

// ---------------------------------------------------------------------------
// PointLattice

PointLattice::PointLattice(std::vector<int> place_degrees, std::vector<DNumber> basis)
    : n_(std::move(place_degrees)), basis_(std::move(basis)) {
    for (const auto& b : basis_) {
        if (b.place_degrees() != n_) throw InvalidInput("PointLattice: basis from a different field");
        coords_.push_back(b.coords());
    }
    if (!basis_.empty() && basis_.size() != coords_[0].size()) {
        throw InvalidInput("PointLattice: basis must have full rank");
    }
}

double PointLattice::covolume() const { return std::abs(determinant(coords_)) * haar_factor(n_); }

Matrix PointLattice::psi_gram() const {
    const std::size_t r = rank();
    Matrix g(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) g[i][j] = g[j][i] = psi_exponent(basis_[i] * basis_[j]);
    return g;
}

PointLattice PointLattice::dual() const {
    Matrix ginv = invert(psi_gram());
    const std::size_t r = rank();
    std::vector<DNumber> out;
    for (std::size_t l = 0; l < r; ++l) {
        std::vector<double> c(coords_[0].size(), 0.0);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < c.size(); ++k) c[k] += ginv[j][l] * coords_[j][k];
        out.push_back(DNumber::from_coords(n_, c));
    }
    return {n_, out};
}

PointLattice PointLattice::left_scaled(const DNumber& t) const {
    std::vector<DNumber> out;
    for (const auto& b : basis_) out.push_back(t * b);
    return {n_, out};
}

PointLattice PointLattice::right_scaled(const DNumber& t) const {
    std::vector<DNumber> out;
    for (const auto& b : basis_) out.push_back(b * t);
    return {n_, out};
}

std::vector<std::int64_t> PointLattice::coordinates(const DNumber& p, double* residual) const {
    Matrix inv = invert(coords_);
    std::vector<double> pc = p.coords();
    std::vector<std::int64_t> out;
    double res = 0.0;
    for (std::size_t k = 0; k < rank(); ++k) {
        double c = 0.0;
        for (std::size_t j = 0; j < pc.size(); ++j) c += pc[j] * inv[j][k];
        double r = std::round(c);
        res = std::max(res, std::abs(c - r));
        out.push_back(static_cast<std::int64_t>(r));
    }
    if (residual) *residual = res;
    return out;
}

bool PointLattice::same_span(const PointLattice& other, double tol) const {
    if (other.rank() != rank()) return false;
    for (const auto& b : other.basis()) {
        double res = 0.0;
        coordinates(b, &res);
        if (res > tol) return false;
    }
    for (const auto& b : basis_) {
        double res = 0.0;
        other.coordinates(b, &res);
        if (res > tol) return false;
    }
    return true;
}

void PointLattice::for_each_in_ball(double radius, const std::function<void(const DNumber&)>& fn,
                                    std::size_t cap) const {
    for_each_short_vector(
        coords_, radius,
        [&](const std::vector<std::int64_t>&, const std::vector<double>& v, double) {
            fn(DNumber::from_coords(n_, v));
        },
        cap);
}

// ---------------------------------------------------------------------------
// OFLattice

namespace {

QuadElement in_field(const FieldDescriptor& F, const QuadElement& a) {
    if (F.is_rational()) {
        if (!a.is_rational()) throw InvalidInput("OFLattice: ideal generator not in Q");
        return QuadElement::rational(a.a());
    }
    if (a.d() != 0 && a.d() != F.d) throw InvalidInput("OFLattice: ideal generator from another field");
    return {a.a(), a.b(), F.d};
}

QuadElement dual_generator(const FieldDescriptor& F, const QuadElement& g) {
    FracIdeal d = dual_ideal(F, FracIdeal::principal(F, g));
    if (!d.generator()) throw Unsupported("dual ideal is not principal");
    return *d.generator();
}

double ideal_norm(const FieldDescriptor& F, const QuadElement& g) {
    if (F.is_rational()) return std::abs(to_double(g.a()));
    return std::abs(to_double(g.norm()));
}

}  // namespace

std::vector<DNumber> of_lattice_basis(const FieldDescriptor& F, const QuadElement& a, const QuadElement& b,
                                      const DNumber& z) {
    std::vector<QuadElement> za, zb;
    if (F.is_rational()) {
        za = {a};
        zb = {b};
    } else {
        za = {a, a * F.omega()};
        zb = {b, b * F.omega()};
    }
    std::vector<DNumber> out;
    for (const auto& al : za) out.push_back(DNumber::from_field_element(F, al) * z);
    for (const auto& be : zb) out.push_back(DNumber::from_field_element(F, be));
    return out;
}

OFLattice::OFLattice(const FieldDescriptor& F, QuadElement ideal_a, QuadElement ideal_b, DNumber z)
    : F_(F), a_(in_field(F, ideal_a)), b_(in_field(F, ideal_b)), z_(std::move(z)) {
    if (!F.is_supported_base()) throw Unsupported("OFLattice: unsupported base field " + F.name());
    if (a_.is_zero() || b_.is_zero()) throw InvalidInput("OFLattice: zero ideal");
    if (z_.place_degrees() != place_degrees(F)) throw InvalidInput("OFLattice: z lives in another algebra");
    for (const auto& yv : y())
        if (yv == 0.0) throw DegenerateLattice("OFLattice: y-part of z is not invertible");
    if (norm_y() < 1e-10) throw DegenerateLattice("OFLattice: |N(y)| < 1e-10, lattice too ill-conditioned");
    lat_ = PointLattice(place_degrees(F), of_lattice_basis(F, a_, b_, z_));
    double closed = volume();
    double det = lat_.covolume();
    if (std::abs(closed - det) > 1e-10 * closed) {
        throw Error("OFLattice: covolume closed form disagrees with the basis determinant");
    }
}

OFLattice OFLattice::standard(const FieldDescriptor& F, DNumber z) {
    return {F, F.one(), F.one(), std::move(z)};
}

double OFLattice::norm_a() const { return ideal_norm(F_, a_); }
double OFLattice::norm_b() const { return ideal_norm(F_, b_); }
double OFLattice::norm_y() const { return abs_norm(z_.place_degrees(), y()); }

double OFLattice::volume() const {
    return static_cast<double>(F_.abs_discriminant()) * norm_a() * norm_b() * norm_y();
}

OFLattice OFLattice::dual_pseudo_basis(DNumber* right_factor) const {
    QuadElement a2 = dual_generator(F_, b_).conjugate();
    QuadElement b2 = dual_generator(F_, a_).conjugate();
    FReal xs = x(), ys = y(), xc, wy;
    for (std::size_t v = 0; v < xs.size(); ++v) {
        xc.push_back(std::conj(xs[v]));
        wy.push_back(std::conj(1.0 / ys[v]));
    }
    if (right_factor) *right_factor = DNumber::from_parts(F_, FReal(xs.size(), 0.0), wy);
    return {F_, a2, b2, DNumber::from_parts(F_, xc, ys)};
}

// ---------------------------------------------------------------------------

cplx rational_pseudo_basis(const PointLattice& lat, cplx* right_factor) {
    if (lat.place_degrees() != std::vector<int>{1} || lat.rank() != 2) {
        throw Unsupported("rational_pseudo_basis: needs a lattice over Q");
    }
    auto as_c = [](const DNumber& p) { return cplx(p[0].x().real(), p[0].y().real()); };
    cplx w1 = as_c(lat.basis()[0]), w2 = as_c(lat.basis()[1]);
    cplx z = w1 / w2;
    if (z.imag() == 0.0) throw DegenerateLattice("rational_pseudo_basis: collinear basis");
    if (z.imag() < 0.0) z = -z;
    if (right_factor) *right_factor = w2;
    return z;
}

std::vector<LatticePoint> enumerate(const FieldDescriptor& F, const PointLattice& lat, double norm_bound,
                                    std::size_t cap) {
    if (!(norm_bound > 0.0)) throw InvalidInput("enumerate: norm bound must be positive");
    const auto& n = lat.place_degrees();
    if (n.size() != 1) throw Unsupported("enumerate: base fields with one infinite place only");
    // inclusive bound: points on the sphere survive rounding
    double radius = std::pow(norm_bound, 1.0 / n[0]) * (1.0 + 1e-12);
    double floor_norm = 1e-12 * std::pow(lat.covolume(), 1.0 / F.degree());
    std::vector<LatticePoint> out;
    for_each_short_vector(
        [&] {
            Matrix rows;
            for (const auto& b : lat.basis()) rows.push_back(b.coords());
            return rows;
        }(),
        radius,
        [&](const std::vector<std::int64_t>&, const std::vector<double>& v, double) {
            DNumber p = DNumber::from_coords(n, v);
            if (dnorm(p) < floor_norm) throw DegenerateLattice("enumerate: nonzero point of vanishing norm");
            out.push_back({p, F.w});
        },
        cap);
    return out;
}

double theta(const PointLattice& lat, const FReal& t, double tol) {
    const auto& n = lat.place_degrees();
    if (n.size() != 1 || t.size() != 1) throw Unsupported("theta: base fields with one infinite place only");
    double at2 = std::norm(t[0]);
    if (at2 == 0.0) throw InvalidInput("theta: t must be invertible");
    // n pi |t|^2 r^2 <= L
    double L = std::log(1.0 / std::max(tol, 1e-300)) + 10.0;
    double radius = std::sqrt(L / (n[0] * kPi * at2));
    Matrix rows;
    for (const auto& b : lat.basis()) rows.push_back(b.coords());
    CompensatedSum<double> sum;
    sum += 1.0;
    for_each_short_vector(rows, radius, [&](const std::vector<std::int64_t>&, const std::vector<double>&, double r2) {
        sum += std::exp(-n[0] * kPi * at2 * r2);
    });
    return sum.value();
}

}  // namespace hecke
