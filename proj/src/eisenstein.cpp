#include "hecke/eisenstein.hpp"

#include <algorithm>
#include <cmath>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Matrix coord_rows(const PointLattice& lat) {
    Matrix rows;
    for (const auto& b : lat.basis()) rows.push_back(b.coords());
    return rows;
}

int single_place_degree(const std::vector<int>& n) {
    if (n.size() != 1) throw Unsupported("Eisenstein series: base fields with one infinite place only");
    return n[0];
}

// squared lengths grouped into shells of equal value
struct Shell {
    double r2;
    double mult;
};

std::vector<Shell> group(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<Shell> out;
    for (double x : v) {
        if (!out.empty() && std::abs(out.back().r2 - x) <= 1e-12 * x) {
            out.back().mult += 1.0;
        } else {
            out.push_back({x, 1.0});
        }
    }
    return out;
}

}  // namespace

cplx raw_lattice_sum(const PointLattice& lat, cplx s, double norm_bound) {
    const int n = single_place_degree(lat.place_degrees());
    const double radius = std::pow(norm_bound, 1.0 / n);
    std::vector<double> r2s;
    for_each_short_vector(coord_rows(lat), radius,
                          [&](const std::vector<std::int64_t>&, const std::vector<double>&, double r2) {
                              r2s.push_back(r2);
                          });
    auto shells = group(std::move(r2s));
    CompensatedSum<cplx> sum;
    for (auto it = shells.rbegin(); it != shells.rend(); ++it) {
        sum += it->mult * std::exp(-static_cast<double>(n) * s * std::log(it->r2));
    }
    return sum.value();
}

cplx eisenstein_direct(const FieldDescriptor& F, const PointLattice& lat, cplx s, double tol) {
    if (s.real() <= 1.05) {
        throw ConvergenceError("eisenstein_direct: needs Re(s) > 1.05; use the expansion method instead");
    }
    const int n = single_place_degree(lat.place_degrees());
    if (lat.place_degrees() != place_degrees(F)) throw InvalidInput("eisenstein_direct: lattice from another field");
    const Matrix rows = coord_rows(lat);
    const double D = static_cast<double>(rows.size());
    const double covE = std::abs(determinant(rows));
    if (!(covE > 0.0)) throw DegenerateLattice("eisenstein_direct: singular lattice");
    const cplx nu = static_cast<double>(n) * s;

    // shortest vector of the Euclidean dual lattice
    Matrix inv = invert(rows);
    Matrix dual(rows.size(), std::vector<double>(rows.size()));
    double r0 = 1e300;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double nn = 0.0;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            dual[i][k] = inv[k][i];
            nn += inv[k][i] * inv[k][i];
        }
        r0 = std::min(r0, std::sqrt(nn));
    }
    double mu2 = 1e300;
    for_each_short_vector(dual, r0 * (1.0 + 1e-9), [&](const std::vector<std::int64_t>&, const std::vector<double>&, double r2) {
        mu2 = std::min(mu2, r2);
    });

    const double L = -std::log(tol) + 5.0;
    const double a = kPi * kPi * mu2 / L;  // exp(-pi^2 mu^2 / a) = exp(-L)
    const double L2 = L + (std::abs(nu) + 1.0) * std::log(L + std::abs(nu) + 1.0);
    const double radius = std::sqrt(L2 / a);

    std::vector<double> r2s;
    for_each_short_vector(rows, radius, [&](const std::vector<std::int64_t>&, const std::vector<double>&, double r2) {
        r2s.push_back(r2);
    });
    auto shells = group(std::move(r2s));

    PrecisionConfig cfg;
    const cplx g_nu = gamma(nu);
    CompensatedSum<cplx> sum;
    for (auto it = shells.rbegin(); it != shells.rend(); ++it) {
        double x = a * it->r2;
        sum += it->mult * std::exp(-nu * std::log(it->r2)) * upper_incomplete_gamma(nu, x, cfg);
    }
    cplx lattice_part = sum.value() / g_nu;
    cplx continuum = std::pow(kPi, D / 2.0) * std::exp((nu - D / 2.0) * std::log(a)) /
                     ((nu - D / 2.0) * g_nu * covE);
    cplx origin = std::exp(nu * std::log(a)) / gamma(nu + 1.0);
    const double V = lat.covolume();
    return std::exp(s * std::log(V)) / static_cast<double>(F.w) * (lattice_part + continuum - origin);
}

cplx eisenstein_direct(const OFLattice& L, cplx s, double tol) {
    return eisenstein_direct(L.field(), L.z_lattice(), s, tol);
}

// ---------------------------------------------------------------------------
// Fourier-Bessel expansion

namespace {

std::vector<cplx> ideal_points(const FieldDescriptor& F, const QuadElement& g, double radius) {
    Matrix rows;
    if (F.is_rational()) {
        rows.push_back({to_double(g.a())});
    } else {
        for (const auto& e : {g, g * F.omega()}) {
            cplx c = e.embed();
            rows.push_back({c.real(), c.imag()});
        }
    }
    std::vector<cplx> out;
    for_each_short_vector(rows, radius, [&](const std::vector<std::int64_t>&, const std::vector<double>& v, double) {
        out.push_back(v.size() == 1 ? cplx(v[0], 0.0) : cplx(v[0], v[1]));
    });
    std::sort(out.begin(), out.end(), [](cplx p, cplx q) { return std::norm(p) < std::norm(q); });
    return out;
}

double generator_abs(const QuadElement& g) { return std::abs(g.embed()); }

QuadElement dual_gen(const FieldDescriptor& F, const QuadElement& g) {
    return *dual_ideal(F, FracIdeal::principal(F, g)).generator();
}

}  // namespace

EisensteinEvaluator::EisensteinEvaluator(OFLattice L, PrecisionConfig cfg) : L_(std::move(L)), cfg_(cfg) {
    cfg_.validate();
    const auto& F = L_.field();
    n_ = single_place_degree(place_degrees(F));
    C_ = c_F(F);
    Ny_ = L_.norm_y();
    y_abs_ = std::abs(L_.y()[0]);
    A_ = L_.norm_a() / L_.norm_b() * Ny_;
    const double sd = std::sqrt(static_cast<double>(F.abs_discriminant()));
    Va_ = sd * L_.norm_a();
    Vb_ = sd * L_.norm_b();
    xi_a_ = std::make_shared<CompletedZeta>(F, L_.ideal_a(), cfg_);
    xi_b_ = std::make_shared<CompletedZeta>(F, L_.ideal_b(), cfg_);
}

void EisensteinEvaluator::build_pairs(double threshold) const {
    const auto& F = L_.field();
    const QuadElement bdual = dual_gen(F, L_.ideal_b());
    const double amin = generator_abs(L_.ideal_a());
    const double bmin = generator_abs(bdual);
    const double scale = n_ * kPi * y_abs_;
    auto alphas = ideal_points(F, L_.ideal_a(), threshold / (scale * bmin) * (1.0 + 1e-12));
    auto betas = ideal_points(F, bdual, threshold / (scale * amin) * (1.0 + 1e-12));
    const cplx x = L_.x()[0];

    auto shell_starts = [](const std::vector<cplx>& v) {
        std::vector<std::size_t> starts;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i == 0 || std::norm(v[i]) > std::norm(v[starts.back()]) * (1.0 + 1e-12)) starts.push_back(i);
        }
        starts.push_back(v.size());
        return starts;
    };
    auto sa = shell_starts(alphas);
    auto sb = shell_starts(betas);

    pairs_.clear();
    for (std::size_t i = 0; i + 1 < sa.size(); ++i) {
        double ra = std::abs(alphas[sa[i]]);
        for (std::size_t k = 0; k + 1 < sb.size(); ++k) {
            double rb = std::abs(betas[sb[k]]);
            double prod = scale * ra * rb;
            if (prod > threshold) break;
            CompensatedSum<cplx> ph;
            for (std::size_t p = sa[i]; p < sa[i + 1]; ++p) {
                for (std::size_t q = sb[k]; q < sb[k + 1]; ++q) {
                    cplx xab = x * alphas[p] * betas[q];
                    double tr = n_ == 1 ? xab.real() : 2.0 * xab.real();
                    ph += std::polar(1.0, 2.0 * kPi * tr);
                }
            }
            pairs_.push_back({ra, rb, prod, ph.value()});
        }
    }
    std::sort(pairs_.begin(), pairs_.end(), [](const PairShell& p, const PairShell& q) { return p.prod < q.prod; });
    built_threshold_ = threshold;
}

std::size_t EisensteinEvaluator::pair_shell_count() const {
    if (built_threshold_ < 0) build_pairs(-std::log(cfg_.target_abs_tol) + 7.0);
    return pairs_.size();
}

cplx EisensteinEvaluator::pair_sum(cplx s, double threshold) const {
    if (built_threshold_ < threshold) build_pairs(threshold);
    const cplx order = static_cast<double>(n_) * (s - 0.5);
    const double twopi_r2 = n_ == 2 ? 2.0 * kPi : 1.0;
    CompensatedSum<cplx> sum;
    for (auto it = pairs_.rbegin(); it != pairs_.rend(); ++it) {
        if (it->prod > threshold) continue;
        double ratio = it->b_abs / (it->a_abs * y_abs_);
        cplx bf = twopi_r2 * std::exp(order * std::log(ratio)) * bessel_k(order, it->prod, cfg_);
        sum += it->phase * bf;
    }
    return sum.value();
}

cplx EisensteinEvaluator::raw_completed(cplx s) const {
    const double tol = cfg_.target_abs_tol;
    double T = -std::log(tol) + 5.0;
    const cplx pref = std::exp(s * std::log(Va_) + (s - 1.0) * std::log(Vb_) + s * std::log(Ny_)) /
                      static_cast<double>(L_.field().w);
    cplx head = std::exp(s * std::log(A_)) * (*xi_b_)(2.0 * s) +
                std::exp((1.0 - s) * std::log(A_)) * (*xi_a_)(2.0 * s - 1.0);
    for (int attempt = 0; attempt < 40; ++attempt) {
        cplx lo = pair_sum(s, T);
        cplx hi = pair_sum(s, T + 2.0);
        if (std::abs(pref * (hi - lo)) < tol / 10.0) return head + pref * hi;
        T += 2.0;
    }
    throw ConvergenceError("Eisenstein expansion: Bessel tail did not settle");
}

cplx EisensteinEvaluator::completed(cplx s) const {
    if (std::abs(s - 1.0) < 1e-3) throw PoleError("Eisenstein series: too close to the pole at s = 1", 1.0, C_ / 2.0);
    if (std::abs(s) < 1e-3) throw PoleError("Eisenstein series: too close to the pole at s = 0", 0.0, -C_ / 2.0);
    if (std::abs(s - 0.5) < 1e-3) {
        // regular point where two zeta terms cancel: Taylor series from a contour
        const int N = 64;
        const double r = 0.1;
        std::vector<cplx> vals(N), pts(N);
        for (int j = 0; j < N; ++j) {
            pts[j] = std::polar(r, 2.0 * kPi * (j + 0.5) / N);
            vals[j] = raw_completed(0.5 + pts[j]);
        }
        const cplx d = s - 0.5;
        CompensatedSum<cplx> out;
        for (int m = 0; m < 24; ++m) {
            CompensatedSum<cplx> c;
            for (int j = 0; j < N; ++j) c += vals[j] * std::pow(pts[j], -m);
            out += c.value() / static_cast<double>(N) * std::pow(d, m);
        }
        return out.value();
    }
    return raw_completed(s);
}

cplx EisensteinEvaluator::uncompleted(cplx s) const { return completed(s) / gamma_F(L_.field(), 2.0 * s); }

LaurentData EisensteinEvaluator::laurent(cplx center, double radius, int points) const {
    auto f = [this](cplx s) { return raw_completed(s); };
    return {center, cauchy_coefficient(f, center, radius, 0, points), cauchy_coefficient(f, center, radius, 1, points),
            cauchy_coefficient(f, center, radius, 2, points)};
}

double EisensteinEvaluator::residue() const { return C_ / 2.0; }

double EisensteinEvaluator::residue_numeric() const {
    std::vector<cplx> samples;
    for (double h = 0.2; h > 0.01; h /= 2.0) samples.push_back(h * (completed(1.0 + h) - completed(1.0 - h)) / 2.0);
    return richardson(samples, 2.0, 2).real();
}

double EisensteinEvaluator::ct_numeric() const {
    std::vector<cplx> samples;
    for (double h = 0.2; h > 0.01; h /= 2.0) samples.push_back((completed(1.0 + h) + completed(1.0 - h)) / 2.0);
    return richardson(samples, 2.0, 2).real();
}

double EisensteinEvaluator::ct() const {
    return xi_a_->laurent_ct().real() + C_ / 2.0 * (h() - std::log(A_));
}

double EisensteinEvaluator::h(double* imag_part) const {
    const double T = -std::log(cfg_.target_abs_tol) + 7.0;
    cplx sum = pair_sum(1.0, T);
    cplx total = A_ * (*xi_b_)(2.0) + Va_ * Ny_ / static_cast<double>(L_.field().w) * sum;
    cplx hv = 2.0 / C_ * total;
    if (imag_part) *imag_part = hv.imag();
    return hv.real();
}

// ---------------------------------------------------------------------------

OFLattice reduce_lattice(const OFLattice& L) {
    const auto& F = L.field();
    if (!F.is_rational()) return L;
    double q = to_double(L.ideal_a().a()) / to_double(L.ideal_b().a());
    cplx z(q * L.x()[0].real(), q * L.y()[0].real());
    if (z.imag() < 0.0) z = -z;
    for (int it = 0; it < 10000; ++it) {
        z -= std::round(z.real());
        if (std::norm(z) < 1.0 - 1e-15) {
            z = -1.0 / z;
        } else {
            break;
        }
    }
    return OFLattice::standard(F, DNumber::from_parts(F, {cplx(z.real(), 0.0)}, {cplx(z.imag(), 0.0)}));
}

cplx eisenstein_completed(const OFLattice& L, cplx s, Method method, const PrecisionConfig& cfg) {
    switch (method) {
        case Method::Direct:
            return gamma_F(L.field(), 2.0 * s) * eisenstein_direct(L, s, cfg.target_abs_tol);
        case Method::Expansion:
            return EisensteinEvaluator(L, cfg).completed(s);
        case Method::Auto:
            return EisensteinEvaluator(reduce_lattice(L), cfg).completed(s);
    }
    throw InvalidInput("eisenstein_completed: unknown method");
}

double h_function(const FieldDescriptor& F, const DNumber& z, const QuadElement& a, const QuadElement& b,
                  const PrecisionConfig& cfg) {
    return EisensteinEvaluator(OFLattice(F, a, b, z), cfg).h();
}

cplx eisenstein_dual_completed(const OFLattice& L, cplx s, Method method, const PrecisionConfig& cfg) {
    return eisenstein_completed(L.dual_pseudo_basis(), s, method, cfg);
}

}  // namespace hecke
