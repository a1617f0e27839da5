#include "hecke/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "hecke/errors.hpp"
#include "hecke/lattice.hpp"

namespace hecke {

double c_F(const FieldDescriptor& F) {
    return std::pow(2.0, F.r1) * std::pow(2.0 * kPi, F.r2) * F.regulator / F.w;
}

// ---------------------------------------------------------------------------
// Dirichlet series over ideal lattices

namespace {

Matrix embedded_rows(const FieldDescriptor& F, const FracIdeal& a) {
    Matrix rows;
    for (const auto& e : a.z_basis()) {
        QuadElement el(e.a(), e.b(), F.is_rational() ? 0 : F.d);
        if (F.is_rational()) {
            rows.push_back({to_double(el.a())});
        } else if (F.is_imaginary_quadratic()) {
            cplx c = el.embed();
            rows.push_back({c.real(), c.imag()});
        } else {
            rows.push_back({el.embed().real(), el.embed_conjugate().real()});
        }
    }
    return rows;
}

// exact coefficient vector -> field element
QuadElement combine(const FieldDescriptor& F, const FracIdeal& a, const std::vector<std::int64_t>& c) {
    auto zb = a.z_basis();
    QuadElement out(0, 0, F.d);
    for (std::size_t k = 0; k < zb.size(); ++k) {
        out = out + QuadElement(zb[k].a(), zb[k].b(), F.d) * QuadElement::rational(Rational(c[k]), F.d);
    }
    return out;
}

}  // namespace

SeriesValue partial_zeta_series(const FieldDescriptor& F, const FracIdeal& a, cplx s, double cutoff) {
    if (!(cutoff > 0.0)) throw InvalidInput("partial_zeta_series: cutoff must be positive");
    if (s.real() <= 1.1) throw InvalidInput("partial_zeta_series: needs Re(s) > 1.1");
    const double Na = to_double(a.norm());
    const cplx norm_pow = std::exp(s * std::log(Na));
    Matrix rows = embedded_rows(F, a);
    CompensatedSum<cplx> sum;
    cplx tail;

    if (F.is_rational() || F.is_imaginary_quadratic()) {
        const double radius = F.is_rational() ? cutoff : std::sqrt(cutoff);
        std::vector<double> norms;
        for_each_short_vector(rows, radius, [&](const std::vector<std::int64_t>&, const std::vector<double>&,
                                                double r2) { norms.push_back(F.is_rational() ? std::sqrt(r2) : r2); });
        std::sort(norms.begin(), norms.end());
        for (auto it = norms.rbegin(); it != norms.rend(); ++it) sum += std::exp(-s * std::log(*it));
        double w = F.w;
        if (F.is_rational()) {
            tail = 2.0 / (w * Na) * std::exp((1.0 - s) * std::log(cutoff)) / (s - 1.0);
        } else {
            double cov = Na * std::sqrt(static_cast<double>(F.abs_discriminant())) / 2.0;
            tail = kPi / (w * cov) * std::exp((1.0 - s) * std::log(cutoff)) / (s - 1.0);
        }
        cplx value = norm_pow * sum.value() / w;
        tail *= norm_pow;
        return {value, tail, 2.0 * std::abs(tail)};
    }

    if (!F.is_real_quadratic() || !F.fundamental_unit) throw Unsupported("partial_zeta_series: unsupported field");
    const double eps = F.fundamental_unit->embed().real();
    const double e2 = eps * eps;
    const double radius = std::sqrt(2.0) * eps * std::sqrt(cutoff) * (1.0 + 1e-12);
    std::vector<double> norms;
    for_each_short_vector(rows, radius, [&](const std::vector<std::int64_t>& c, const std::vector<double>& v, double) {
        double a1 = v[0], a2 = v[1];
        double nrm = std::abs(a1 * a2);
        if (nrm > cutoff * (1.0 + 1e-9) || a1 <= 0.0) return;
        double ratio = a1 / std::abs(a2);
        bool inside;
        if (ratio > 1.0 + 1e-9 && ratio < e2 * (1.0 - 1e-9)) {
            inside = true;
        } else if (ratio < 1.0 - 1e-9 || ratio > e2 * (1.0 + 1e-9)) {
            inside = false;
        } else {
            inside = unit_fundamental_domain_test(F, combine(F, a, c));
        }
        if (!inside) return;
        if (nrm > cutoff * (1.0 - 1e-9)) {
            if (to_double(abs(combine(F, a, c).norm())) > cutoff) return;
        }
        norms.push_back(nrm);
    });
    std::sort(norms.begin(), norms.end());
    for (auto it = norms.rbegin(); it != norms.rend(); ++it) sum += std::exp(-s * std::log(*it));
    double cov = Na * std::sqrt(static_cast<double>(F.abs_discriminant()));
    tail = 2.0 * std::log(eps) / cov * std::exp((1.0 - s) * std::log(cutoff)) / (s - 1.0);
    tail *= norm_pow;
    return {norm_pow * sum.value(), tail, 2.0 * std::abs(tail)};
}

// ---------------------------------------------------------------------------
// CompletedZeta

namespace {

QuadElement base_element(const FieldDescriptor& F, const QuadElement& g) {
    if (F.is_rational()) return QuadElement::rational(g.a());
    return {g.a(), g.b(), F.d};
}

}  // namespace

CompletedZeta::CompletedZeta(const FieldDescriptor& F, QuadElement generator, PrecisionConfig cfg)
    : F_(F), cfg_(cfg) {
    cfg_.validate();
    if (!F.is_supported_base()) throw Unsupported("CompletedZeta: needs Q or a supported imaginary quadratic field");
    QuadElement g = base_element(F, generator);
    if (g.is_zero()) throw InvalidInput("CompletedZeta: zero ideal");
    // xi(s, c a) = xi(s, a); rescale so that V(a) is close to 1
    {
        const double sd = std::sqrt(static_cast<double>(F.abs_discriminant()));
        const double v0 = sd * to_double(FracIdeal::principal(F, g).norm());
        const double target = F.is_rational() ? 1.0 / v0 : std::sqrt(1.0 / v0);
        Rational c(static_cast<long long>(std::max(1.0, std::round(target * 64.0))), 64);
        g = g * QuadElement::rational(c, F.is_rational() ? 0 : F.d);
    }
    c_ = c_F(F);
    n_ = F.is_rational() ? 1 : 2;
    FracIdeal a = FracIdeal::principal(F, g);
    vol_ = std::sqrt(static_cast<double>(F.abs_discriminant())) * to_double(a.norm());
    FracIdeal ad = dual_ideal(F, a);
    shells_ = collect(g);
    dual_shells_ = collect(*ad.generator());
}

std::vector<CompletedZeta::Shell> CompletedZeta::collect(const QuadElement& g) const {
    FracIdeal a = FracIdeal::principal(F_, base_element(F_, g));
    Matrix rows = embedded_rows(F_, a);
    const double L = 60.0;
    const double radius = std::sqrt(L / (n_ * kPi));
    std::vector<double> xs;
    for_each_short_vector(rows, radius, [&](const std::vector<std::int64_t>&, const std::vector<double>&, double r2) {
        xs.push_back(n_ * kPi * r2);
    });
    std::sort(xs.begin(), xs.end());
    std::vector<Shell> out;
    for (double x : xs) {
        if (!out.empty() && std::abs(out.back().x - x) <= 1e-12 * x) {
            out.back().mult += 1.0;
        } else {
            out.push_back({x, 1.0});
        }
    }
    return out;
}

cplx CompletedZeta::phi(cplx s, bool dual) const {
    const auto& shells = dual ? dual_shells_ : shells_;
    const double V = dual ? 1.0 / vol_ : vol_;
    const cplx a = 0.5 * static_cast<double>(n_) * s;
    CompensatedSum<cplx> sum;
    for (auto it = shells.rbegin(); it != shells.rend(); ++it) {
        sum += it->mult * std::exp(-a * std::log(it->x)) * upper_incomplete_gamma(a, it->x, cfg_);
    }
    return std::exp(s * std::log(V)) * c_ * (0.5 * n_) * sum.value();
}

cplx CompletedZeta::operator()(cplx s) const {
    if (std::abs(s - 1.0) < 1e-8) throw PoleError("xi: too close to the pole at s = 1", 1.0, c_);
    if (std::abs(s) < 1e-8) throw PoleError("xi: too close to the pole at s = 0", 0.0, -c_);
    const double lv = std::log(vol_);
    cplx poles = c_ * (std::exp((s - 1.0) * lv) / (s - 1.0) - std::exp(s * lv) / s);
    return phi(s, false) + phi(1.0 - s, true) + poles;
}

cplx CompletedZeta::laurent_ct() const {
    return phi(1.0, false) + phi(0.0, true) + c_ * (std::log(vol_) - vol_);
}

cplx xi_global(const FieldDescriptor& F, const QuadElement& generator, cplx s, const PrecisionConfig& cfg) {
    return CompletedZeta(F, generator, cfg)(s);
}

cplx xi_laurent_ct(const FieldDescriptor& F, const QuadElement& generator, const PrecisionConfig& cfg) {
    return CompletedZeta(F, generator, cfg).laurent_ct();
}

// ---------------------------------------------------------------------------
// Dirichlet L-functions

namespace {

// (exp(u) - 1) / u, stable near u = 0
cplx expm1_over(cplx u) {
    if (std::abs(u) < 1e-3) return 1.0 + u / 2.0 + u * u / 6.0 + u * u * u / 24.0;
    return (std::exp(u) - 1.0) / u;
}

// zeta(s, a) - 1/(s - 1), entire in s
cplx hurwitz_regular(cplx s, double a) {
    static const double bern[] = {1.0 / 6,          -1.0 / 30,         1.0 / 42,           -1.0 / 30,
                                  5.0 / 66,         -691.0 / 2730,     7.0 / 6,            -3617.0 / 510,
                                  43867.0 / 798,    -174611.0 / 330,   854513.0 / 138,     -236364091.0 / 2730,
                                  8553103.0 / 6,    -23749461029.0 / 870, 8615841276005.0 / 14322};
    const int N = 24 + static_cast<int>(std::abs(s));
    CompensatedSum<cplx> sum;
    for (int k = N - 1; k >= 0; --k) sum += std::exp(-s * std::log(k + a));
    const double Na = N + a;
    const double lNa = std::log(Na);
    // (N+a)^{1-s}/(s-1) - 1/(s-1)
    sum += -lNa * expm1_over((1.0 - s) * lNa);
    sum += 0.5 * std::exp(-s * lNa);
    cplx rising = s;  // s (s+1) ... (s+2j-2)
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= 15; ++j) {
        cplx term = bern[j - 1] / fact * rising * std::exp((-s - 2.0 * j + 1.0) * lNa);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum.value();
}

}  // namespace

cplx hurwitz_zeta(cplx s, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw InvalidInput("hurwitz_zeta: needs 0 < a <= 1");
    if (std::abs(s - 1.0) < 1e-14) throw PoleError("hurwitz_zeta: pole at s = 1", 1.0, 1.0);
    return hurwitz_regular(s, a) + 1.0 / (s - 1.0);
}

cplx riemann_zeta(cplx s) {
    if (s.real() < 0.0) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
        return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi)) * std::sin(kPi * s / 2.0) * gamma(1.0 - s) *
               hurwitz_zeta(1.0 - s, 1.0);
    }
    return hurwitz_zeta(s, 1.0);
}

namespace {

int jacobi(std::int64_t a, std::int64_t n) {
    // n odd, positive
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace

int kronecker_symbol(std::int64_t D, std::int64_t n) {
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (D < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (D % 2 == 0) return 0;
        std::int64_t r = ((D % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    if (n == 1) return result;
    return result * jacobi(D, n);
}

namespace {

bool fundamental_discriminant(std::int64_t D) {
    if (D == 1) return false;
    std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(D < 0 ? -D : D);
    if (r != 0) return false;
    std::int64_t m = D / 4;
    std::int64_t rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && is_squarefree(m < 0 ? -m : m);
}

}  // namespace

cplx dirichlet_l(std::int64_t D, cplx s) {
    if (D == 1) return riemann_zeta(s);
    const std::int64_t k = D < 0 ? -D : D;
    if (s.real() < 0.0 && fundamental_discriminant(D)) {
        // (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s) is symmetric under s -> 1 - s
        const double a = D < 0 ? 1.0 : 0.0;
        const double lq = std::log(k / kPi);
        cplx u = (s + a) / 2.0, v = (1.0 - s + a) / 2.0;
        return std::exp((v - u) * lq + log_gamma(v) - log_gamma(u)) * dirichlet_l(D, 1.0 - s);
    }
    CompensatedSum<cplx> sum;
    for (std::int64_t a = 1; a <= k; ++a) {
        int chi = kronecker_symbol(D, a);
        if (chi != 0) sum += static_cast<double>(chi) * hurwitz_regular(s, static_cast<double>(a) / k);
    }
    return std::exp(-s * std::log(static_cast<double>(k))) * sum.value();
}

namespace {

// |d|^{s/2} Gamma_K(s) L(s, chi_d)
cplx dedekind_cofactor(const FieldDescriptor& K, cplx s) {
    const double d = static_cast<double>(K.abs_discriminant());
    cplx g;
    if (K.is_real_quadratic()) {
        cplx h = std::exp(-0.5 * s * std::log(kPi)) * gamma(0.5 * s);
        g = h * h;
    } else if (K.is_imaginary_quadratic()) {
        g = std::exp((1.0 - s) * std::log(2.0 * kPi)) * gamma(s);
    } else {
        throw Unsupported("completed_dedekind_zeta: needs a quadratic field");
    }
    return std::exp(0.5 * s * std::log(d)) * g * dirichlet_l(K.discriminant, s);
}

}  // namespace

cplx completed_dedekind_zeta(const FieldDescriptor& K, cplx s) {
    return dedekind_cofactor(K, s) * riemann_zeta(s);
}

double completed_dedekind_zeta_ct(const FieldDescriptor& K) {
    auto G = [&](cplx s) { return dedekind_cofactor(K, s); };
    cplx g1 = G(1.0);
    cplx dg = cauchy_derivative(G, 1.0, 0.25, 64);
    return (g1 * kEulerGamma + dg).real();
}

}  // namespace hecke
