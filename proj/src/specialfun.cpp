#include "hecke/specialfun.hpp"

#include <cmath>
#include <limits>

#include "hecke/errors.hpp"

namespace hecke {

void PrecisionConfig::validate() const {
    if (!(target_abs_tol >= 1e-14 && target_abs_tol <= 1e-4)) {
        throw InvalidInput("PrecisionConfig: target_abs_tol must lie in [1e-14, 1e-4]");
    }
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                    771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(cplx z, double eps) {
    if (std::abs(z.imag()) > eps || z.real() > eps) return false;
    double r = std::round(z.real());
    return std::abs(z.real() - r) <= eps;
}

}  // namespace

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    cplx x = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) x += kLanczosCoef[i] / (z + static_cast<double>(i));
    cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx gamma(cplx z) {
    if (near_nonpositive_integer(z, 0.0)) return {std::numeric_limits<double>::infinity(), 0.0};
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 170.0) return std::tgamma(z.real());
    return std::exp(log_gamma(z));
}

// ---------------------------------------------------------------------------
// Incomplete gamma

namespace {

// lower incomplete gamma by its power series
cplx lower_gamma_series(cplx s, double x, int cap) {
    cplx term = 1.0 / s;
    CompensatedSum<cplx> sum;
    sum += term;
    for (int n = 1; n < cap; ++n) {
        term *= x / (s + static_cast<double>(n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum.value())) {
            return sum.value() * std::exp(s * std::log(x) - x);
        }
    }
    throw ConvergenceError("upper_incomplete_gamma: series did not converge");
}

// Legendre continued fraction, modified Lentz
cplx upper_gamma_cf(cplx s, double x, int cap) {
    const double tiny = 1e-300;
    cplx b = x + 1.0 - s;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < cap; ++i) {
        cplx an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return std::exp(s * std::log(x) - x) * h;
    }
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
}

}  // namespace

cplx upper_incomplete_gamma(cplx s, double x, const PrecisionConfig& cfg) {
    if (!(x > 0.0)) throw InvalidInput("upper_incomplete_gamma: x must be positive");
    bool near_pole = near_nonpositive_integer(s, 0.15);
    if (x >= 1.0 + std::abs(s) || near_pole) return upper_gamma_cf(s, x, std::max(cfg.series_cap, 200000));
    return gamma(s) - lower_gamma_series(s, x, cfg.series_cap);
}

// ---------------------------------------------------------------------------
// Bessel

cplx bessel_k(cplx s, double x, const PrecisionConfig& cfg) {
    if (!(x > 0.0)) throw InvalidInput("bessel_k: x must be positive");
    const double sr = std::abs(s.real());
    // log of the envelope exp(-2x cosh t + |Re s| t) and its peak
    auto log_env = [&](double t) { return -2.0 * x * std::cosh(t) + sr * t; };
    double tpeak = std::asinh(sr / (2.0 * x));
    double lpeak = log_env(tpeak);
    double tmax = tpeak + 0.25;
    while (log_env(tmax) > lpeak - 42.0) tmax += 0.25;

    auto f = [&](double t) { return std::exp(-2.0 * x * std::cosh(t)) * std::cosh(s * t); };

    // full-line trapezoid of an even integrand: h [f(0) + 2 sum_{k>=1} f(kh)]
    double h = std::min(0.5, 1.0 / std::sqrt(2.0 * x));
    CompensatedSum<cplx> acc;  // f(0)/2 + sum_{k>=1} f(kh)
    double scale = 0.0;
    acc += 0.5 * f(0.0);
    scale += 0.5 * std::abs(f(0.0));
    for (double t = h; t <= tmax; t += h) {
        cplx v = f(t);
        acc += v;
        scale += std::abs(v);
    }
    cplx prev = 2.0 * h * acc.value();
    for (int level = 0; level < cfg.max_halvings; ++level) {
        for (double t = 0.5 * h; t <= tmax; t += h) {
            cplx v = f(t);
            acc += v;
            scale += std::abs(v);
        }
        h *= 0.5;
        cplx cur = 2.0 * h * acc.value();
        double diff = std::abs(cur - prev);
        double mag = 2.0 * h * scale;
        if (level >= 1 && diff <= 1e-14 * mag) return cur;
        prev = cur;
    }
    throw ConvergenceError("bessel_k: trapezoid refinement did not converge");
}

// ---------------------------------------------------------------------------
// Gamma_F and B_F

cplx gamma_F(const FieldDescriptor& F, cplx s) {
    const cplx inf{std::numeric_limits<double>::infinity(), 0.0};
    cplx out = 1.0;
    if (F.r1 > 0) {
        if (near_nonpositive_integer(s / 2.0, 1e-14)) return inf;
        cplx real_factor = std::exp(-s / 2.0 * std::log(kPi)) * gamma(s / 2.0);
        out *= std::pow(real_factor, F.r1);
    }
    if (F.r2 > 0) {
        if (near_nonpositive_integer(s, 1e-14)) return inf;
        cplx cx_factor = std::exp((1.0 - s) * std::log(2.0 * kPi)) * gamma(s);
        out *= std::pow(cx_factor, F.r2);
    }
    return out;
}

namespace {

// integration window [lo, hi] around the peak of a log-concave integrand
std::pair<double, double> window(const std::function<double(double)>& log_integrand, double center) {
    double peak = log_integrand(center);
    // walk towards the actual peak first
    for (int i = 0; i < 400; ++i) {
        double l = log_integrand(center - 0.05), r = log_integrand(center + 0.05);
        if (l > peak && l >= r) {
            center -= 0.05;
            peak = l;
        } else if (r > peak) {
            center += 0.05;
            peak = r;
        } else {
            break;
        }
    }
    double lo = center, hi = center;
    while (log_integrand(lo) > peak - 45.0) lo -= 0.25;
    while (log_integrand(hi) > peak - 45.0) hi += 0.25;
    return {lo, hi};
}

}  // namespace

double gamma_F_quadrature(const FieldDescriptor& F, double s) {
    if (!(s > 0.0)) throw InvalidInput("gamma_F_quadrature: needs real s > 0");
    double out = 1.0;
    if (F.r1 > 0) {
        // 2 int_R e^{-pi e^{2u}} e^{s u} du
        auto logf = [s](double u) { return -kPi * std::exp(2.0 * u) + s * u; };
        auto [lo, hi] = window(logf, 0.0);
        cplx v = integrate_trapezoid([&](double u) { return cplx(std::exp(logf(u))); }, lo, hi, 1e-15);
        out *= std::pow(2.0 * v.real(), F.r1);
    }
    if (F.r2 > 0) {
        // 4 pi int_R e^{-2 pi e^{2u}} e^{2 s u} du
        auto logf = [s](double u) { return -2.0 * kPi * std::exp(2.0 * u) + 2.0 * s * u; };
        auto [lo, hi] = window(logf, 0.0);
        cplx v = integrate_trapezoid([&](double u) { return cplx(std::exp(logf(u))); }, lo, hi, 1e-15);
        out *= std::pow(4.0 * kPi * v.real(), F.r2);
    }
    return out;
}

cplx b_F(const FieldDescriptor& F, const FReal& a, const FReal& b, cplx s, const PrecisionConfig& cfg) {
    auto n = place_degrees(F);
    if (a.size() != n.size() || b.size() != n.size()) throw InvalidInput("b_F: wrong number of components");
    cplx out = std::pow(2.0 * kPi, F.r2);
    double norm_ratio = 1.0;
    for (std::size_t v = 0; v < n.size(); ++v) {
        double av = std::abs(a[v]), bv = std::abs(b[v]);
        if (av == 0.0 || bv == 0.0) throw InvalidInput("b_F: zero component");
        norm_ratio *= std::pow(bv / av, n[v]);
        out *= bessel_k(static_cast<double>(n[v]) * s, n[v] * kPi * av * bv, cfg);
    }
    return out * std::exp(s * std::log(norm_ratio));
}

double b_F_quadrature(const FieldDescriptor& F, const FReal& a, const FReal& b, double s) {
    auto n = place_degrees(F);
    double out = 1.0;
    for (std::size_t v = 0; v < n.size(); ++v) {
        double av = std::abs(a[v]), bv = std::abs(b[v]);
        if (av == 0.0 || bv == 0.0) throw InvalidInput("b_F_quadrature: zero component");
        double nv = n[v];
        // prefactor 2 (real) or 4 pi (complex) from the angular part of d^x t
        double pref = nv == 1 ? 2.0 : 4.0 * kPi;
        auto logf = [=](double u) {
            return -nv * kPi * av * av * std::exp(2.0 * u) - nv * kPi * bv * bv * std::exp(-2.0 * u) +
                   2.0 * nv * s * u;
        };
        auto [lo, hi] = window(logf, 0.5 * std::log(bv / av));
        cplx val = integrate_trapezoid([&](double u) { return cplx(std::exp(logf(u))); }, lo, hi, 1e-15);
        out *= pref * val.real();
    }
    return out;
}

}  // namespace hecke
