#include "hecke/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace hecke {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
    }
    return rule;
}

cplx richardson(const std::vector<cplx>& samples, double ratio, int order) {
    if (samples.empty()) throw std::invalid_argument("richardson: no samples");
    std::vector<cplx> t = samples;
    for (std::size_t level = 1; level < t.size(); ++level) {
        double factor = std::pow(ratio, static_cast<double>(order * level));
        for (std::size_t i = t.size() - 1; i >= level; --i) {
            t[i] = (factor * t[i] - t[i - 1]) / (factor - 1.0);
        }
    }
    return t.back();
}

cplx cauchy_coefficient(const std::function<cplx(cplx)>& f, cplx z0, double r, int k,
                        int points) {
    // (1/2 pi i) \oint f(z)(z-z0)^{-k} dz with z = z0 + r e^{i theta}:
    // = (1/N) sum f(z_j) (r e^{i theta_j})^{1-k}
    CompensatedSum<cplx> acc;
    for (int j = 0; j < points; ++j) {
        double th = 2.0 * kPi * (j + 0.5) / points;
        cplx e = std::polar(r, th);
        acc += f(z0 + e) * std::pow(e, 1 - k);
    }
    return acc.value() / static_cast<double>(points);
}

cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx z0, double r, int points) {
    return cauchy_coefficient(f, z0, r, 2, points);
}

unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace hecke

namespace hecke {

cplx integrate_trapezoid(const std::function<cplx(double)>& fn, double lo, double hi, double rel_tol,
                         double abs_tol, int max_halvings) {
    int n = 16;
    double h = (hi - lo) / n;
    CompensatedSum<cplx> acc;
    acc += 0.5 * (fn(lo) + fn(hi));
    for (int k = 1; k < n; ++k) acc += fn(lo + k * h);
    cplx prev = acc.value() * h;
    for (int level = 0; level < max_halvings; ++level) {
        for (int k = 0; k < n; ++k) acc += fn(lo + (k + 0.5) * h);
        n *= 2;
        h *= 0.5;
        cplx cur = acc.value() * h;
        double diff = std::abs(cur - prev);
        if (level >= 2 && (diff <= rel_tol * std::abs(cur) || diff <= abs_tol)) return cur;
        prev = cur;
    }
    throw std::runtime_error("integrate_trapezoid: no convergence");
}

}  // namespace hecke
