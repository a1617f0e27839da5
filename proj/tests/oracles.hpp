// Reference values computed without the library: Boost.Math, plain series and
// hand-derived closed forms.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = boost::math::constants::pi<double>();
constexpr double euler = boost::math::constants::euler<double>();

/// Kronecker character for the handful of discriminants the tests need, by residue table.
inline int chi(std::int64_t D, std::int64_t n) {
    auto m = [](std::int64_t a, std::int64_t b) { return ((a % b) + b) % b; };
    switch (D) {
        case -4: return n % 2 == 0 ? 0 : (m(n, 4) == 1 ? 1 : -1);
        case -3: return m(n, 3) == 0 ? 0 : (m(n, 3) == 1 ? 1 : -1);
        case 5: {
            auto r = m(n, 5);
            return r == 0 ? 0 : (r == 1 || r == 4 ? 1 : -1);
        }
        case 8: {
            auto r = m(n, 8);
            return r % 2 == 0 ? 0 : (r == 1 || r == 7 ? 1 : -1);
        }
        case 12: {
            auto r = m(n, 12);
            return (r == 1 || r == 11) ? 1 : (r == 5 || r == 7) ? -1 : 0;
        }
        case -20: return chi(-4, n) * chi(5, n);
        default: throw std::invalid_argument("oracle::chi: discriminant not tabulated");
    }
}

/// sum chi(n) (-log n)^k n^{-s}; partial sums averaged over one final period,
/// which leaves an O(N^{-Re s - 1}) error for a nontrivial character.
inline cplx l_series(std::int64_t D, cplx s, int k = 0, std::int64_t periods = 200000) {
    std::int64_t q = D < 0 ? -D : D;
    std::int64_t N = periods * q;
    cplx sum = 0.0, avg = 0.0;
    for (std::int64_t n = 1; n <= N + q; ++n) {
        int c = chi(D, n);
        if (c != 0) {
            double ln = std::log(static_cast<double>(n));
            cplx term = static_cast<double>(c) * std::exp(-s * ln);
            for (int i = 0; i < k; ++i) term *= -ln;
            sum += term;
        }
        if (n > N) avg += sum;
    }
    return avg / static_cast<double>(q);
}

/// Riemann zeta through the alternating series and Borwein's acceleration.
inline cplx zeta(cplx s, int n = 60) {
    std::vector<double> d(n + 1);
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        acc += std::exp(std::lgamma(n + i) - std::lgamma(n - i + 1) - std::lgamma(2 * i + 1) + i * std::log(4.0));
        d[i] = n * acc;
    }
    cplx eta = 0.0;
    for (int k = 0; k < n; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        eta += sign * (d[k] - d[n]) * std::exp(-s * std::log(k + 1.0));
    }
    eta /= -d[n];
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

/// log Gamma by Stirling after shifting the argument past 15.
inline cplx log_gamma(cplx z) {
    cplx shift = 0.0;
    while (z.real() < 15.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    cplx r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi);
    cplx zp = z;
    for (int k = 1; k <= 7; ++k) {
        r += b[k - 1] / (2.0 * k * (2.0 * k - 1) * zp);
        zp *= z * z;
    }
    return r + shift;
}
inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

/// Gamma_K for quadratic K: real K gets Gamma_R(s)^2, imaginary K gets Gamma_C(s).
inline cplx gamma_k(bool real, cplx s) {
    if (real) {
        cplx g = std::exp(-s / 2.0 * std::log(pi)) * gamma(s / 2.0);
        return g * g;
    }
    return std::exp((1.0 - s) * std::log(2 * pi)) * gamma(s);
}

/// |d|^{s/2} Gamma_K(s) zeta(s) L(s, chi_d), the completed Dedekind zeta of Q(sqrt d).
inline cplx completed_dedekind(std::int64_t disc, cplx s) {
    double ad = std::abs(static_cast<double>(disc));
    return std::exp(s / 2.0 * std::log(ad)) * gamma_k(disc > 0, s) * zeta(s) * l_series(disc, s);
}

/// Constant term at s = 1 of the completed Dedekind zeta of real K = Q(sqrt d).
inline double completed_dedekind_ct(std::int64_t disc) {
    double L1 = l_series(disc, 1.0).real();
    double dL1 = l_series(disc, 1.0, 1).real();
    double d = static_cast<double>(disc);
    // Gamma_R(s)^2 at s = 1 is 1; its log-derivative is 2(-log(pi)/2 + digamma(1/2)/2)
    double G = std::sqrt(d) * L1;
    double logderiv = 0.5 * std::log(d) + (-std::log(pi) + boost::math::digamma(0.5)) + dL1 / L1;
    return G * euler + G * logderiv;
}

/// Gamma_F from its defining integral: radial quadrature of the Gaussian against |t|^s.
inline double gamma_f_integral(int place_degree, double s) {
    boost::math::quadrature::exp_sinh<double> q;
    if (place_degree == 1)
        return 2.0 * q.integrate([s](double t) { return t > 1e3 ? 0.0 : std::exp(-pi * t * t) * std::pow(t, s - 1); });
    return 4.0 * pi * q.integrate([s](double r) { return r > 1e3 ? 0.0 : std::exp(-2 * pi * r * r) * std::pow(r, 2 * s - 1); });
}

/// int_0^oo exp(-x(u + 1/u)) u^{s-1} du = 2 K_s(2x) in the usual normalisation.
inline double bessel(double s, double x) { return 2.0 * boost::math::cyl_bessel_k(s, 2.0 * x); }

/// sum over (m, n) != 0 of Q(m, n)^{-s} for Q = a m^2 + b m n + c n^2, real s, radius cutoff.
inline double form_sum(double a, double b, double c, double s, int R) {
    double sum = 0.0;
    for (int m = -R; m <= R; ++m)
        for (int n = -R; n <= R; ++n) {
            if (m == 0 && n == 0) continue;
            if (m * m + n * n > R * R) continue;
            sum += std::pow(a * m * m + b * m * n + c * n * n, -s);
        }
    return sum;
}

}  // namespace oracle
