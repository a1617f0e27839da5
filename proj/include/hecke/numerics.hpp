#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <future>
#include <thread>
#include <type_traits>
#include <vector>

namespace hecke {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Neumaier-compensated accumulator. Works for double and std::complex<double>.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        if constexpr (std::is_same_v<T, double>) {
            add_real(sum_, comp_, x);
        } else {
            double sr = sum_.real(), cr = comp_.real();
            double si = sum_.imag(), ci = comp_.imag();
            add_real(sr, cr, x.real());
            add_real(si, ci, x.imag());
            sum_ = T(sr, si);
            comp_ = T(cr, ci);
        }
    }
    CompensatedSum& operator+=(T x) {
        add(x);
        return *this;
    }
    T value() const { return sum_ + comp_; }

private:
    static void add_real(double& sum, double& comp, double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    T sum_{};
    T comp_{};
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

/// Richardson extrapolation of samples f(h_k) with h_{k+1} = h_k / ratio,
/// assuming an error expansion in powers h^{order}, h^{2 order}, ...
/// Returns the most extrapolated value.
cplx richardson(const std::vector<cplx>& samples, double ratio, int order);

/// Complex derivative f'(z0) by the trapezoid rule on a circle of radius r.
cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx z0, double r, int points = 32);

/// Contour average (1/2 pi i) \oint f(z) dz / (z - z0)^k over |z - z0| = r.
cplx cauchy_coefficient(const std::function<cplx(cplx)>& f, cplx z0, double r, int k,
                        int points = 64);

/// Evaluates fn on every item, using up to `jobs` threads. Result order matches input.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned jobs)
    -> std::vector<std::invoke_result_t<Fn, const T&>> {
    using R = std::invoke_result_t<Fn, const T&>;
    std::vector<R> out(items.size());
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::vector<std::future<void>> workers;
    std::size_t n = items.size();
    std::size_t nthreads = std::min<std::size_t>(jobs, n);
    for (std::size_t w = 0; w < nthreads; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += nthreads) out[i] = fn(items[i]);
        }));
    }
    for (auto& f : workers) f.get();
    return out;
}

unsigned default_jobs();

}  // namespace hecke

namespace hecke {

/// Trapezoid rule on [lo, hi] with step halving until successive estimates differ
/// by less than rel_tol * |estimate| (or abs_tol). Intended for integrands that decay
/// rapidly at both ends (the result is then spectrally accurate).
cplx integrate_trapezoid(const std::function<cplx(double)>& fn, double lo, double hi, double rel_tol = 1e-14,
                         double abs_tol = 0.0, int max_halvings = 14);

}  // namespace hecke
