#include "hh/hermite_kernel.hpp"

#include <cmath>

namespace hh {

cplx mehler_k(double t, cplx x, cplx y) {
    const auto s = HyperbolicScales::at(t);
    const cplx expo = -0.5 * s.coth2t * (x * x + y * y) + x * y * s.inv_sinh2t;
    const double log_pref = -0.5 * (std::log(2.0 * pi) + s.log_sinh2t);
    return exp_clamped(expo + log_pref);
}

cplx mehler_dk_dy(double t, cplx x, cplx y) {
    const auto s = HyperbolicScales::at(t);
    const cplx expo = -0.5 * s.coth2t * (x * x + y * y) + x * y * s.inv_sinh2t;
    const double log_pref = -0.5 * (std::log(2.0 * pi) + s.log_sinh2t);
    return exp_clamped(expo + log_pref) * (-s.coth2t * y + x * s.inv_sinh2t);
}

std::pair<cplx, cplx> mehler_decomposed(double t, cplx x, double xi) {
    const auto s = HyperbolicScales::at(t);
    const cplx eta = exp_clamped(-0.5 * s.log_cosh2t - 0.5 * s.tanh2t * x * x);
    const cplx d = xi - x * s.inv_cosh2t;
    const cplx ktilde = std::sqrt(s.coth2t / (2.0 * pi)) * exp_clamped(-0.5 * s.coth2t * d * d);
    return {eta, ktilde};
}

namespace {

template <class T>
std::vector<T> hermite_all_impl(int n, T x) {
    if (n < 1) throw DomainError("hermite_h_all: need n >= 1");
    std::vector<T> h(static_cast<std::size_t>(n));
    const double log_h0 = -0.25 * std::log(pi);
    h[0] = std::exp(T(log_h0) - 0.5 * x * x);
    if (n > 1) h[1] = x * std::sqrt(2.0) * h[0];
    for (int k = 1; k + 1 < n; ++k)
        h[k + 1] = x * std::sqrt(2.0 / (k + 1)) * h[k] - std::sqrt(double(k) / (k + 1)) * h[k - 1];
    return h;
}

template <class T>
T hermite_impl(int k, T x) {
    if (k < 0) throw DomainError("hermite_h: order must be nonnegative");
    return hermite_all_impl<T>(k + 1, x).back();
}

} // namespace

double hermite_h(int k, double x) { return hermite_impl<double>(k, x); }
cplx hermite_h(int k, cplx x) { return hermite_impl<cplx>(k, x); }
std::vector<double> hermite_h_all(int n, double x) { return hermite_all_impl<double>(n, x); }
std::vector<cplx> hermite_h_all(int n, cplx x) { return hermite_all_impl<cplx>(n, x); }

cplx mehler_series(double t, cplx x, cplx y, int n_terms) {
    if (!(t > 0.0)) throw DomainError("mehler_series: time must be positive");
    if (n_terms < 1) throw DomainError("mehler_series: need at least one term");
    const auto hx = hermite_h_all(n_terms, x);
    const auto hy = hermite_h_all(n_terms, y);
    cplx acc = 0.0;
    for (int k = n_terms - 1; k >= 0; --k)  // smallest terms first
        acc += std::exp(-(2.0 * k + 1.0) * t) * hx[k] * hy[k];
    return acc;
}

} // namespace hh
