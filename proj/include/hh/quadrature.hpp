#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "hh/scales.hpp"

namespace hh {

// Nodes/weights on [-1, 1]. Cached per order, thread safe.
struct GaussLegendre {
    std::vector<double> x, w;
};
const GaussLegendre& gauss_legendre(int n);

// Gauss-Hermite nodes with the "total" weights w_i e^{x_i^2}, so that
//   integral f(s) ds  ~=  sum_i wt_i f(x_i)
// for integrands with built-in Gaussian decay. Weights come from the
// normalized Hermite functions: wt_i = 1 / (n h_{n-1}(x_i)^2).
struct GaussHermite {
    std::vector<double> x, wt;
};
const GaussHermite& gauss_hermite(int n);

// integral over the line of f, for f concentrated like exp(-((s-center)/scale)^2).
template <class F>
auto gauss_hermite_line(F&& f, double center, double scale, int n) {
    const auto& q = gauss_hermite(n);
    using R = decltype(f(0.0));
    std::vector<R> terms(q.x.size());
    for (std::size_t i = 0; i < q.x.size(); ++i)
        terms[i] = scale * q.wt[i] * f(center + scale * q.x[i]);
    R acc{};
    for (const auto& v : terms) acc += v;
    return acc;
}

// Fixed-tree pairwise sum; independent of how the values were produced.
double pairwise_sum(std::span<const double> v);
cplx pairwise_sum(std::span<const cplx> v);

// Gauss-Legendre over a straight segment [a, b] of the complex plane
// (includes the dz factor).
template <class F>
cplx gl_segment(F&& f, cplx a, cplx b, int n) {
    const auto& q = gauss_legendre(n);
    const cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<cplx> terms(q.x.size());
    for (std::size_t i = 0; i < q.x.size(); ++i)
        terms[i] = half * q.w[i] * f(mid + half * q.x[i]);
    return pairwise_sum(terms);
}

// Real-axis panel breakpoints for [a, b] resolving a Gaussian factor
// centered at mu with width sigma.
std::vector<double> peak_breakpoints(double a, double b, double mu, double sigma);

template <class F>
cplx gl_composite(F&& f, std::span<const double> breaks, int n) {
    std::vector<cplx> parts;
    parts.reserve(breaks.size());
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        parts.push_back(gl_segment(f, cplx(breaks[i]), cplx(breaks[i + 1]), n));
    return pairwise_sum(parts);
}

// Flattened rule for integral_0^t f(sigma) dsigma with f ~ sigma^{-3/2} e^{-c/sigma}
// near sigma = 0: panels graded geometrically (ratio 1/2) toward 0, depth
// adapted so the grading reaches below the peak sigma* = 2c/3.
struct TimeRule {
    std::vector<double> sigma, w;
};
TimeRule graded_time_rule(double t, double c, int min_levels, int nodes_per_panel);

} // namespace hh
