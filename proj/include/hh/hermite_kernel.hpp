#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "hh/scales.hpp"

namespace hh {

// Fundamental solution of d_t K - d_xx K + x^2 K = 0 on the real line,
//   K(t,x,y) = (2 pi sinh 2t)^{-1/2} exp(-coth(2t)(x^2+y^2)/2 + xy/sinh 2t),
// extended to complex x, y. The exponent is formed first and exponentiated
// in log space (underflow floors to exact 0).

struct KernelEval {
    double t;  // > 0
    cplx x;
    cplx y;
};

cplx mehler_k(double t, cplx x, cplx y);
inline cplx mehler_k(const KernelEval& p) { return mehler_k(p.t, p.x, p.y); }

// dK/dy = K * (-coth(2t) y + x / sinh(2t))
cplx mehler_dk_dy(double t, cplx x, cplx y);
inline cplx mehler_dk_dy(const KernelEval& p) { return mehler_dk_dy(p.t, p.x, p.y); }

// Gaussian split K = eta * ktilde with
//   eta(t,x)      = cosh(2t)^{-1/2} exp(-tanh(2t) x^2 / 2)
//   ktilde(t,x,s) = sqrt(coth(2t)/2pi) exp(-coth(2t)/2 (s - x/cosh 2t)^2).
// ktilde integrates to 1 over the line for real x.
std::pair<cplx, cplx> mehler_decomposed(double t, cplx x, double xi);

// L^2-normalized Hermite functions by the stable three-term recurrence
//   h_{k+1}(x) = x sqrt(2/(k+1)) h_k(x) - sqrt(k/(k+1)) h_{k-1}(x),
// seeded with h_0 = pi^{-1/4} e^{-x^2/2}.
double hermite_h(int k, double x);
cplx hermite_h(int k, cplx x);

// h_0..h_{n-1} at once (one recurrence pass).
std::vector<double> hermite_h_all(int n, double x);
std::vector<cplx> hermite_h_all(int n, cplx x);

// Partial eigen-expansion sum_{k<n} e^{-(2k+1)t} h_k(x) h_k(y); the
// independent oracle for mehler_k.
cplx mehler_series(double t, cplx x, cplx y, int n_terms);

} // namespace hh
