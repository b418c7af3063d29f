#pragma once

#include <cmath>
#include <complex>

#include "hh/errors.hpp"

namespace hh {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Hyperbolic quantities of 2t evaluated cancellation-free from expm1(-4t).
// Stable over the whole range t in (0, inf): for t -> 0, coth2t ~ 1/(2t)
// without forming sinh(2t) by subtraction; for large t nothing overflows
// because only e^{-2t} and e^{-4t} appear.
struct HyperbolicScales {
    double t;
    double coth2t;
    double inv_sinh2t;  // 1/sinh(2t)
    double log_sinh2t;  // log sinh(2t)
    double tanh2t;
    double inv_cosh2t;  // 1/cosh(2t)
    double log_cosh2t;  // log cosh(2t)

    static HyperbolicScales at(double t) {
        if (!(t > 0.0))
            throw DomainError("HyperbolicScales: time must be positive, got " + std::to_string(t));
        const double em = std::expm1(-4.0 * t);  // in (-1, 0)
        const double q = -em;                    // 1 - e^{-4t}
        const double e2 = std::exp(-2.0 * t);
        HyperbolicScales s;
        s.t = t;
        s.coth2t = (2.0 + em) / q;
        s.inv_sinh2t = 2.0 * e2 / q;
        s.log_sinh2t = 2.0 * t + std::log(q) - std::log(2.0);
        s.tanh2t = q / (2.0 + em);
        s.inv_cosh2t = 2.0 * e2 / (2.0 + em);
        s.log_cosh2t = 2.0 * t + std::log(2.0 + em) - std::log(2.0);
        return s;
    }
};

// exp with the real part of the exponent clamped: underflow floors to exact 0,
// overflow saturates instead of producing inf.
inline cplx exp_clamped(cplx w) {
    if (w.real() < -745.0) return {0.0, 0.0};
    if (w.real() > 709.0) w = cplx(709.0, w.imag());
    return std::exp(w);
}

} // namespace hh
