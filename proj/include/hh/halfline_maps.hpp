#pragma once

#include <span>

#include "hh/images_solver.hpp"

namespace hh {

// Classical heat half-line map, the time reparameterization T = tanh(2 tau)/2
// linking it to the Hermite half-line map, and the control transform S.

struct Reparam {
    double tau;
    double T;  // tanh(2 tau)/2, always in (0, 1/2)
    static Reparam from_tau(double tau);
};

// Phi_{T,0} f (z) = integral_0^T z e^{-z^2/(4(T-s))} / (2 sqrt(pi) (T-s)^{3/2}) f(s) ds
cplx heat_phi(const ControlSignal& f, double T, cplx z, const ImagesConfig& cfg = {});

// alpha(s) = tanh(2(tau-s))/2, decreasing bijection [0,tau] -> [0,T]
double alpha(double s, double tau);
double alpha_inv(double x, double tau);

// S u0 (t) = (1 - 4(T-t)^2)^{-1/4} u0(alpha^{-1}(T-t)) on (0, T).
// Analytic controls are composed exactly; sampled controls are resampled
// onto a uniform grid with the same node count.
ControlSignal reparam_S(const ControlSignal& u0, double tau);
ControlSignal reparam_S_inv(const ControlSignal& v, double tau);

// max_z |phi_halfline_0(u0, tau, z) - heat_phi(S u0, T, z)|
double verify_halfline_identity(const ControlSignal& u0, double tau, std::span<const cplx> zs,
                                const ImagesConfig& cfg = {}, bool parallel = true);

} // namespace hh
