#pragma once

#include <span>
#include <vector>

#include "hh/control_signal.hpp"
#include "hh/quadrature.hpp"

namespace hh {

// Input-to-state maps of the Hermite heat equation by the method of images:
// superpositions of boundary terms
//     2 * integral_0^t dK/dy(t - s, z, a) u(s) ds
// over reflected source points a. After the substitution sigma = t - s the
// integrand behaves like sigma^{-3/2} exp(-Re((z-a)^2)/(4 sigma)) at the
// endpoint, which the graded time rule absorbs.

struct ImagesConfig {
    int k_max = 6;         // image sum truncation |k| <= k_max
    int quad_nodes = 24;   // Gauss-Legendre nodes per time panel
    int min_panels = 12;   // geometric grading levels toward sigma = 0
    double refine_tol = 1e-11;
    bool checked = true;   // verify against a refined rule, error on stall
};

// psi(s) = (1 - cosh(2(tau-s))) / sinh(2(tau-s)), extended by psi(tau) = 0.
// Equals -tanh(tau - s); evaluated cancellation-free.
double psi(double s, double tau);

// single boundary term  2 * integral_0^t dK/dy(sigma, z, a) u(t - sigma) dsigma
cplx image_term(const ControlSignal& u, double t, cplx z, double a,
                const ImagesConfig& cfg = {});

// half-line maps: the k = 0 images at 0 and pi (the pi map carries the
// leading minus sign of the segment formula)
cplx phi_halfline_0(const ControlSignal& u0, double t, cplx z, const ImagesConfig& cfg = {});
cplx phi_halfline_pi(const ControlSignal& upi, double t, cplx z, const ImagesConfig& cfg = {});

// remainders: images k != 0 at 2 k pi resp. (2k+1) pi
cplx remainder_0(const ControlSignal& u0, double t, cplx z, const ImagesConfig& cfg = {});
cplx remainder_pi(const ControlSignal& upi, double t, cplx z, const ImagesConfig& cfg = {});

// full segment map on (0, pi): images at 2 k pi (u0, +) and (2k+1) pi (upi, -)
cplx phi_segment(const ControlSignal& u0, const ControlSignal& upi, double t, cplx z,
                 const ImagesConfig& cfg = {});

// symmetric interval (-L, L): images at (4k-1)L (u_minus, +) and (4k+1)L (u_plus, -)
cplx phi_symmetric(const ControlSignal& u_minus, const ControlSignal& u_plus, double t, double L,
                   cplx z, const ImagesConfig& cfg = {});

struct StateField {
    std::vector<cplx> eval_points;
    std::vector<cplx> values;
    double time = 0.0;
};

// batch evaluation over many z; OpenMP over points, plus the serial
// reference used by tests and the benchmark
template <class F>
StateField eval_field(std::span<const cplx> zs, double t, F&& point_eval, bool parallel = true);

namespace detail {
StateField eval_field_impl(std::span<const cplx> zs, double t,
                           const std::function<cplx(cplx)>& point_eval, bool parallel);
}

template <class F>
StateField eval_field(std::span<const cplx> zs, double t, F&& point_eval, bool parallel) {
    return detail::eval_field_impl(zs, t, point_eval, parallel);
}

// dense kernel-matrix form of one boundary term over a fixed z set; shares
// one (deepest) graded rule across all points so a whole control ensemble
// costs one matrix product per control
class BatchedImageMap {
public:
    BatchedImageMap(double t, double a, double sign, std::span<const cplx> zs,
                    const ImagesConfig& cfg = {});
    std::vector<cplx> apply(const ControlSignal& u) const;
    double time() const { return t_; }

private:
    double t_;
    std::vector<double> sigma_;
    std::vector<cplx> kw_;  // row-major [z][node]: 2 dK/dy * weight * sign
    std::size_t n_z_, n_q_;
};

} // namespace hh
