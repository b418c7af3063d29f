#pragma once

#include <optional>

#include "hh/expr.hpp"
#include "hh/fd_oracle.hpp"
#include "hh/images_solver.hpp"

namespace hh {

// Constructive reachability on a symmetric interval (-L, L): rotate the
// target g into the real datum eta(x) g(ix), evolve it freely under the
// Mehler kernel, read the boundary controls off as traces at +-iL, and
// verify with the finite-difference oracle.

// smooth bump, 1 on [-inner, inner], 0 outside (-outer, outer), built from
// the exp(-1/r) partition-of-unity profile on the transition bands
struct Cutoff {
    double inner, outer;
    double operator()(double x) const;
};
Cutoff make_cutoff(double inner, double outer);

cplx rotated_datum(const ExprAst& g, const Cutoff& eta, double x);

struct SynthesisProblem {
    ExprAst g;          // target, holomorphic on D_{outer}
    double L;           // control interval half-width
    double inner;       // plateau radius  (L < inner)
    double outer;       // support radius  (inner < outer)
    double tau;         // control horizon
    int time_nodes = 512;
    int quad_nodes = 48;
    double t_min = 1e-4;           // below it: the uniform-convergence limit
    double contour_factor = 0.5;   // shift when |Im z| > factor * tanh(2t) * outer
    bool run_verify = true;
    void validate() const;
};

// free evolution of the localized rotated datum; switches to the
// trapezoid contour near the square's top/bottom where the real-axis
// integrand becomes ill-conditioned at small times
class FreeEvolver {
public:
    FreeEvolver(const SynthesisProblem& p);

    struct Parts {
        cplx shifted, lateral, tails;
        bool used_contour = false;
        bool below_floor = false;
        cplx total() const { return shifted + lateral + tails; }
    };

    cplx operator()(double t, cplx z) const { return parts(t, z).total(); }
    Parts parts(double t, cplx z) const;

    // analytic continuation of the datum, g(iz), valid on D_{inner}
    cplx w0_analytic(cplx z) const;
    cplx w0_real(double x) const;

private:
    ExprAst g_;
    Cutoff eta_;
    double t_min_, contour_factor_;
    int nodes_;
};

struct SynthesizedControls {
    ControlSignal u_minus, u_plus;
    double sup_residual = -1.0;  // filled by verify_reach (>= 0 once verified)
    int floor_switches = 0;      // time nodes evaluated via the t_min limit
};

SynthesizedControls synthesize(const SynthesisProblem& p, bool parallel = true);

// Runs the oracle on (-L, L) seeded with the backward-evolved datum
// v(0, x) = w(tau, -ix) and the synthesized traces; returns
// sup_{|x| <= 0.9 L} |w(tau, x) - g(x)|.
double verify_reach(const SynthesizedControls& controls, const SynthesisProblem& p,
                    const std::optional<FdGrid>& grid_override = {});

// zero-padding restriction: controls on (-L, L) (L >= pi) padded by zero on
// (0, tau) and run on (0, 2 tau); returns the interior traces at z = 0 and
// z = pi as controls for the (0, pi) problem
std::pair<ControlSignal, ControlSignal> restrict_pad(const ControlSignal& u_minus,
                                                     const ControlSignal& u_plus, double L,
                                                     double tau, const ImagesConfig& cfg = {},
                                                     int out_nodes = 257);

} // namespace hh
