#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hh/control_signal.hpp"

namespace hh {

// Crank-Nicolson scheme for d_t w = d_xx w - x^2 w on (a, b) with
// time-dependent Dirichlet data; the independent oracle for the closed-form
// operators. Boundary values are injected at half-steps t_{n+1/2}; the
// tridiagonal systems go through the Thomas algorithm.

struct FdGrid {
    double a, b;   // interval
    int n_x;       // interior nodes (uniform)
    int n_t;       // time steps
    double tau;    // horizon

    double dx() const { return (b - a) / (n_x + 1); }
    double dt() const { return tau / n_t; }
    void validate() const;
};

struct CnOptions {
    std::function<cplx(double, double)> source;  // optional S(t, x)
    bool record_l2 = false;
    bool record_min_real = false;
};

struct CnResult {
    std::vector<double> x;       // interior nodes
    std::vector<cplx> w;         // state at tau
    std::vector<double> l2;      // per-step discrete L2 norms (if recorded)
    double min_real = 0.0;       // min real part over the whole run (if recorded)
};

CnResult cn_run(const FdGrid& grid, const ControlSignal& u_left, const ControlSignal& u_right,
                std::span<const cplx> w0 = {}, const CnOptions& opt = {});

// Richardson order estimate from runs on nested grids (n_x -> 2 n_x + 1).
// `runner` produces the final state for a given grid; needs >= 3 levels.
double cn_convergence(const FdGrid& base, int levels,
                      const std::function<CnResult(const FdGrid&)>& runner);

// complex tridiagonal solve (Thomas), diag/lower/upper constant in time
void thomas_solve(std::span<const double> lower, std::span<const double> diag,
                  std::span<const double> upper, std::span<cplx> rhs);

} // namespace hh
