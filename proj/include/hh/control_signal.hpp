#pragma once

#include <functional>
#include <vector>

#include "hh/expr.hpp"
#include "hh/scales.hpp"

namespace hh {

// Boundary control u on (0, horizon). Two backings:
//  - sampled: strictly increasing grid with a declared interpolation rule
//    (what quadratures integrate is the interpolant, never the raw samples);
//  - analytic: an exact evaluator (formula or closure), used for controls
//    given as expressions and for exactly transformed controls.
class ControlSignal {
public:
    enum class Interp { PiecewiseLinear, PiecewiseConstant };

    ControlSignal() = default;

    static ControlSignal zero(double horizon);
    static ControlSignal from_samples(double horizon, std::vector<double> t, std::vector<cplx> u,
                                      Interp interp = Interp::PiecewiseLinear);
    static ControlSignal from_function(double horizon, std::function<cplx(double)> f);
    static ControlSignal from_expr(double horizon, const ExprAst& ast);

    // interpolant/evaluator value; clamps to the end samples outside the grid
    cplx value(double t) const;

    // L^2(0, horizon) norm, exact per segment for sampled signals, composite
    // Gauss-Legendre for analytic ones
    double l2_norm() const;

    double horizon() const { return horizon_; }
    bool analytic() const { return fn_ != nullptr; }
    bool sampled() const { return !grid_.empty(); }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<cplx>& samples() const { return samples_; }
    Interp interp() const { return interp_; }

private:
    double horizon_ = 0.0;
    std::vector<double> grid_;
    std::vector<cplx> samples_;
    Interp interp_ = Interp::PiecewiseLinear;
    std::function<cplx(double)> fn_;
};

} // namespace hh
