#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hh/control_signal.hpp"
#include "hh/scales.hpp"

namespace hh {

// Complex domains (squares with a diagonal on the real axis, right-angle
// sectors), weighted Bergman norms by rotated tensor Gauss-Legendre
// quadrature, and the operator-boundedness ratio over control ensembles.

struct SquareDomain {
    enum class Kind { SegmentDiagonal, Centered };
    Kind kind;
    double param;  // a (diagonal (0, a)) or L (diagonal (-L, L))

    static SquareDomain segment(double a);    // |x - a/2| + |y| < a/2
    static SquareDomain centered(double L);   // |x| + |y| < L
    bool contains(cplx z) const;
    double center() const { return kind == Kind::SegmentDiagonal ? 0.5 * param : 0.0; }
    double half_diag() const { return kind == Kind::SegmentDiagonal ? 0.5 * param : param; }
};

struct SectorDomain {
    cplx vertex;
    bool opens_right;  // |arg(z - vertex)| < pi/4, else |arg(vertex - z)| < pi/4
    bool contains(cplx z) const;
};

struct BergmanWeight {
    enum class Kind { Unit, Halfline };
    Kind kind = Kind::Unit;
    double tau = 1.0;  // halfline weight (1/tau) e^{Re(z^2)/(2 tau)}
    double operator()(cplx z) const;
    static BergmanWeight unit() { return {Kind::Unit, 1.0}; }
    static BergmanWeight halfline(double tau);
};

struct NormConfig {
    int nodes_per_panel = 12;
    int grading_levels = 8;  // geometric grading (ratio 1/2) toward each side
};

// quadrature nodes and area weights covering the square (exact geometry:
// axes rotated by pi/4, no indicator staircase)
struct SquareRule {
    std::vector<cplx> z;
    std::vector<double> w;
};
SquareRule square_rule(const SquareDomain& dom, const NormConfig& cfg = {});

double bergman_norm(const std::function<cplx(cplx)>& f, const SquareDomain& dom,
                    const BergmanWeight& w = BergmanWeight::unit(), const NormConfig& cfg = {},
                    bool parallel = true);

// discrete norm from precomputed samples on a rule's nodes
double bergman_norm_from_samples(std::span<const cplx> values, const SquareRule& rule,
                                 const BergmanWeight& w);

// sector norm, truncated where the accumulated shell contribution drops
// below tail_rel of the running total
double sector_norm(const std::function<cplx(cplx)>& f, const SectorDomain& dom,
                   const BergmanWeight& w, const NormConfig& cfg = {}, double tail_rel = 1e-12,
                   double max_radius = 64.0);

// max over an ensemble of ||Phi u||_{A^2(dom, w)} / ||u||_{L^2(0, tau)};
// `map` sends a control to its field samples on the rule's nodes
double boundedness_ratio(
    const std::function<std::vector<cplx>(const ControlSignal&)>& map,
    std::span<const ControlSignal> ensemble, const SquareRule& rule, const BergmanWeight& w);

} // namespace hh
