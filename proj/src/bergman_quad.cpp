#include "hh/bergman_quad.hpp"

#include <cmath>
#include <limits>

#include "hh/parallel.hpp"
#include "hh/quadrature.hpp"

namespace hh {

SquareDomain SquareDomain::segment(double a) {
    if (!(a > 0.0)) throw DomainError("SquareDomain: diagonal length must be positive");
    return {Kind::SegmentDiagonal, a};
}

SquareDomain SquareDomain::centered(double L) {
    if (!(L > 0.0)) throw DomainError("SquareDomain: half-width must be positive");
    return {Kind::Centered, L};
}

bool SquareDomain::contains(cplx z) const {
    return std::abs(z.real() - center()) + std::abs(z.imag()) < half_diag();
}

bool SectorDomain::contains(cplx z) const {
    const cplx d = opens_right ? z - vertex : vertex - z;
    if (d == cplx(0.0, 0.0)) return false;
    return std::abs(std::arg(d)) < pi / 4.0;
}

double BergmanWeight::operator()(cplx z) const {
    if (kind == Kind::Unit) return 1.0;
    return std::exp((z * z).real() / (2.0 * tau)) / tau;
}

BergmanWeight BergmanWeight::halfline(double tau) {
    if (!(tau > 0.0)) throw DomainError("BergmanWeight: tau must be positive");
    return {Kind::Halfline, tau};
}

namespace {

// 1-D panel breakpoints on [-M, M] graded (ratio 1/2) toward both ends
std::vector<double> graded_axis(double M, int levels) {
    std::vector<double> b;
    b.push_back(-M);
    for (int j = levels; j >= 1; --j) b.push_back(-M + M * std::ldexp(1.0, -j));
    for (int j = 1; j <= levels; ++j) b.push_back(M - M * std::ldexp(1.0, -j));
    b.push_back(M);
    return b;
}

} // namespace

SquareRule square_rule(const SquareDomain& dom, const NormConfig& cfg) {
    if (cfg.nodes_per_panel < 2 || cfg.grading_levels < 1)
        throw DomainError("square_rule: resolution too coarse");
    const double M = dom.half_diag() / std::sqrt(2.0);  // rotated half-side
    const double cx = dom.center();
    const auto breaks = graded_axis(M, cfg.grading_levels);
    const auto& g = gauss_legendre(cfg.nodes_per_panel);

    std::vector<double> nodes, weights;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
        const double half = 0.5 * (breaks[p + 1] - breaks[p]);
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            nodes.push_back(mid + half * g.x[i]);
            weights.push_back(half * g.w[i]);
        }
    }

    SquareRule rule;
    rule.z.reserve(nodes.size() * nodes.size());
    rule.w.reserve(nodes.size() * nodes.size());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t iu = 0; iu < nodes.size(); ++iu) {
        for (std::size_t iv = 0; iv < nodes.size(); ++iv) {
            const double u = nodes[iu], v = nodes[iv];
            rule.z.emplace_back(cx + (u - v) * inv_sqrt2, (u + v) * inv_sqrt2);
            rule.w.push_back(weights[iu] * weights[iv]);  // rotation has unit Jacobian
        }
    }
    return rule;
}

double bergman_norm_from_samples(std::span<const cplx> values, const SquareRule& rule,
                                 const BergmanWeight& w) {
    if (values.size() != rule.z.size())
        throw DomainError("bergman_norm_from_samples: sample/rule size mismatch");
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
            throw NumericError("bergman_norm: non-finite sample at node " + std::to_string(i) +
                                   " (z = " + std::to_string(rule.z[i].real()) + " + " +
                                   std::to_string(rule.z[i].imag()) + "i)",
                               std::numeric_limits<double>::infinity());
        terms[i] = std::norm(values[i]) * w(rule.z[i]) * rule.w[i];
    }
    return std::sqrt(std::max(pairwise_sum(terms), 0.0));
}

double bergman_norm(const std::function<cplx(cplx)>& f, const SquareDomain& dom,
                    const BergmanWeight& w, const NormConfig& cfg, bool parallel) {
    const SquareRule rule = square_rule(dom, cfg);
    std::vector<cplx> vals(rule.z.size());
    auto body = [&](std::size_t i) { vals[i] = f(rule.z[i]); };
    if (parallel)
        parallel_for(vals.size(), body);
    else
        serial_for(vals.size(), body);
    return bergman_norm_from_samples(vals, rule, w);
}

double sector_norm(const std::function<cplx(cplx)>& f, const SectorDomain& dom,
                   const BergmanWeight& w, const NormConfig& cfg, double tail_rel,
                   double max_radius) {
    // rotated coordinates: sector = {vertex +- (u + iv) e^{-i pi/4}, u, v > 0};
    // cover by unit-thick L-shells of the (u, v) quarter-plane
    const auto& g = gauss_legendre(std::max(cfg.nodes_per_panel, 8));
    const cplx rot = std::polar(1.0, -pi / 4.0);
    auto to_z = [&](double u, double v) {
        const cplx p = cplx(u, v) * rot;
        return dom.opens_right ? dom.vertex + p : dom.vertex - p;
    };
    auto cell = [&](double ua, double ub, double va, double vb) {
        double acc = 0.0;
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            const double u = 0.5 * (ua + ub) + 0.5 * (ub - ua) * g.x[i];
            for (std::size_t j = 0; j < g.x.size(); ++j) {
                const double v = 0.5 * (va + vb) + 0.5 * (vb - va) * g.x[j];
                const cplx z = to_z(u, v);
                acc += 0.25 * (ub - ua) * (vb - va) * g.w[i] * g.w[j] * std::norm(f(z)) * w(z);
            }
        }
        return acc;
    };
    double total = cell(0.0, 1.0, 0.0, 1.0);
    double R = 1.0;
    while (R < max_radius) {
        const double shell = cell(R, R + 1.0, 0.0, R + 1.0)   // right strip
                             + cell(0.0, R, R, R + 1.0);      // top strip
        total += shell;
        R += 1.0;
        if (shell < tail_rel * total) break;
    }
    return std::sqrt(std::max(total, 0.0));
}

double boundedness_ratio(
    const std::function<std::vector<cplx>(const ControlSignal&)>& map,
    std::span<const ControlSignal> ensemble, const SquareRule& rule, const BergmanWeight& w) {
    if (ensemble.empty()) throw DomainError("boundedness_ratio: empty ensemble");
    double best = 0.0;
    for (const ControlSignal& u : ensemble) {
        const double un = u.l2_norm();
        if (un == 0.0) continue;  // zero controls carry no information
        const auto field = map(u);
        best = std::max(best, bergman_norm_from_samples(field, rule, w) / un);
    }
    return best;
}

} // namespace hh
