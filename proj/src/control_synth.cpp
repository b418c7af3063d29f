#include "hh/control_synth.hpp"

#include <cmath>

#include "hh/hermite_kernel.hpp"
#include "hh/parallel.hpp"

namespace hh {

namespace {
double bump_profile(double r) {  // e^{-1/r} partition of unity, 0 at r<=0, 1 at r>=1
    if (r <= 0.0) return 0.0;
    if (r >= 1.0) return 1.0;
    const double b = std::exp(-1.0 / r);
    const double c = std::exp(-1.0 / (1.0 - r));
    return b / (b + c);
}
} // namespace

double Cutoff::operator()(double x) const {
    return bump_profile((outer - std::abs(x)) / (outer - inner));
}

Cutoff make_cutoff(double inner, double outer) {
    if (!(0.0 < inner && inner < outer))
        throw DomainError("make_cutoff: need 0 < inner < outer");
    return {inner, outer};
}

cplx rotated_datum(const ExprAst& g, const Cutoff& eta, double x) {
    if (std::abs(x) >= eta.outer) return {0.0, 0.0};
    return eta(x) * g.eval(cplx(0.0, x));
}

void SynthesisProblem::validate() const {
    if (g.empty()) throw DomainError("SynthesisProblem: no target expression");
    if (g.variable() == 't') throw DomainError("SynthesisProblem: target must use the variable z");
    if (!(0.0 < L && L < inner && inner < outer))
        throw DomainError("SynthesisProblem: need 0 < L < inner < outer");
    if (!(tau > 0.0)) throw DomainError("SynthesisProblem: horizon must be positive");
    if (time_nodes < 2 || quad_nodes < 4) throw DomainError("SynthesisProblem: grid too coarse");
}

FreeEvolver::FreeEvolver(const SynthesisProblem& p)
    : g_(p.g), eta_(make_cutoff(p.inner, p.outer)), t_min_(p.t_min),
      contour_factor_(p.contour_factor), nodes_(p.quad_nodes) {
    p.validate();
}

cplx FreeEvolver::w0_analytic(cplx z) const { return g_.eval(cplx(0.0, 1.0) * z); }

cplx FreeEvolver::w0_real(double x) const { return rotated_datum(g_, eta_, x); }

FreeEvolver::Parts FreeEvolver::parts(double t, cplx z) const {
    Parts out{};
    if (t < t_min_) {
        out.below_floor = true;
        out.shifted = w0_analytic(z);
        return out;
    }
    const auto s = HyperbolicScales::at(t);
    const double mu = z.real() * s.inv_cosh2t;       // |K| peak along the line
    const double sig = std::sqrt(s.tanh2t);          // and its width
    const double W = eta_.inner;

    out.used_contour = std::abs(z.imag()) > contour_factor_ * s.tanh2t * eta_.outer;
    if (!out.used_contour) {
        auto f = [&](cplx xi) { return mehler_k(t, z, xi) * w0_real(xi.real()); };
        std::vector<cplx> pieces;
        for (auto [a, b] : {std::pair{-eta_.outer, -W}, std::pair{-W, W}, std::pair{W, eta_.outer}})
            pieces.push_back(gl_composite(f, peak_breakpoints(a, b, mu, sig), nodes_));
        out.shifted = pieces[1];
        out.tails = pieces[0] + pieces[2];
        return out;
    }

    // band tails stay on the real axis (eta is not analytic there)
    auto f_band = [&](cplx xi) { return mehler_k(t, z, xi) * w0_real(xi.real()); };
    out.tails = gl_composite(f_band, peak_breakpoints(-eta_.outer, -W, mu, sig), nodes_) +
                gl_composite(f_band, peak_breakpoints(W, eta_.outer, mu, sig), nodes_);

    // trapezoid: [-W, W] deformed onto the line Im = Im(z)/cosh(2t) with
    // lateral sides along the boundary of D_W, where g(i .) is analytic
    const double h = z.imag() * s.inv_cosh2t;
    const double ah = std::abs(h);
    auto f_holo = [&](cplx w) { return mehler_k(t, z, w) * w0_analytic(w); };
    if (ah < 1e-14) {
        out.shifted = gl_composite(f_holo, peak_breakpoints(-W, W, mu, sig), nodes_);
        return out;
    }
    const cplx left0(-W, 0.0), left1(-W + ah, h), right1(W - ah, h), right0(W, 0.0);
    out.lateral = gl_segment(f_holo, left0, left1, nodes_) +
                  gl_segment(f_holo, right1, right0, nodes_);
    auto f_shift = [&](cplx xi) { return f_holo(cplx(xi.real(), h)); };
    out.shifted =
        gl_composite(f_shift, peak_breakpoints(-W + ah, W - ah, mu, sig), nodes_);
    return out;
}

SynthesizedControls synthesize(const SynthesisProblem& p, bool parallel) {
    p.validate();
    const FreeEvolver evolve(p);
    const std::size_t n = static_cast<std::size_t>(p.time_nodes);
    std::vector<double> tg(n);
    std::vector<cplx> um(n), up(n);
    std::vector<int> floored(n, 0);
    auto body = [&](std::size_t i) {
        tg[i] = p.tau * double(i) / double(n - 1);
        const double te = p.tau - tg[i];
        const auto a = evolve.parts(te, cplx(0.0, p.L));
        const auto b = evolve.parts(te, cplx(0.0, -p.L));
        um[i] = a.total();
        up[i] = b.total();
        floored[i] = (a.below_floor || b.below_floor) ? 1 : 0;
    };
    if (parallel)
        parallel_for(n, body);
    else
        serial_for(n, body);

    SynthesizedControls out;
    out.u_minus = ControlSignal::from_samples(p.tau, tg, std::move(um));
    out.u_plus = ControlSignal::from_samples(p.tau, std::move(tg), std::move(up));
    for (int f : floored) out.floor_switches += f;
    if (p.run_verify) out.sup_residual = verify_reach(out, p);
    return out;
}

double verify_reach(const SynthesizedControls& controls, const SynthesisProblem& p,
                    const std::optional<FdGrid>& grid_override) {
    p.validate();
    FdGrid grid;
    if (grid_override) {
        grid = *grid_override;
    } else {
        grid.a = -p.L;
        grid.b = p.L;
        grid.n_x = 255;
        grid.tau = p.tau;
        const double dx = grid.dx();
        grid.n_t = static_cast<int>(std::ceil(p.tau / (0.75 * dx * dx)));
    }
    const FreeEvolver evolve(p);
    std::vector<cplx> w0(static_cast<std::size_t>(grid.n_x));
    parallel_for(w0.size(), [&](std::size_t i) {
        const double x = grid.a + grid.dx() * (double(i) + 1.0);
        w0[i] = evolve(p.tau, cplx(0.0, -x));  // v(0, x) = w(tau, -ix)
    });
    const CnResult run = cn_run(grid, controls.u_minus, controls.u_plus, w0);
    double sup = 0.0;
    for (std::size_t i = 0; i < run.x.size(); ++i) {
        if (std::abs(run.x[i]) > 0.9 * p.L) continue;
        sup = std::max(sup, std::abs(run.w[i] - p.g.eval(cplx(run.x[i], 0.0))));
    }
    return sup;
}

std::pair<ControlSignal, ControlSignal> restrict_pad(const ControlSignal& u_minus,
                                                     const ControlSignal& u_plus, double L,
                                                     double tau, const ImagesConfig& cfg,
                                                     int out_nodes) {
    if (L < pi) throw DomainError("restrict_pad: needs L >= pi");
    if (!(tau > 0.0)) throw DomainError("restrict_pad: horizon must be positive");
    auto pad = [tau](const ControlSignal& u) {
        return ControlSignal::from_function(
            2.0 * tau, [u, tau](double t) { return t > tau ? u.value(t - tau) : cplx(0.0, 0.0); });
    };
    const ControlSignal pm = pad(u_minus), pp = pad(u_plus);
    const std::size_t n = static_cast<std::size_t>(out_nodes);
    std::vector<double> tg(n);
    std::vector<cplx> v0(n), vpi(n);
    parallel_for(n, [&](std::size_t i) {
        tg[i] = 2.0 * tau * double(i) / double(n - 1);
        if (tg[i] == 0.0) {
            v0[i] = vpi[i] = 0.0;
            return;
        }
        v0[i] = phi_symmetric(pm, pp, tg[i], L, cplx(0.0), cfg);
        vpi[i] = phi_symmetric(pm, pp, tg[i], L, cplx(pi), cfg);
    });
    auto a = ControlSignal::from_samples(2.0 * tau, tg, std::move(v0));
    auto b = ControlSignal::from_samples(2.0 * tau, std::move(tg), std::move(vpi));
    return {std::move(a), std::move(b)};
}

} // namespace hh
