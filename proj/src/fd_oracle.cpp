#include "hh/fd_oracle.hpp"

#include <cmath>
#include <limits>

namespace hh {

void FdGrid::validate() const {
    if (!(b > a)) throw DomainError("FdGrid: empty interval");
    if (n_x < 16) throw DomainError("FdGrid: need at least 16 interior nodes");
    if (n_t < 1) throw DomainError("FdGrid: need at least one time step");
    if (!(tau > 0.0)) throw DomainError("FdGrid: horizon must be positive");
    if (dt() > dx() * (1.0 + 1e-12))
        throw DomainError("FdGrid: dt <= dx required (accuracy margin)");
}

void thomas_solve(std::span<const double> lower, std::span<const double> diag,
                  std::span<const double> upper, std::span<cplx> rhs) {
    const std::size_t n = diag.size();
    static thread_local std::vector<double> cp;
    cp.assign(n, 0.0);
    double m = diag[0];
    cp[0] = upper[0] / m;
    rhs[0] /= m;
    for (std::size_t i = 1; i < n; ++i) {
        m = diag[i] - lower[i] * cp[i - 1];
        cp[i] = upper[i] / m;
        rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= cp[i] * rhs[i + 1];
}

CnResult cn_run(const FdGrid& grid, const ControlSignal& u_left, const ControlSignal& u_right,
                std::span<const cplx> w0, const CnOptions& opt) {
    grid.validate();
    if (grid.tau > u_left.horizon() * (1.0 + 1e-12) ||
        grid.tau > u_right.horizon() * (1.0 + 1e-12))
        throw DomainError("cn_run: horizon exceeds a control horizon");
    if (!w0.empty() && w0.size() != static_cast<std::size_t>(grid.n_x))
        throw DomainError("cn_run: initial samples must match the interior grid");

    const std::size_t n = static_cast<std::size_t>(grid.n_x);
    const double dx = grid.dx(), dt = grid.dt(), r = dt / (dx * dx);

    std::vector<double> lower(n, -0.5 * r), upper(n, -0.5 * r), diag(n), expl_diag(n);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = grid.a + dx * (double(i) + 1.0);
        const double ai = 2.0 / (dx * dx) + x[i] * x[i];  // tridiag(-1,2,-1)/dx^2 + x^2
        diag[i] = 1.0 + 0.5 * dt * ai;
        expl_diag[i] = 1.0 - 0.5 * dt * ai;
    }

    CnResult res;
    res.x = x;
    res.w.assign(n, cplx(0.0, 0.0));
    if (!w0.empty()) res.w.assign(w0.begin(), w0.end());
    res.min_real = 0.0;
    if (opt.record_l2) res.l2.reserve(static_cast<std::size_t>(grid.n_t) + 1);

    auto l2_of = [&](std::span<const cplx> v) {
        double acc = 0.0;
        for (const cplx& c : v) acc += std::norm(c);
        return std::sqrt(acc * dx);
    };
    if (opt.record_l2) res.l2.push_back(l2_of(res.w));

    std::vector<cplx> rhs(n);
    for (int step = 0; step < grid.n_t; ++step) {
        const double th = (double(step) + 0.5) * dt;
        for (std::size_t i = 0; i < n; ++i) {
            rhs[i] = expl_diag[i] * res.w[i];
            if (i > 0) rhs[i] += 0.5 * r * res.w[i - 1];
            if (i + 1 < n) rhs[i] += 0.5 * r * res.w[i + 1];
        }
        rhs[0] += r * u_left.value(th);
        rhs[n - 1] += r * u_right.value(th);
        if (opt.source)
            for (std::size_t i = 0; i < n; ++i) rhs[i] += dt * opt.source(th, x[i]);
        thomas_solve(lower, diag, upper, rhs);
        res.w = rhs;
        for (const cplx& c : res.w)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw NumericError("cn_run: non-finite state at step " + std::to_string(step),
                                   std::numeric_limits<double>::infinity());
        if (opt.record_l2) res.l2.push_back(l2_of(res.w));
        if (opt.record_min_real)
            for (const cplx& c : res.w) res.min_real = std::min(res.min_real, c.real());
    }
    return res;
}

double cn_convergence(const FdGrid& base, int levels,
                      const std::function<CnResult(const FdGrid&)>& runner) {
    if (levels < 3) throw DomainError("cn_convergence: need at least 3 grid levels");
    std::vector<CnResult> runs;
    FdGrid g = base;
    for (int l = 0; l < levels; ++l) {
        runs.push_back(runner(g));
        g.n_x = 2 * g.n_x + 1;  // nested refinement keeps coarse nodes
        g.n_t *= 2;
    }
    // max difference on the common (coarsest) nodes between successive levels
    std::vector<double> diff;
    for (int l = 0; l + 1 < levels; ++l) {
        const auto& wc = runs[static_cast<std::size_t>(l)].w;
        const auto& wf = runs[static_cast<std::size_t>(l) + 1].w;
        std::size_t stride = (wf.size() + 1) / (wc.size() + 1);
        double d = 0.0;
        for (std::size_t i = 0; i < wc.size(); ++i)
            d = std::max(d, std::abs(wc[i] - wf[(i + 1) * stride - 1]));
        if (d == 0.0) throw DomainError("cn_convergence: degenerate (identical) solutions");
        diff.push_back(d);
    }
    double order = 0.0;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i)
        order += std::log2(diff[i] / diff[i + 1]);
    return order / double(diff.size() - 1);
}

} // namespace hh
