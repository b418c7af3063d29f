#include "hh/control_signal.hpp"

#include <algorithm>
#include <cmath>

#include "hh/quadrature.hpp"

namespace hh {

ControlSignal ControlSignal::zero(double horizon) {
    return from_function(horizon, [](double) { return cplx(0.0, 0.0); });
}

ControlSignal ControlSignal::from_samples(double horizon, std::vector<double> t,
                                          std::vector<cplx> u, Interp interp) {
    if (!(horizon > 0.0)) throw DomainError("ControlSignal: horizon must be positive");
    if (t.size() != u.size() || t.empty())
        throw DomainError("ControlSignal: sample vectors must be nonempty and of equal length");
    if (t.front() < 0.0 || t.back() > horizon * (1.0 + 1e-12))
        throw DomainError("ControlSignal: sample grid must lie in [0, horizon]");
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (!(t[i] < t[i + 1])) throw DomainError("ControlSignal: grid must be strictly increasing");
    ControlSignal s;
    s.horizon_ = horizon;
    s.grid_ = std::move(t);
    s.samples_ = std::move(u);
    s.interp_ = interp;
    return s;
}

ControlSignal ControlSignal::from_function(double horizon, std::function<cplx(double)> f) {
    if (!(horizon > 0.0)) throw DomainError("ControlSignal: horizon must be positive");
    ControlSignal s;
    s.horizon_ = horizon;
    s.fn_ = std::move(f);
    return s;
}

ControlSignal ControlSignal::from_expr(double horizon, const ExprAst& ast) {
    if (!ast.empty() && ast.variable() == 'z')
        throw DomainError("ControlSignal: control formulas use the variable 't'");
    return from_function(horizon, [ast](double t) { return ast.eval(cplx(t, 0.0)); });
}

cplx ControlSignal::value(double t) const {
    if (fn_) return fn_(t);
    if (grid_.empty()) return {0.0, 0.0};
    if (t <= grid_.front()) return samples_.front();
    if (t >= grid_.back()) return samples_.back();
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
    if (interp_ == Interp::PiecewiseConstant) return samples_[i];
    const double w = (t - grid_[i]) / (grid_[i + 1] - grid_[i]);
    return samples_[i] * (1.0 - w) + samples_[i + 1] * w;
}

double ControlSignal::l2_norm() const {
    if (fn_) {
        const auto& g = gauss_legendre(16);
        const int panels = 96;
        std::vector<double> parts(static_cast<std::size_t>(panels));
        const double h = horizon_ / panels;
        for (int p = 0; p < panels; ++p) {
            const double a = p * h, mid = a + 0.5 * h, half = 0.5 * h;
            double acc = 0.0;
            for (std::size_t i = 0; i < g.x.size(); ++i)
                acc += half * g.w[i] * std::norm(fn_(mid + half * g.x[i]));
            parts[static_cast<std::size_t>(p)] = acc;
        }
        return std::sqrt(pairwise_sum(parts));
    }
    if (grid_.empty()) return 0.0;
    double acc = 0.0;
    // constant extension on [0, t0] and [t_last, horizon]
    acc += grid_.front() * std::norm(samples_.front());
    acc += (horizon_ - grid_.back()) * std::norm(samples_.back());
    for (std::size_t i = 0; i + 1 < grid_.size(); ++i) {
        const double h = grid_[i + 1] - grid_[i];
        if (interp_ == Interp::PiecewiseConstant) {
            acc += h * std::norm(samples_[i]);
        } else {
            const cplx a = samples_[i], b = samples_[i + 1];
            acc += h * (std::norm(a) + (a * std::conj(b)).real() + std::norm(b)) / 3.0;
        }
    }
    return std::sqrt(std::max(acc, 0.0));
}

} // namespace hh
