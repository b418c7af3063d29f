#include "hh/halfline_maps.hpp"

#include <cmath>

#include "hh/parallel.hpp"

namespace hh {

Reparam Reparam::from_tau(double tau) {
    if (!(tau > 0.0)) throw DomainError("Reparam: tau must be positive");
    return {tau, 0.5 * std::tanh(2.0 * tau)};
}

double alpha(double s, double tau) {
    if (s < 0.0 || s > tau) throw DomainError("alpha: s must lie in [0, tau]");
    return 0.5 * std::tanh(2.0 * (tau - s));
}

double alpha_inv(double x, double tau) {
    const double T = 0.5 * std::tanh(2.0 * tau);
    if (x < 0.0 || x > T * (1.0 + 1e-12)) throw DomainError("alpha_inv: x must lie in [0, T]");
    const double y = std::min(2.0 * x, 1.0 - 1e-15);  // atanh guard at the endpoint
    return tau - 0.5 * std::atanh(y);
}

namespace {

cplx heat_rule_eval(const ControlSignal& f, double T, cplx z, const TimeRule& rule) {
    std::vector<cplx> terms(rule.sigma.size());
    const double pref = 1.0 / (2.0 * std::sqrt(pi));
    for (std::size_t i = 0; i < rule.sigma.size(); ++i) {
        const double v = rule.sigma[i];  // v = T - s
        terms[i] = rule.w[i] * pref * z * exp_clamped(-z * z / (4.0 * v)) / (v * std::sqrt(v)) *
                   f.value(T - v);
    }
    return pairwise_sum(terms);
}

} // namespace

cplx heat_phi(const ControlSignal& f, double T, cplx z, const ImagesConfig& cfg) {
    if (!(T > 0.0)) throw DomainError("heat_phi: horizon must be positive");
    if (T > f.horizon() * (1.0 + 1e-12))
        throw DomainError("heat_phi: horizon exceeds the control horizon");
    const double c = std::max((z * z).real() / 4.0, 0.0);
    const cplx v1 = heat_rule_eval(f, T, z, graded_time_rule(T, c, cfg.min_panels, cfg.quad_nodes));
    if (!cfg.checked) return v1;
    const cplx v2 =
        heat_rule_eval(f, T, z, graded_time_rule(T, c, cfg.min_panels + 2, cfg.quad_nodes + 8));
    if (std::abs(v1 - v2) <= cfg.refine_tol * std::max(1.0, std::abs(v2))) return v2;
    const cplx v3 =
        heat_rule_eval(f, T, z, graded_time_rule(T, c, cfg.min_panels + 5, cfg.quad_nodes + 16));
    const double achieved = std::abs(v2 - v3) / std::max(1.0, std::abs(v3));
    if (achieved <= cfg.refine_tol) return v3;
    throw NumericError("heat_phi: time quadrature did not converge under panel refinement",
                       achieved);
}

ControlSignal reparam_S(const ControlSignal& u0, double tau) {
    const auto rp = Reparam::from_tau(tau);
    const double T = rp.T;
    auto transformed = [u0, tau, T](double t) -> cplx {
        const double x = std::clamp(T - t, 0.0, T);
        const double fac = std::pow(std::max(1.0 - 4.0 * x * x, 1e-300), -0.25);
        return fac * u0.value(alpha_inv(x, tau));
    };
    if (u0.analytic()) return ControlSignal::from_function(T, transformed);
    const std::size_t n = std::max<std::size_t>(u0.grid().size(), 2);
    std::vector<double> t(n);
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = T * double(i) / double(n - 1);
        v[i] = transformed(t[i]);
    }
    return ControlSignal::from_samples(T, std::move(t), std::move(v), u0.interp());
}

ControlSignal reparam_S_inv(const ControlSignal& v, double tau) {
    const auto rp = Reparam::from_tau(tau);
    const double T = rp.T;
    auto back = [v, tau, T](double s) -> cplx {
        const double x = alpha(std::clamp(s, 0.0, tau), tau);
        const double fac = std::pow(std::max(1.0 - 4.0 * x * x, 1e-300), 0.25);
        return fac * v.value(T - x);
    };
    if (v.analytic()) return ControlSignal::from_function(tau, back);
    const std::size_t n = std::max<std::size_t>(v.grid().size(), 2);
    std::vector<double> t(n);
    std::vector<cplx> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = tau * double(i) / double(n - 1);
        u[i] = back(t[i]);
    }
    return ControlSignal::from_samples(tau, std::move(t), std::move(u), v.interp());
}

double verify_halfline_identity(const ControlSignal& u0, double tau, std::span<const cplx> zs,
                                const ImagesConfig& cfg, bool parallel) {
    if (zs.empty()) throw DomainError("verify_halfline_identity: need at least one point");
    const auto rp = Reparam::from_tau(tau);
    const ControlSignal tu = reparam_S(u0, tau);
    std::vector<double> dev(zs.size());
    auto body = [&](std::size_t i) {
        dev[i] = std::abs(phi_halfline_0(u0, tau, zs[i], cfg) - heat_phi(tu, rp.T, zs[i], cfg));
    };
    if (parallel)
        parallel_for(zs.size(), body);
    else
        serial_for(zs.size(), body);
    double m = 0.0;
    for (double d : dev) m = std::max(m, d);
    return m;
}

} // namespace hh
