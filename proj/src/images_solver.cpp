#include "hh/images_solver.hpp"

#include <cmath>

#include "hh/hermite_kernel.hpp"
#include "hh/parallel.hpp"

namespace hh {

double psi(double s, double tau) {
    if (s > tau) throw DomainError("psi: s must satisfy 0 <= s <= tau");
    const double th = 2.0 * (tau - s);
    if (th == 0.0) return 0.0;
    const double ep = std::expm1(th), em = std::expm1(-th);
    // (1 - cosh th)/sinh th with both parts cancellation-free
    return -(ep + em) / (ep - em);
}

namespace {

double singularity_scale(cplx z, double a) {
    const cplx d = z - a;
    return std::max((d * d).real() / 4.0, 0.0);
}

cplx eval_rule(const ControlSignal& u, double t, cplx z, double a, const TimeRule& rule) {
    std::vector<cplx> terms(rule.sigma.size());
    for (std::size_t i = 0; i < rule.sigma.size(); ++i) {
        const double sg = rule.sigma[i];
        terms[i] = 2.0 * rule.w[i] * mehler_dk_dy(sg, z, a) * u.value(t - sg);
    }
    return pairwise_sum(terms);
}

void check_time(const ControlSignal& u, double t, const char* who) {
    if (t < 0.0) throw DomainError(std::string(who) + ": time must be nonnegative");
    if (t > u.horizon() * (1.0 + 1e-12))
        throw DomainError(std::string(who) + ": time exceeds the control horizon");
}

} // namespace

cplx image_term(const ControlSignal& u, double t, cplx z, double a, const ImagesConfig& cfg) {
    check_time(u, t, "image_term");
    if (t == 0.0) return {0.0, 0.0};
    const double c = singularity_scale(z, a);
    const cplx v1 = eval_rule(u, t, z, a, graded_time_rule(t, c, cfg.min_panels, cfg.quad_nodes));
    if (!cfg.checked) return v1;
    const cplx v2 =
        eval_rule(u, t, z, a, graded_time_rule(t, c, cfg.min_panels + 2, cfg.quad_nodes + 8));
    if (std::abs(v1 - v2) <= cfg.refine_tol * std::max(1.0, std::abs(v2))) return v2;
    const cplx v3 =
        eval_rule(u, t, z, a, graded_time_rule(t, c, cfg.min_panels + 5, cfg.quad_nodes + 16));
    const double achieved = std::abs(v2 - v3) / std::max(1.0, std::abs(v3));
    if (achieved <= cfg.refine_tol) return v3;
    throw NumericError("image_term: time quadrature did not converge under panel refinement",
                       achieved);
}

cplx phi_halfline_0(const ControlSignal& u0, double t, cplx z, const ImagesConfig& cfg) {
    return image_term(u0, t, z, 0.0, cfg);
}

cplx phi_halfline_pi(const ControlSignal& upi, double t, cplx z, const ImagesConfig& cfg) {
    return -image_term(upi, t, z, pi, cfg);
}

cplx remainder_0(const ControlSignal& u0, double t, cplx z, const ImagesConfig& cfg) {
    std::vector<cplx> terms;
    terms.reserve(2 * static_cast<std::size_t>(cfg.k_max));
    for (int k = -cfg.k_max; k <= cfg.k_max; ++k) {
        if (k == 0) continue;
        terms.push_back(image_term(u0, t, z, 2.0 * k * pi, cfg));
    }
    return pairwise_sum(terms);
}

cplx remainder_pi(const ControlSignal& upi, double t, cplx z, const ImagesConfig& cfg) {
    std::vector<cplx> terms;
    terms.reserve(2 * static_cast<std::size_t>(cfg.k_max));
    for (int k = -cfg.k_max; k <= cfg.k_max; ++k) {
        if (k == 0) continue;
        terms.push_back(-image_term(upi, t, z, (2.0 * k + 1.0) * pi, cfg));
    }
    return pairwise_sum(terms);
}

cplx phi_segment(const ControlSignal& u0, const ControlSignal& upi, double t, cplx z,
                 const ImagesConfig& cfg) {
    check_time(u0, t, "phi_segment");
    check_time(upi, t, "phi_segment");
    std::vector<cplx> terms;
    terms.reserve(4 * static_cast<std::size_t>(cfg.k_max) + 2);
    for (int k = -cfg.k_max; k <= cfg.k_max; ++k)
        terms.push_back(image_term(u0, t, z, 2.0 * k * pi, cfg));
    for (int k = -cfg.k_max; k <= cfg.k_max; ++k)
        terms.push_back(-image_term(upi, t, z, (2.0 * k + 1.0) * pi, cfg));
    return pairwise_sum(terms);
}

cplx phi_symmetric(const ControlSignal& u_minus, const ControlSignal& u_plus, double t, double L,
                   cplx z, const ImagesConfig& cfg) {
    if (!(L > 0.0)) throw DomainError("phi_symmetric: interval half-width must be positive");
    check_time(u_minus, t, "phi_symmetric");
    check_time(u_plus, t, "phi_symmetric");
    std::vector<cplx> terms;
    terms.reserve(4 * static_cast<std::size_t>(cfg.k_max) + 2);
    for (int k = -cfg.k_max; k <= cfg.k_max; ++k)
        terms.push_back(image_term(u_minus, t, z, (4.0 * k - 1.0) * L, cfg));
    for (int k = -cfg.k_max; k <= cfg.k_max; ++k)
        terms.push_back(-image_term(u_plus, t, z, (4.0 * k + 1.0) * L, cfg));
    return pairwise_sum(terms);
}

namespace detail {

StateField eval_field_impl(std::span<const cplx> zs, double t,
                           const std::function<cplx(cplx)>& point_eval, bool parallel) {
    StateField f;
    f.eval_points.assign(zs.begin(), zs.end());
    f.values.resize(zs.size());
    f.time = t;
    auto body = [&](std::size_t i) { f.values[i] = point_eval(f.eval_points[i]); };
    if (parallel)
        parallel_for(zs.size(), body);
    else
        serial_for(zs.size(), body);
    return f;
}

} // namespace detail

BatchedImageMap::BatchedImageMap(double t, double a, double sign, std::span<const cplx> zs,
                                 const ImagesConfig& cfg)
    : t_(t), n_z_(zs.size()) {
    if (!(t > 0.0)) throw DomainError("BatchedImageMap: time must be positive");
    double c_min = singularity_scale(zs.empty() ? cplx(1.0) : zs[0], a);
    for (const cplx z : zs) c_min = std::min(c_min, singularity_scale(z, a));
    const auto rule = graded_time_rule(t, c_min, cfg.min_panels, cfg.quad_nodes);
    sigma_ = rule.sigma;
    n_q_ = sigma_.size();
    kw_.resize(n_z_ * n_q_);
    parallel_for(n_z_, [&](std::size_t i) {
        for (std::size_t q = 0; q < n_q_; ++q)
            kw_[i * n_q_ + q] = sign * 2.0 * rule.w[q] * mehler_dk_dy(sigma_[q], zs[i], a);
    });
}

std::vector<cplx> BatchedImageMap::apply(const ControlSignal& u) const {
    check_time(u, t_, "BatchedImageMap::apply");
    std::vector<cplx> usamp(n_q_);
    for (std::size_t q = 0; q < n_q_; ++q) usamp[q] = u.value(t_ - sigma_[q]);
    std::vector<cplx> out(n_z_);
    parallel_for(n_z_, [&](std::size_t i) {
        std::vector<cplx> terms(n_q_);
        for (std::size_t q = 0; q < n_q_; ++q) terms[q] = kw_[i * n_q_ + q] * usamp[q];
        out[i] = pairwise_sum(terms);
    });
    return out;
}

} // namespace hh
