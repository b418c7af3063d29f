#include "hh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "hh/hermite_kernel.hpp"

namespace hh {

namespace {

GaussLegendre compute_legendre(int n) {
    GaussLegendre q;
    q.x.resize(n);
    q.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        q.x[i] = -z;
        q.x[n - 1 - i] = z;
        q.w[i] = q.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return q;
}

GaussHermite compute_hermite(int n) {
    GaussHermite q;
    q.x.resize(n);
    q.wt.resize(n);
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        // classical initial guesses, largest root first
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(double(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * q.x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * q.x[1];
        else
            z = 2.0 * z - q.x[i - 2];

        for (int it = 0; it < 200; ++it) {
            const auto h = hermite_h_all(n + 1, z);
            const double hn = h[n];
            const double dh = -z * hn + std::sqrt(2.0 * n) * h[n - 1];
            const double dz = hn / dh;
            z -= dz;
            if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        const double hnm1 = hermite_h(n - 1, z);
        q.x[i] = z;  // positive roots descending
        q.wt[i] = 1.0 / (n * hnm1 * hnm1);
    }
    // mirror and sort ascending
    GaussHermite out;
    out.x.resize(n);
    out.wt.resize(n);
    for (int i = 0; i < m; ++i) {
        out.x[n - 1 - i] = q.x[i];
        out.wt[n - 1 - i] = q.wt[i];
        out.x[i] = -q.x[i];
        out.wt[i] = q.wt[i];
    }
    if (n % 2 == 1) out.x[n / 2] = 0.0;  // exact middle root
    return out;
}

template <class Rule, Rule (*Compute)(int)>
const Rule& cached_rule(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Compute(n)).first;
    return it->second;
}

} // namespace

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
    return cached_rule<GaussLegendre, compute_legendre>(n);
}

const GaussHermite& gauss_hermite(int n) {
    if (n < 2) throw DomainError("gauss_hermite: need n >= 2");
    return cached_rule<GaussHermite, compute_hermite>(n);
}

namespace {
template <class T>
T pairwise_impl(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T acc{};
        for (const auto& e : v) acc += e;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_impl(v.first(half)) + pairwise_impl(v.subspan(half));
}
} // namespace

double pairwise_sum(std::span<const double> v) { return pairwise_impl(v); }
cplx pairwise_sum(std::span<const cplx> v) { return pairwise_impl(v); }

std::vector<double> peak_breakpoints(double a, double b, double mu, double sigma) {
    std::vector<double> pts{a, b};
    if (sigma > 0.0 && sigma < (b - a)) {
        for (double k : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0}) {
            const double p = mu + k * sigma;
            if (p > a && p < b) pts.push_back(p);
        }
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    for (double p : pts)
        if (out.empty() || p - out.back() > 1e-14 * std::max(1.0, std::abs(b - a))) out.push_back(p);
    if (out.size() < 2 || out.back() != b) out.push_back(b);
    return out;
}

TimeRule graded_time_rule(double t, double c, int min_levels, int nodes_per_panel) {
    if (!(t > 0.0)) throw DomainError("graded_time_rule: horizon must be positive");
    int levels = min_levels;
    if (c > 0.0) {
        const double sigma_star = 2.0 * c / 3.0;
        if (sigma_star < t) {
            const int need = static_cast<int>(std::ceil(std::log2(8.0 * t / sigma_star)));
            levels = std::clamp(std::max(min_levels, need), min_levels, 64);
        }
    }
    const auto& g = gauss_legendre(nodes_per_panel);
    TimeRule r;
    r.sigma.reserve(static_cast<std::size_t>(levels + 1) * g.x.size());
    r.w.reserve(r.sigma.capacity());
    double lo = 0.0;
    for (int j = levels; j >= 0; --j) {
        const double hi = t * std::ldexp(1.0, -j);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            r.sigma.push_back(mid + half * g.x[i]);
            r.w.push_back(half * g.w[i]);
        }
        lo = hi;
    }
    return r;
}

} // namespace hh
