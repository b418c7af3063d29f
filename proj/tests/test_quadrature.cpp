#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hh/quadrature.hpp"
#include "test_support.hpp"

using namespace hh;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto& q = gauss_legendre(6);
    double acc = 0.0;  // int_{-1}^1 x^10 dx = 2/11, degree 10 < 2*6
    for (std::size_t i = 0; i < q.x.size(); ++i) acc += q.w[i] * std::pow(q.x[i], 10);
    CHECK(acc == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
    CHECK(std::accumulate(q.w.begin(), q.w.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gl_segment on a complex path") {
    // int_0^{1+i} e^w dw = e^{1+i} - 1
    const cplx v = gl_segment([](cplx w) { return std::exp(w); }, cplx(0.0), cplx(1.0, 1.0), 24);
    const cplx expect = std::exp(cplx(1.0, 1.0)) - 1.0;
    CHECK(std::abs(v - expect) <= 1e-14);
}

TEST_CASE("gauss-hermite total weights") {
    const auto& q = gauss_hermite(200);
    double acc = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i) acc += q.wt[i] * std::exp(-q.x[i] * q.x[i]);
    CHECK(acc == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));

    // shifted/scaled Gaussian: integral e^{-(s-3)^2/2} ds = sqrt(2 pi)
    const cplx m = gauss_hermite_line(
        [](double s) { return cplx(std::exp(-0.5 * (s - 3.0) * (s - 3.0))); }, 3.0,
        std::sqrt(2.0), 80);
    CHECK(std::abs(m - std::sqrt(2.0 * pi)) <= 1e-12);
}

TEST_CASE("graded time rule resolves the sigma^{-3/2} endpoint") {
    // int_0^t s^{-3/2} e^{-c/s} ds = sqrt(pi/c) erfc(sqrt(c/t))
    for (double c : {0.01, 0.2, 2.0}) {
        const double t = 0.5;
        const auto rule = graded_time_rule(t, c, 12, 24);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.sigma.size(); ++i)
            acc += rule.w[i] * std::exp(-c / rule.sigma[i]) / std::pow(rule.sigma[i], 1.5);
        const double expect = std::sqrt(pi / c) * std::erfc(std::sqrt(c / t));
        CHECK(acc == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("peak breakpoints cover narrow Gaussians") {
    const double sig = 1e-3, mu = 0.37;
    const auto breaks = peak_breakpoints(0.0, 1.0, mu, sig);
    const cplx v = gl_composite(
        [&](cplx x) {
            const double d = x.real() - mu;
            return cplx(std::exp(-d * d / (sig * sig)));
        },
        breaks, 32);
    CHECK(std::abs(v - sig * std::sqrt(pi)) <= 1e-12 * sig);
}

TEST_CASE("pairwise sum matches sequential for well-scaled data") {
    auto g = hhtest::rng(3);
    std::vector<double> v(1000);
    for (auto& x : v) x = hhtest::urand(g, -1.0, 1.0);
    const double seq = std::accumulate(v.begin(), v.end(), 0.0);
    CHECK(pairwise_sum(v) == doctest::Approx(seq).epsilon(1e-12));
}
