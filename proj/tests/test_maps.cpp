#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "stripclass/maps.hpp"
#include "stripclass/sampling.hpp"
#include "stripclass/verify.hpp"

using namespace stripclass;
using std::numbers::pi;

namespace {

constexpr cplx I{0.0, 1.0};

template <class F>
void for_each_grid_point(double r_max, F&& f) {
    for (int i = 1; i <= 64; ++i) {
        const double r = r_max * i / 64.0;
        for (int j = 0; j < 64; ++j) {
            f(std::polar(r, 2.0 * pi * j / 64.0));
        }
    }
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(StripParams(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(StripParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(StripParams(0.5, NAN), std::invalid_argument);
    CHECK(StripParams(0.5, 1.5).mu() == 0.5);
    CHECK(StripParams(0.5, 1.5).phase() == cplx(-1.0));

    CHECK_THROWS_AS(DorffParam(1.0), std::invalid_argument);
    CHECK_THROWS_AS(DorffParam{pi}, std::invalid_argument);
    CHECK_NOTHROW(DorffParam(pi - 1e-6));
    CHECK(DorffParam(1.5707963).delta() == pi / 2);
    CHECK(DorffParam(pi / 2).sin_delta() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("strip map values") {
    const StripParams p(0.5, 1.5);
    CHECK(p_strip_eval(p, 0.0) == cplx(1.0));
    const cplx v = p_strip_eval(p, 0.5);
    CHECK(v.real() > 0.5);
    CHECK(v.real() < 1.5);
    // mu = 1/2: P = 1 + (i/pi) log((1+z)/(1-z)).
    CHECK(std::abs(v - (1.0 + I / pi * std::log(3.0))) < 1e-15);
    CHECK_THROWS_AS(p_strip_eval(p, 1.0), std::domain_error);
}

TEST_CASE("strip coefficients") {
    const StripParams p(0.5, 1.5);
    CHECK(std::abs(b_strip_coeff(p, 1) - 2.0 * I / pi) < 1e-15);
    CHECK(b_strip_coeff(p, 2) == cplx{});
    CHECK(std::abs(p_hat_coeff(p, 1) - 2.0 * I / pi) < 1e-15);
    CHECK(std::abs(p_hat_coeff(p, 3) - 2.0 * I / (9.0 * pi)) < 1e-15);
    for (int n = 1; n <= 64; ++n) {
        CHECK(p_hat_coeff(p, n) == b_strip_coeff(p, n) / static_cast<double>(n));
    }
    CHECK_THROWS_AS(b_strip_coeff(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(p_hat_coeff(p, -1), std::invalid_argument);

    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = random_strip_params(rng);
        CHECK(std::abs(b_strip_coeff(q, 1)) > 0.0);
        for (int n = 1; n <= 40; ++n) {
            CHECK(std::abs(b_strip_coeff(q, n)) <= 2.0 * q.width() / (n * pi) * (1 + 1e-14));
        }
    }
}

TEST_CASE("Dorff coefficients") {
    const DorffParam d(pi / 2);
    CHECK(a_dorff_coeff(d, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(a_dorff_coeff(d, 2)) < 1e-15);
    CHECK(std::abs(a_dorff_coeff(d, 3) + 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(b_tilde_coeff(d, 1) - 1.0) < 1e-15);
    CHECK(std::abs(b_tilde_coeff(d, 3) + 1.0 / 9.0) < 1e-15);
    CHECK_THROWS_AS(a_dorff_coeff(d, 0), std::invalid_argument);

    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const auto e = random_dorff_param(rng);
        CHECK(std::abs(a_dorff_coeff(e, 1) - 1.0) < 1e-12);
        for (int n = 1; n <= 40; ++n) {
            // Literal (-1)^(n-1) sin(n delta) / (n sin delta), fine away from delta = pi.
            const double sign = n % 2 == 1 ? 1.0 : -1.0;
            const double literal = sign * std::sin(n * e.delta()) / (n * std::sin(e.delta()));
            CHECK(std::abs(a_dorff_coeff(e, n) - literal) < 1e-9);
            CHECK(std::abs(a_dorff_coeff(e, n)) <= std::min<double>(n, 1.0 / e.sin_delta()) / n + 1e-12);
        }
    }
    // The integrated series is the coefficient-wise quotient.
    const auto integrated = integrate_over_t(dorff_series(DorffParam(2.0), 32));
    const auto direct = b_tilde_series(DorffParam(2.0), 32);
    for (std::size_t n = 1; n <= 32; ++n) {
        CHECK(integrated[n] == direct[n]);
    }
}

TEST_CASE("Dorff map values") {
    const DorffParam d(pi / 2);
    CHECK(dorff_eval(d, 0.0) == cplx{});
    // delta = pi/2: B = (1/(2i)) log((1+iz)/(1-iz)) = arctan z.
    for (double x : {-0.7, 0.2, 0.9}) {
        CHECK(std::abs(dorff_eval(d, x) - std::atan(x)) < 1e-15);
    }
    const auto c = coeffs_by_circle_sampling([&](cplx z) { return dorff_eval(d, z); }, 8, 0.5);
    CHECK(std::abs(c[1] - 1.0) < 1e-10);
}

TEST_CASE("closed-form coefficients match DFT extraction") {
    // Dividing by r^n amplifies roundoff by 2^32 at r = 0.5, n = 32; r = 0.8
    // keeps both that and the aliasing term r^M near 1e-12.
    constexpr double r = 0.8;
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_strip_params(rng);
        const auto d = random_dorff_param(rng);
        const auto pc = coeffs_by_circle_sampling([&](cplx z) { return p_strip_eval(p, z); }, 32, r);
        const auto hc = coeffs_by_circle_sampling([&](cplx z) { return p_hat_eval(p, z); }, 32, r);
        const auto dc = coeffs_by_circle_sampling([&](cplx z) { return dorff_eval(d, z); }, 32, r);
        const auto tc = coeffs_by_circle_sampling([&](cplx z) { return b_tilde_eval(d, z); }, 32, r);
        CHECK(std::abs(pc[0] - 1.0) < 1e-8);
        for (int n = 1; n <= 32; ++n) {
            CHECK(std::abs(pc[n] - b_strip_coeff(p, n)) < 1e-8);
            CHECK(std::abs(hc[n] - p_hat_coeff(p, n)) < 1e-8);
            CHECK(std::abs(dc[n] - a_dorff_coeff(d, n)) < 1e-8);
            CHECK(std::abs(tc[n] - b_tilde_coeff(d, n)) < 1e-8);
        }
    }
}

TEST_CASE("derivatives match finite differences") {
    const StripParams p(-0.4, 2.7);
    const DorffParam d(2.3);
    const cplx z(0.3, -0.45);
    const double h = 1e-6;
    const cplx fp = (p_strip_eval(p, z + h) - p_strip_eval(p, z - h)) / (2 * h);
    const cplx fd = (dorff_eval(d, z + h) - dorff_eval(d, z - h)) / (2 * h);
    CHECK(std::abs(fp - p_strip_derivative(p, z)) < 1e-8);
    CHECK(std::abs(fd - dorff_derivative(d, z)) < 1e-8);
}

TEST_CASE("range containment on a polar grid") {
    const StripParams p(0.5, 1.5);
    for_each_grid_point(0.999, [&](cplx z) {
        const double re = p_strip_eval(p, z).real();
        CHECK((re > 0.5 && re < 1.5));
    });
    const DorffParam d(pi / 2);
    for_each_grid_point(0.999, [&](cplx z) {
        const double re = dorff_eval(d, z).real();
        CHECK((re > -pi / 4 && re < pi / 4));
    });

    Rng rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        const auto q = random_strip_params(rng);
        const auto e = random_dorff_param(rng);
        const double lo = (e.delta() - pi) / (2 * e.sin_delta());
        const double hi = e.delta() / (2 * e.sin_delta());
        int outside = 0;
        for_each_grid_point(0.999, [&](cplx z) {
            const double a = p_strip_eval(q, z).real();
            const double b = dorff_eval(e, z).real();
            outside += !(a > q.alpha() && a < q.beta()) + !(b > lo && b < hi);
        });
        CHECK(outside == 0);
        // re_range is the range of 1 + B for the Dorff class.
        const auto [rlo, rhi] = re_range(e);
        CHECK(std::abs(rlo - (1 + lo)) < 1e-12);
        CHECK(std::abs(rhi - (1 + hi)) < 1e-12);
    }
}

TEST_CASE("convexity witnesses") {
    const StripParams p(0.5, 1.5);
    CHECK_FALSE(convexity_probe([&](cplx z) { return p_hat_eval(p, z); }, 0.99, 256).violated());
    CHECK_FALSE(convexity_probe([](cplx z) { return z; }, 0.99, 64).violated());
    CHECK(convexity_probe([](cplx z) { return z + 2.0 * z * z; }, 0.9, 256).violated());

    Rng rng(10);
    for (int trial = 0; trial < 3; ++trial) {
        const auto q = random_strip_params(rng);
        const auto e = random_dorff_param(rng);
        CHECK_FALSE(convexity_probe([&](cplx z) { return p_strip_eval(q, z); }, 0.99, 256).violated());
        CHECK_FALSE(convexity_probe([&](cplx z) { return dorff_eval(e, z); }, 0.99, 256).violated());
        CHECK_FALSE(convexity_probe([&](cplx z) { return b_tilde_eval(e, z); }, 0.99, 256).violated());
    }
}
