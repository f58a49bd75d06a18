#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "stripclass/polylog.hpp"
#include "stripclass/sampling.hpp"

using namespace stripclass;
using std::numbers::pi;

namespace {

const double pi4 = pi * pi * pi * pi;

// 2 sum cos(n theta)/n^4, summed backwards with a 1/(3 M^3) tail allowance.
double brute_symmetric(double theta, int terms) {
    double s = 0.0;
    for (int n = terms; n >= 1; --n) {
        const double nn = static_cast<double>(n);
        s += std::cos(nn * theta) / (nn * nn * nn * nn);
    }
    return 2.0 * s;
}

} // namespace

TEST_CASE("special values") {
    CHECK(std::abs(polylog(4, 1.0).value - pi4 / 90.0) < 1e-10);
    CHECK(std::abs(polylog(4, -1.0).value + 7.0 * pi4 / 720.0) < 1e-10);
    CHECK(std::abs(polylog(4, 1.0).value.real() - 1.0823232337111382) < 1e-10);
    CHECK(std::abs(polylog(4, -1.0).value.real() + 0.94703282949724592) < 1e-10);
    CHECK(polylog(4, 0.0).value == std::complex<double>{});
    CHECK(std::abs(polylog(2, 1.0, 1e-6).value - pi * pi / 6.0) < 2e-6);
    CHECK(std::abs(polylog(3, 1.0, 1e-11).value - 1.2020569031595942) < 2e-11);
    // Li_2(1/2) = pi^2/12 - log(2)^2/2.
    const double l2 = std::log(2.0);
    CHECK(std::abs(polylog(2, 0.5).value - (pi * pi / 12.0 - l2 * l2 / 2.0)) < 1e-12);
}

TEST_CASE("tail bound covers the true error") {
    for (double tol : {1e-4, 1e-6, 1e-9}) {
        const auto r = polylog(4, 1.0, tol);
        CHECK(r.tail_bound <= tol);
        CHECK(std::abs(r.value - pi4 / 90.0) <= r.tail_bound);
    }
    const auto alt = polylog(4, -1.0, 1e-8);
    CHECK(std::abs(alt.value + 7.0 * pi4 / 720.0) <= alt.tail_bound);
}

TEST_CASE("tail bound is monotone in the number of terms") {
    for (int s : {2, 3, 4}) {
        for (double r : {0.3, 0.9, 1.0}) {
            double prev = polylog_tail_bound(s, r, 1);
            for (std::size_t m = 2; m < 5000; m = m * 3 / 2 + 1) {
                const double cur = polylog_tail_bound(s, r, m);
                CHECK(cur <= prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("closed-form symmetric sum") {
    CHECK(std::abs(li4_symmetric_circle(0.0) - pi4 / 45.0) < 1e-13);
    CHECK(std::abs(li4_symmetric_circle(2.0 * pi) - pi4 / 45.0) < 1e-12);
    CHECK(std::abs(li4_symmetric_circle(pi) + 7.0 * pi4 / 360.0) < 1e-12);
    CHECK(std::abs(li4_symmetric_circle(pi) + 1.8940656589944918) < 1e-10);
    CHECK(std::abs(li4_symmetric_circle(pi / 2) - brute_symmetric(pi / 2, 100000)) < 1e-10);
    CHECK_THROWS_AS(li4_symmetric_circle(-0.1), std::domain_error);
    CHECK_THROWS_AS(li4_symmetric_circle(2.0 * pi + 0.1), std::domain_error);
}

TEST_CASE("closed form against the series on a theta grid") {
    for (int j = 0; j <= 100; ++j) {
        const double theta = 2.0 * pi * j / 100.0;
        const auto series = polylog(4, std::polar(1.0, theta));
        CHECK(std::abs(li4_symmetric_circle(theta) - 2.0 * series.value.real()) < 1e-9);
        // Independent brute force, no tail control beyond 1/(3 M^3).
        CHECK(std::abs(li4_symmetric_circle(theta) - brute_symmetric(theta, 20000)) < 1e-11);
    }
}

TEST_CASE("conjugate pair sums to a real number") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto z = std::polar(1.0, rng.uniform(0.0, 2.0 * pi));
        const auto s = polylog(4, z).value + polylog(4, std::conj(z)).value;
        CHECK(std::abs(s.imag()) < 1e-12);
    }
}

TEST_CASE("deficit form agrees with the direct difference") {
    for (int j = 0; j <= 200; ++j) {
        const double theta = 2.0 * pi * j / 200.0;
        const double direct = pi4 / 45.0 - li4_symmetric_circle(theta);
        CHECK(std::abs(li4_circle_deficit(theta) - direct) < 1e-12);
        if (j > 0 && j < 200) {
            CHECK(li4_circle_deficit(theta) > 0.0);
        }
    }
    // Small angles, where the direct difference loses digits: leading term pi^2 x^2 / 6.
    const double x = 1e-6;
    CHECK(std::abs(li4_circle_deficit(x) / (pi * pi * x * x / 6.0) - 1.0) < 1e-5);
}

TEST_CASE("quadrature agrees with the series") {
    CHECK(li4_quadrature(0.0) == std::complex<double>{});
    CHECK(std::abs(li4_quadrature(-1.0) - polylog(4, -1.0).value) < 1e-8);
    CHECK(std::abs(li4_quadrature(0.5) - polylog(4, 0.5).value) < 1e-8);
    CHECK(std::abs(li4_quadrature(std::complex<double>(0, 1)) - polylog(4, std::complex<double>(0, 1)).value) < 1e-8);

    Rng rng(20);
    for (int i = 0; i < 20; ++i) {
        const auto z = rng.in_disc(0.9);
        CHECK(std::abs(li4_quadrature(z) - polylog(4, z).value) < 1e-8);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(polylog(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(polylog(4, 1.01), std::domain_error);
    CHECK_NOTHROW(polylog(4, 1.0 + 5e-13));
    CHECK_THROWS(li4_quadrature(1.0));
    CHECK_THROWS(li4_quadrature(std::complex<double>(0.9, 0.9)));
}
