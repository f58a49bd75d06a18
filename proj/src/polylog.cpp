#include "stripclass/polylog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace stripclass {

namespace {

constexpr double disc_slack = 1e-12;

double ipow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) {
        r *= x;
    }
    return r;
}

void check_order(int s) {
    if (s < 2) {
        throw std::invalid_argument("polylog: order s must be at least 2 for convergence on the unit circle");
    }
}

// Smallest M with polylog_tail_bound(s, abs_z, M) <= tolerance, capped at max_terms.
std::size_t terms_for(int s, double abs_z, double tolerance, std::size_t max_terms) {
    auto ok = [&](std::size_t m) { return polylog_tail_bound(s, abs_z, m) <= tolerance; };
    if (ok(0)) {
        return 0;
    }
    std::size_t hi = 1;
    while (!ok(hi)) {
        if (hi >= max_terms) {
            return max_terms;
        }
        hi = std::min(hi * 2, max_terms);
    }
    std::size_t lo = hi / 2;  // !ok(lo) unless lo == 0, which ok(0) excluded
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

// 7-point Gauss / 15-point Kronrod pair.
constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    std::complex<double> value;
    double error;
};

template <class F>
Panel gauss_kronrod(F&& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const auto fc = f(centre);
    std::complex<double> kronrod = fc * kronrod_weights[7];
    std::complex<double> gauss = fc * gauss_weights[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kronrod_nodes[i];
        const auto sum = f(centre - dx) + f(centre + dx);
        kronrod += kronrod_weights[i] * sum;
        if (i % 2 == 1) {
            gauss += gauss_weights[i / 2] * sum;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

double polylog_tail_bound(int s, double abs_z, std::size_t terms) {
    check_order(s);
    if (abs_z > 1.0 + disc_slack) {
        throw std::domain_error("polylog_tail_bound: |z| must not exceed 1");
    }
    const double m = static_cast<double>(terms);
    double bound = std::numeric_limits<double>::infinity();
    if (terms > 0) {
        bound = 1.0 / (static_cast<double>(s - 1) * ipow(m, s - 1));
    }
    if (abs_z < 1.0) {
        const double geometric = std::pow(abs_z, m + 1.0) / (ipow(m + 1.0, s) * (1.0 - abs_z));
        bound = std::min(bound, geometric);
    }
    return bound;
}

PolylogResult polylog(int s, std::complex<double> z, double tolerance, std::size_t max_terms) {
    check_order(s);
    double abs_z = std::abs(z);
    if (abs_z > 1.0 + disc_slack) {
        throw std::domain_error("polylog: |z| must not exceed 1");
    }
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("polylog: tolerance must be positive");
    }
    if (abs_z > 1.0) {
        // Within the rounding slack: treat as a point of the unit circle.
        z /= abs_z;
        abs_z = 1.0;
    }
    const std::size_t terms = terms_for(s, abs_z, tolerance, max_terms);

    std::complex<double> sum{};
    std::complex<double> power = 1.0;
    for (std::size_t n = 1; n <= terms; ++n) {
        power *= z;
        sum += power / ipow(static_cast<double>(n), s);
    }
    return {sum, terms, polylog_tail_bound(s, abs_z, terms)};
}

double li4_symmetric_circle(double theta) {
    constexpr double pi = std::numbers::pi;
    if (!(theta >= 0.0 && theta <= 2.0 * pi)) {
        throw std::domain_error("li4_symmetric_circle: theta must lie in [0, 2 pi]");
    }
    const double t2 = theta * theta;
    const double pi2 = pi * pi;
    return 2.0 * (pi2 * pi2 / 90.0 - pi2 * t2 / 12.0 + pi * t2 * theta / 12.0 - t2 * t2 / 48.0);
}

double li4_circle_deficit(double theta) {
    constexpr double pi = std::numbers::pi;
    if (!(theta >= 0.0 && theta <= 2.0 * pi)) {
        throw std::domain_error("li4_circle_deficit: theta must lie in [0, 2 pi]");
    }
    const double x = std::min(theta, 2.0 * pi - theta);
    return 2.0 * x * x * (pi * pi / 12.0 - pi * x / 12.0 + x * x / 48.0);
}

std::complex<double> li4_quadrature(std::complex<double> z, double tolerance) {
    if (std::abs(z) > 1.0 + disc_slack) {
        throw std::domain_error("li4_quadrature: |z| must not exceed 1");
    }
    if (z == std::complex<double>{1.0, 0.0}) {
        throw std::domain_error("li4_quadrature: z = 1 is excluded; use polylog()");
    }
    if (z == std::complex<double>{}) {
        return {};
    }
    // t = exp(-u) maps (0, 1] onto [0, inf) and removes the 1/t factor:
    //   Li_4(z) = -1/2 \int_0^inf u^2 log(1 - z e^{-u}) du.
    // The integrand is below 2 u^2 e^{-u} in modulus, so [0, 60] loses < 1e-20.
    auto integrand = [z](double u) { return -0.5 * u * u * std::log(1.0 - z * std::exp(-u)); };
    constexpr double upper = 60.0;
    constexpr int max_panels = 20000;

    auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> panels(by_error);
    panels.push(gauss_kronrod(integrand, 0.0, upper));
    double total_error = panels.top().error;
    while (total_error > tolerance && static_cast<int>(panels.size()) < max_panels) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(integrand, worst.a, mid);
        const Panel right = gauss_kronrod(integrand, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    std::complex<double> sum{};
    while (!panels.empty()) {
        sum += panels.top().value;
        panels.pop();
    }
    return sum;
}

} // namespace stripclass
