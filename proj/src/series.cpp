#include "stripclass/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"

namespace stripclass {

namespace {

// Plain complex multiply-accumulate. std::complex operator* goes through the
// Annex G NaN-recovery path, which dominates the O(N^2) recurrences below.
inline void mac(double& re, double& im, cplx a, cplx b) {
    re += a.real() * b.real() - a.imag() * b.imag();
    im += a.real() * b.imag() + a.imag() * b.real();
}

// Index of the last nonzero coefficient (0 for the zero series).
std::size_t degree(const TruncatedSeries& a) {
    for (std::size_t k = a.order(); k > 0; --k) {
        if (a[k] != cplx{}) {
            return k;
        }
    }
    return 0;
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        throw std::invalid_argument("TruncatedSeries: coefficient vector must not be empty");
    }
}

TruncatedSeries TruncatedSeries::constant(cplx value, std::size_t order) {
    TruncatedSeries s(order);
    s[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) {
        s[1] = 1.0;
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw std::invalid_argument("TruncatedSeries::truncated: cannot raise order from " +
                                    std::to_string(this->order()) + " to " + std::to_string(order));
    }
    return TruncatedSeries(std::vector<cplx>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

bool TruncatedSeries::is_normalized(double tol) const {
    return order() >= 1 && std::abs(c_[0]) <= tol && std::abs(c_[1] - 1.0) <= tol;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        r[k] = a[k] + b[k];
    }
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        r[k] = a[k] - b[k];
    }
    return r;
}

TruncatedSeries scale(const TruncatedSeries& a, cplx factor) {
    TruncatedSeries r = a;
    for (auto& c : r.coeffs()) {
        c *= factor;
    }
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    const std::size_t da = std::min(degree(a), n);
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        double re = 0.0;
        double im = 0.0;
        const std::size_t jmax = std::min(k, da);
        for (std::size_t j = 0; j <= jmax; ++j) {
            mac(re, im, a[j], b[k - j]);
        }
        r[k] = {re, im};
    }
    return r;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.order() == 0) {
        throw std::invalid_argument("derivative: series of order 0 has no retained derivative");
    }
    TruncatedSeries r(a.order() - 1);
    for (std::size_t k = 0; k < a.order(); ++k) {
        r[k] = static_cast<double>(k + 1) * a[k + 1];
    }
    return r;
}

TruncatedSeries integrate_over_t(const TruncatedSeries& g) {
    if (g[0] != cplx{}) {
        throw std::invalid_argument("integrate_over_t: g(0) must vanish for g(t)/t to be analytic");
    }
    TruncatedSeries r(g.order());
    for (std::size_t k = 1; k <= g.order(); ++k) {
        r[k] = g[k] / static_cast<double>(k);
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (a[0] != cplx{}) {
        throw std::invalid_argument("series_exp: constant term must be zero");
    }
    const std::size_t n = a.order();
    const std::size_t da = degree(a);
    std::vector<cplx> weighted(da + 1);
    for (std::size_t j = 1; j <= da; ++j) {
        weighted[j] = static_cast<double>(j) * a[j];
    }
    TruncatedSeries e(n);
    e[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double re = 0.0;
        double im = 0.0;
        const std::size_t jmax = std::min(k, da);
        for (std::size_t j = 1; j <= jmax; ++j) {
            mac(re, im, weighted[j], e[k - j]);
        }
        e[k] = cplx{re, im} / static_cast<double>(k);
    }
    return e;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a[0] != cplx{1.0, 0.0}) {
        throw std::invalid_argument("series_log: constant term must be exactly 1");
    }
    const std::size_t n = a.order();
    const std::size_t da = degree(a);
    // weighted[k] = k L_k
    std::vector<cplx> weighted(n + 1);
    TruncatedSeries l(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const cplx ak = k <= da ? a[k] : cplx{};
        double re = static_cast<double>(k) * ak.real();
        double im = static_cast<double>(k) * ak.imag();
        const std::size_t mmax = std::min(k - 1, da);
        for (std::size_t m = 1; m <= mmax; ++m) {
            mac(re, im, -a[m], weighted[k - m]);
        }
        weighted[k] = {re, im};
        l[k] = weighted[k] / static_cast<double>(k);
    }
    return l;
}

TruncatedSeries log_normalized(const TruncatedSeries& f) {
    if (!f.is_normalized()) {
        throw std::invalid_argument("log_normalized: series must satisfy f(0) = 0, f'(0) = 1");
    }
    std::vector<cplx> quotient(f.coeffs().begin() + 1, f.coeffs().end());
    // f/z has constant term 1 up to the normalization tolerance; pin it so
    // the recurrence sees an exact unit.
    quotient[0] = 1.0;
    return series_log(TruncatedSeries(std::move(quotient)));
}

TruncatedSeries compose_schwarz(const TruncatedSeries& h, const TruncatedSeries& w) {
    if (w[0] != cplx{}) {
        throw std::invalid_argument("compose_schwarz: inner series must vanish at 0");
    }
    const std::size_t n = std::min(h.order(), w.order());
    const TruncatedSeries inner = w.truncated(n);
    TruncatedSeries acc = TruncatedSeries::constant(h[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, inner);
        acc[0] += h[k];
    }
    return acc;
}

cplx evaluate(const TruncatedSeries& a, cplx z) {
    cplx acc{};
    for (std::size_t k = a.order() + 1; k-- > 0;) {
        acc = acc * z + a[k];
    }
    return acc;
}

std::vector<cplx> evaluate_on_circle(const TruncatedSeries& a, double radius, std::size_t angles) {
    if (angles == 0) {
        throw std::invalid_argument("evaluate_on_circle: need at least one angle");
    }
    std::vector<cplx> folded(angles);
    double rk = 1.0;
    for (std::size_t k = 0; k <= a.order(); ++k) {
        folded[k % angles] += a[k] * rk;
        rk *= radius;
    }
    return detail::dft_backward(folded);
}

TruncatedSeries coeffs_by_circle_sampling(const PointwiseMap& eval, std::size_t order, double r,
                                          std::size_t samples) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("coeffs_by_circle_sampling: radius must be positive");
    }
    if (samples == 0) {
        samples = 1;
        while (samples < 4 * std::max<std::size_t>(order, 1)) {
            samples *= 2;
        }
    }
    if (samples <= order) {
        throw std::invalid_argument("coeffs_by_circle_sampling: need more samples than coefficients");
    }
    std::vector<cplx> values(samples);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        values[j] = eval(std::polar(r, step * static_cast<double>(j)));
    }
    const auto spectrum = detail::dft_forward(values);
    TruncatedSeries c(order);
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = spectrum[k] / (static_cast<double>(samples) * std::pow(r, static_cast<double>(k)));
    }
    return c;
}

bool is_schwarz(const TruncatedSeries& w, double radius, std::size_t angles) {
    if (std::abs(w[0]) > 1e-14) {
        return false;
    }
    const auto values = evaluate_on_circle(w, radius, angles);
    return std::all_of(values.begin(), values.end(), [](cplx v) { return std::abs(v) < 1.0; });
}

} // namespace stripclass
