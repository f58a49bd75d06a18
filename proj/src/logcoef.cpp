#include "stripclass/logcoef.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stripclass {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// h(w) = sum_j weight_j log(1 + shift_j w)
struct LogTerm {
    cplx weight;
    cplx shift;
};

std::vector<LogTerm> log_terms(const ClassTarget& target) {
    if (const auto* p = std::get_if<StripParams>(&target)) {
        const cplx w = (p->width() / pi) * I;
        return {{w, -p->phase()}, {-w, -1.0}};
    }
    const auto& d = std::get<DorffParam>(target);
    const cplx w = 1.0 / (2.0 * I * d.sin_delta());
    const cplx e = std::polar(1.0, d.delta());
    return {{w, e}, {-w, std::conj(e)}};
}

// z * g for a series g: order grows by one.
TruncatedSeries times_z(const TruncatedSeries& g) {
    TruncatedSeries r(g.order() + 1);
    for (std::size_t k = 0; k <= g.order(); ++k) {
        r[k + 1] = g[k];
    }
    return r;
}

} // namespace

LogCoeffVector log_coefficients(const TruncatedSeries& f) {
    const TruncatedSeries l = log_normalized(f);
    LogCoeffVector v;
    v.gammas.reserve(l.order());
    for (std::size_t n = 1; n <= l.order(); ++n) {
        v.gammas.push_back(0.5 * l[n]);
    }
    return v;
}

ExtremalFunction extremal_strip(const StripParams& p, std::size_t order) {
    ExtremalFunction out{times_z(series_exp(p_hat_series(p, order))), {}};
    out.gammas.gammas.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        out.gammas.gammas.push_back(0.5 * p_hat_coeff(p, static_cast<int>(n)));
    }
    out.gammas.tail_constant = p.width() / pi;
    return out;
}

ExtremalFunction extremal_dorff(const DorffParam& d, std::size_t order) {
    ExtremalFunction out{times_z(series_exp(b_tilde_series(d, order))), {}};
    out.gammas.gammas.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        out.gammas.gammas.push_back(0.5 * b_tilde_coeff(d, static_cast<int>(n)));
    }
    // |A_n| <= 1 / (n sin delta)
    out.gammas.tail_constant = 1.0 / (2.0 * d.sin_delta());
    return out;
}

ExtremalFunction koebe_rotation(cplx eps, std::size_t order) {
    if (std::abs(std::abs(eps) - 1.0) > 1e-12) {
        throw std::invalid_argument("koebe_rotation: |eps| must equal 1");
    }
    ExtremalFunction out{TruncatedSeries(order + 1), {}};
    cplx power = 1.0;
    for (std::size_t m = 0; m <= order; ++m) {
        out.series[m + 1] = static_cast<double>(m + 1) * power;
        power *= eps;
    }
    power = eps;
    out.gammas.gammas.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        out.gammas.gammas.push_back(power / static_cast<double>(n));
        power *= eps;
    }
    return out;
}

SchwarzSpec SchwarzSpec::scaled_rotation(cplx c) {
    if (std::abs(c) > 1.0) {
        throw std::invalid_argument("SchwarzSpec: scaled rotation needs |c| <= 1");
    }
    return {Kind::scaled_rotation, c, 1, {}, 0.0};
}

SchwarzSpec SchwarzSpec::power(cplx c, int k) {
    if (std::abs(c) > 1.0 || k < 1) {
        throw std::invalid_argument("SchwarzSpec: power map needs |c| <= 1 and k >= 1");
    }
    return {Kind::power, c, k, {}, 0.0};
}

SchwarzSpec SchwarzSpec::blaschke(cplx a, double phi) {
    if (!(std::abs(a) < 1.0) || !std::isfinite(phi)) {
        throw std::invalid_argument("SchwarzSpec: Blaschke factor needs |a| < 1");
    }
    return {Kind::blaschke, 1.0, 1, a, phi};
}

cplx SchwarzSpec::eval(cplx z) const {
    switch (kind_) {
    case Kind::scaled_rotation:
        return c_ * z;
    case Kind::power:
        return c_ * std::pow(z, k_);
    case Kind::blaschke:
        return std::polar(1.0, phi_) * z * (z + a_) / (1.0 + std::conj(a_) * z);
    }
    return {};
}

std::pair<TruncatedSeries, TruncatedSeries> SchwarzSpec::rational_form(std::size_t order) const {
    TruncatedSeries num(order);
    TruncatedSeries den = TruncatedSeries::constant(1.0, order);
    switch (kind_) {
    case Kind::scaled_rotation:
        if (order >= 1) {
            num[1] = c_;
        }
        break;
    case Kind::power:
        if (order >= static_cast<std::size_t>(k_)) {
            num[static_cast<std::size_t>(k_)] = c_;
        }
        break;
    case Kind::blaschke: {
        const cplx rot = std::polar(1.0, phi_);
        if (order >= 1) {
            num[1] = rot * a_;
            den[1] = std::conj(a_);
        }
        if (order >= 2) {
            num[2] = rot;
        }
        break;
    }
    }
    return {num, den};
}

TruncatedSeries SchwarzSpec::series(std::size_t order) const {
    auto [num, den] = rational_form(order);
    // den = 1 + d_1 z, so 1/den = sum (-d_1)^k z^k
    const cplx ratio = order >= 1 ? -den[1] : cplx{};
    TruncatedSeries inv(order);
    cplx power = 1.0;
    for (std::size_t k = 0; k <= order; ++k) {
        inv[k] = power;
        power *= ratio;
    }
    return mul(num, inv);
}

const char* to_string(SchwarzSpec::Kind kind) {
    switch (kind) {
    case SchwarzSpec::Kind::scaled_rotation:
        return "scaled-rotation";
    case SchwarzSpec::Kind::power:
        return "power";
    case SchwarzSpec::Kind::blaschke:
        return "blaschke-factor";
    }
    return "unknown";
}

TruncatedSeries target_map_series(const ClassTarget& target, std::size_t order) {
    if (const auto* p = std::get_if<StripParams>(&target)) {
        TruncatedSeries s = p_strip_series(*p, order);
        s[0] = 0.0;
        return s;
    }
    return dorff_series(std::get<DorffParam>(target), order);
}

TruncatedSeries integrated_target_series(const ClassTarget& target, std::size_t order) {
    if (const auto* p = std::get_if<StripParams>(&target)) {
        return p_hat_series(*p, order);
    }
    return b_tilde_series(std::get<DorffParam>(target), order);
}

TruncatedSeries generate_member(const ClassTarget& target, const SchwarzSpec& w, std::size_t order) {
    if (order < 1) {
        throw std::invalid_argument("generate_member: order must be at least 1");
    }
    // h(w) = sum_j weight_j log(1 + shift_j w) with w = num/den, so
    //   h(w(z)) = sum_j weight_j [log(den + shift_j num) - log(den)],
    // and each logarithm is of a low-degree polynomial with constant term 1.
    const std::size_t n = order - 1;
    const auto [num, den] = w.rational_form(n);
    const TruncatedSeries log_den = series_log(den);
    TruncatedSeries composed(n);
    for (const auto& term : log_terms(target)) {
        const TruncatedSeries log_poly = series_log(den + scale(num, term.shift));
        composed = composed + scale(log_poly - log_den, term.weight);
    }
    composed[0] = 0.0;
    return times_z(series_exp(integrate_over_t(composed)));
}

} // namespace stripclass
