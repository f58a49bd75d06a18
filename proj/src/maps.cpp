#include "stripclass/maps.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_dilog.h>

namespace stripclass {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

void require_open_disc(cplx z, const char* who) {
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error(std::string(who) + ": |z| must be < 1");
    }
}

void require_index(int n, const char* who) {
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": index must be >= 1");
    }
}

// exp(2 pi i x), reduced mod 1 first so that rational phases such as
// n * (1/2) land exactly on the real axis.
cplx unit_phase(double x) {
    double frac = std::fmod(x, 1.0);
    if (frac < 0.0) {
        frac += 1.0;
    }
    if (frac == 0.0) {
        return 1.0;
    }
    if (frac == 0.5) {
        return -1.0;
    }
    return std::polar(1.0, 2.0 * pi * frac);
}

cplx dilog(cplx z) {
    static std::once_flag quiet;
    std::call_once(quiet, [] { gsl_set_error_handler_off(); });
    gsl_sf_result re;
    gsl_sf_result im;
    const int status = gsl_sf_complex_dilog_xy_e(z.real(), z.imag(), &re, &im);
    if (status != GSL_SUCCESS) {
        throw std::runtime_error(std::string("dilog: ") + gsl_strerror(status));
    }
    return {re.val, im.val};
}

} // namespace

StripParams::StripParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(std::isfinite(alpha) && std::isfinite(beta) && alpha < 1.0 && 1.0 < beta)) {
        throw std::invalid_argument("StripParams: need alpha < 1 < beta, got alpha = " + std::to_string(alpha) +
                                    ", beta = " + std::to_string(beta));
    }
    mu_ = (1.0 - alpha) / (beta - alpha);
    phase_ = unit_phase(mu_);
}

DorffParam::DorffParam(double delta) : delta_(delta) {
    // Decimal renderings of pi/2 such as 1.5707963 fall just short of it.
    if (delta < pi / 2 && delta >= pi / 2 - dorff_input_slack) {
        delta_ = delta = pi / 2;
    }
    if (!(std::isfinite(delta) && delta >= pi / 2 && delta <= pi - dorff_max_delta_gap)) {
        throw std::invalid_argument("DorffParam: need pi/2 <= delta <= pi - 1e-6, got " + std::to_string(delta));
    }
    gap_ = pi - delta;
    sin_delta_ = std::sin(gap_);
}

std::pair<double, double> re_range(const ClassTarget& target) {
    if (const auto* p = std::get_if<StripParams>(&target)) {
        return {p->alpha(), p->beta()};
    }
    const auto& d = std::get<DorffParam>(target);
    return {1.0 - d.gap() / (2.0 * d.sin_delta()), 1.0 + d.delta() / (2.0 * d.sin_delta())};
}

cplx p_strip_eval(const StripParams& p, cplx z) {
    require_open_disc(z, "p_strip_eval");
    // Both factors have positive real part on the disc, so the difference of
    // principal logarithms is the analytic branch of the quotient's log.
    const cplx diff = std::log(1.0 - p.phase() * z) - std::log(1.0 - z);
    return 1.0 + (p.width() / pi) * I * diff;
}

cplx p_strip_derivative(const StripParams& p, cplx z) {
    require_open_disc(z, "p_strip_derivative");
    return (p.width() / pi) * I * (1.0 - p.phase()) / ((1.0 - z) * (1.0 - p.phase() * z));
}

cplx b_strip_coeff(const StripParams& p, int n) {
    require_index(n, "b_strip_coeff");
    return (p.width() / (n * pi)) * I * (1.0 - unit_phase(n * p.mu()));
}

cplx p_hat_coeff(const StripParams& p, int n) {
    require_index(n, "p_hat_coeff");
    return b_strip_coeff(p, n) / static_cast<double>(n);
}

cplx p_hat_eval(const StripParams& p, cplx z) {
    require_open_disc(z, "p_hat_eval");
    return (p.width() / pi) * I * (dilog(z) - dilog(p.phase() * z));
}

cplx dorff_eval(const DorffParam& d, cplx z) {
    require_open_disc(z, "dorff_eval");
    const cplx e = std::polar(1.0, d.delta());
    const cplx diff = std::log(1.0 + z * e) - std::log(1.0 + z * std::conj(e));
    return diff / (2.0 * I * d.sin_delta());
}

cplx dorff_derivative(const DorffParam& d, cplx z) {
    require_open_disc(z, "dorff_derivative");
    const cplx e = std::polar(1.0, d.delta());
    return 1.0 / ((1.0 + z * e) * (1.0 + z * std::conj(e)));
}

double a_dorff_coeff(const DorffParam& d, int n) {
    require_index(n, "a_dorff_coeff");
    // (-1)^(n-1) sin(n delta) = sin(n (pi - delta)), so the ratio needs only
    // the small angle pi - delta.
    return std::sin(n * d.gap()) / (n * d.sin_delta());
}

double b_tilde_coeff(const DorffParam& d, int n) {
    require_index(n, "b_tilde_coeff");
    return a_dorff_coeff(d, n) / n;
}

cplx b_tilde_eval(const DorffParam& d, cplx z) {
    require_open_disc(z, "b_tilde_eval");
    const cplx e = std::polar(1.0, d.delta());
    return (dilog(-z * std::conj(e)) - dilog(-z * e)) / (2.0 * I * d.sin_delta());
}

TruncatedSeries p_strip_series(const StripParams& p, std::size_t order) {
    TruncatedSeries s(order);
    s[0] = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = b_strip_coeff(p, static_cast<int>(n));
    }
    return s;
}

TruncatedSeries p_hat_series(const StripParams& p, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = p_hat_coeff(p, static_cast<int>(n));
    }
    return s;
}

TruncatedSeries dorff_series(const DorffParam& d, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = a_dorff_coeff(d, static_cast<int>(n));
    }
    return s;
}

TruncatedSeries b_tilde_series(const DorffParam& d, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = b_tilde_coeff(d, static_cast<int>(n));
    }
    return s;
}

} // namespace stripclass
