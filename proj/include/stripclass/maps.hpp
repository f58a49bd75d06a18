#ifndef STRIPCLASS_MAPS_HPP
#define STRIPCLASS_MAPS_HPP

#include <cstddef>
#include <utility>
#include <variant>

#include "stripclass/series.hpp"

namespace stripclass {

/// Parameters of the class S(alpha, beta): alpha < Re{z f'/f} < beta with
/// alpha < 1 < beta.
class StripParams {
public:
    StripParams(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double width() const noexcept { return beta_ - alpha_; }
    /// (1 - alpha) / (beta - alpha), strictly inside (0, 1).
    double mu() const noexcept { return mu_; }
    /// exp(2 pi i mu)
    cplx phase() const noexcept { return phase_; }

private:
    double alpha_;
    double beta_;
    double mu_;
    cplx phase_;
};

/// Angle delta of the class M(delta), pi/2 <= delta <= pi - 1e-6. Inputs
/// at most 1e-6 below pi/2 are snapped to pi/2.
class DorffParam {
public:
    explicit DorffParam(double delta);

    double delta() const noexcept { return delta_; }
    /// pi - delta. Kept separately so that sin(n delta) / sin(delta) can be
    /// evaluated without cancellation near delta = pi.
    double gap() const noexcept { return gap_; }
    double sin_delta() const noexcept { return sin_delta_; }

private:
    double delta_;
    double gap_;
    double sin_delta_;
};

inline constexpr double dorff_max_delta_gap = 1e-6;
inline constexpr double dorff_input_slack = 1e-6;

/// Either class. Used wherever a routine is shared by S(alpha, beta) and M(delta).
using ClassTarget = std::variant<StripParams, DorffParam>;

/// Open interval that Re{z f'(z)/f(z)} must stay inside for members of `target`.
std::pair<double, double> re_range(const ClassTarget& target);

// Vertical strip map P_{alpha,beta} and its integrated form.

/// 1 + (width/pi) i [log(1 - e^{2 pi i mu} z) - log(1 - z)], |z| < 1.
cplx p_strip_eval(const StripParams& p, cplx z);
cplx p_strip_derivative(const StripParams& p, cplx z);
/// B_n = (width / (n pi)) i (1 - e^{2 n pi i mu}), n >= 1.
cplx b_strip_coeff(const StripParams& p, int n);
/// B_n / n: coefficients of \int_0^z (P(t) - 1)/t dt.
cplx p_hat_coeff(const StripParams& p, int n);
/// \int_0^z (P(t) - 1)/t dt = (width/pi) i [Li_2(z) - Li_2(e^{2 pi i mu} z)].
cplx p_hat_eval(const StripParams& p, cplx z);

// Dorff map B_delta and its integrated form.

/// (1 / (2 i sin delta)) [log(1 + z e^{i delta}) - log(1 + z e^{-i delta})], |z| < 1.
cplx dorff_eval(const DorffParam& d, cplx z);
cplx dorff_derivative(const DorffParam& d, cplx z);
/// A_n = (-1)^(n-1) sin(n delta) / (n sin delta), n >= 1.
double a_dorff_coeff(const DorffParam& d, int n);
/// A_n / n
double b_tilde_coeff(const DorffParam& d, int n);
/// \int_0^z B_delta(t)/t dt = (1 / (2 i sin delta)) [Li_2(-z e^{-i delta}) - Li_2(-z e^{i delta})].
cplx b_tilde_eval(const DorffParam& d, cplx z);

/// Series 1 + sum B_n z^n up to `order`.
TruncatedSeries p_strip_series(const StripParams& p, std::size_t order);
/// Series sum B_n/n z^n.
TruncatedSeries p_hat_series(const StripParams& p, std::size_t order);
/// Series sum A_n z^n.
TruncatedSeries dorff_series(const DorffParam& d, std::size_t order);
/// Series sum A_n/n z^n.
TruncatedSeries b_tilde_series(const DorffParam& d, std::size_t order);

} // namespace stripclass

#endif
