#ifndef STRIPCLASS_LOGCOEF_HPP
#define STRIPCLASS_LOGCOEF_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "stripclass/maps.hpp"
#include "stripclass/series.hpp"

namespace stripclass {

/// gamma_1..gamma_N defined by log(f(z)/z) = sum 2 gamma_n z^n.
struct LogCoeffVector {
    std::vector<cplx> gammas;
    /// C such that |gamma_n| <= C / n^2 for every n beyond the stored ones;
    /// 0 when no such guarantee is known.
    double tail_constant = 0.0;

    std::size_t order() const noexcept { return gammas.size(); }
    /// 1-based access, gamma(n) for n in [1, order()].
    cplx gamma(std::size_t n) const { return gammas.at(n - 1); }
};

/// gamma_n = [z^n] log(f/z) / 2 for n = 1..order(f) - 1. Throws
/// std::invalid_argument when f is not normalized.
LogCoeffVector log_coefficients(const TruncatedSeries& f);

/// A closed-form function together with its closed-form logarithmic
/// coefficients. `series` has order N + 1 so that log_coefficients(series)
/// yields exactly the N stored gammas.
struct ExtremalFunction {
    TruncatedSeries series;
    LogCoeffVector gammas;
};

/// z exp(P_hat(z)), with gamma_n = (width / (2 pi n^2)) i (1 - e^{2 pi i n mu}).
ExtremalFunction extremal_strip(const StripParams& p, std::size_t order);
/// z exp(B_tilde(z)), with gamma_n = A_n / (2n).
ExtremalFunction extremal_dorff(const DorffParam& d, std::size_t order);
/// Koebe rotation z / (1 - eps z)^2, gamma_n = eps^n / n. Requires |eps| = 1.
ExtremalFunction koebe_rotation(cplx eps, std::size_t order);

/// One of three Schwarz-function families whose self-map property holds by
/// construction:
///   scaled rotation  w(z) = c z,                          |c| <= 1
///   power            w(z) = c z^k,                        |c| <= 1, k >= 1
///   Blaschke factor  w(z) = e^{i phi} z (z + a)/(1 + conj(a) z),  |a| < 1
class SchwarzSpec {
public:
    enum class Kind { scaled_rotation, power, blaschke };

    static SchwarzSpec scaled_rotation(cplx c);
    static SchwarzSpec power(cplx c, int k);
    static SchwarzSpec blaschke(cplx a, double phi);
    static SchwarzSpec identity() { return scaled_rotation(1.0); }

    Kind kind() const noexcept { return kind_; }
    cplx c() const noexcept { return c_; }
    int k() const noexcept { return k_; }
    cplx a() const noexcept { return a_; }
    double phi() const noexcept { return phi_; }

    cplx eval(cplx z) const;
    /// (numerator, denominator) polynomials of w, each padded to `order`,
    /// with denominator(0) = 1 and numerator(0) = 0.
    std::pair<TruncatedSeries, TruncatedSeries> rational_form(std::size_t order) const;
    TruncatedSeries series(std::size_t order) const;

private:
    SchwarzSpec(Kind kind, cplx c, int k, cplx a, double phi) : kind_(kind), c_(c), k_(k), a_(a), phi_(phi) {}

    Kind kind_;
    cplx c_;
    int k_;
    cplx a_;
    double phi_;
};

const char* to_string(SchwarzSpec::Kind kind);

/// The map h with z f'/f - 1 subordinate to h: P_{alpha,beta} - 1 for the
/// strip class and B_delta for M(delta).
TruncatedSeries target_map_series(const ClassTarget& target, std::size_t order);
/// Coefficients of the integrated target: P_hat or B_tilde.
TruncatedSeries integrated_target_series(const ClassTarget& target, std::size_t order);

/// The normalized f of order `order` with z f'/f = 1 + h(w(z)), where h is
/// target_map_series(target). Computed as z exp(\int_0^z h(w(t))/t dt).
TruncatedSeries generate_member(const ClassTarget& target, const SchwarzSpec& w, std::size_t order);

} // namespace stripclass

#endif
