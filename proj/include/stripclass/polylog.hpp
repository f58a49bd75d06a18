#ifndef STRIPCLASS_POLYLOG_HPP
#define STRIPCLASS_POLYLOG_HPP

#include <complex>
#include <cstddef>

namespace stripclass {

struct PolylogResult {
    std::complex<double> value;
    std::size_t terms_used = 0;
    /// Rigorous bound on |Li_s(z) - value| from the truncated tail.
    double tail_bound = 0.0;
};

inline constexpr double default_polylog_tolerance = 1e-12;
inline constexpr std::size_t default_polylog_max_terms = 20'000'000;

/// Upper bound on |sum_{n>terms} z^n / n^s| for |z| <= 1. Points up to
/// 1e-12 outside the circle are treated as lying on it. Uses the integral bound 1/((s-1) M^(s-1)) and, when
/// |z| < 1, the geometric bound |z|^(M+1) / ((M+1)^s (1-|z|)).
double polylog_tail_bound(int s, double abs_z, std::size_t terms);

/// Li_s(z) = sum_{n>=1} z^n / n^s by direct summation on the closed unit
/// disc. Summation stops at the first M whose tail bound is below
/// `tolerance`, or at `max_terms`; the result always carries the tail bound
/// that was actually achieved.
PolylogResult polylog(int s, std::complex<double> z, double tolerance = default_polylog_tolerance,
                      std::size_t max_terms = default_polylog_max_terms);

/// Li_4(e^{i theta}) + Li_4(e^{-i theta}) = 2 sum cos(n theta)/n^4 for
/// theta in [0, 2 pi], from the Bernoulli polynomial closed form.
double li4_symmetric_circle(double theta);

/// pi^4/45 - li4_symmetric_circle(theta), evaluated as
/// 2 (pi^2 x^2/12 - pi x^3/12 + x^4/48) with x = min(theta, 2 pi - theta),
/// which keeps full relative precision as theta approaches 0 or 2 pi.
double li4_circle_deficit(double theta);

/// Li_4(z) = -1/2 \int_0^1 log^2(1/t) log(1 - t z) / t dt by adaptive
/// Gauss-Kronrod quadrature. Intended as an independent check on polylog().
/// Rejects |z| > 1 and z = 1.
std::complex<double> li4_quadrature(std::complex<double> z, double tolerance = 1e-12);

} // namespace stripclass

#endif
