#ifndef STRIPCLASS_VERIFY_HPP
#define STRIPCLASS_VERIFY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "stripclass/logcoef.hpp"
#include "stripclass/maps.hpp"
#include "stripclass/report.hpp"
#include "stripclass/series.hpp"

namespace stripclass {

/// Sharp upper bound on sum |gamma_n|^2 over S(alpha, beta):
///   (width^2 / (4 pi^2)) (pi^4/45 - Li_4(e^{-2 pi i mu}) - Li_4(e^{2 pi i mu})).
double bound_strip(const StripParams& p);

/// Sharp upper bound on sum |gamma_n|^2 over M(delta):
///   (1 / (16 sin^2 delta)) (pi^4/45 - Li_4(e^{-2 i delta}) - Li_4(e^{2 i delta})).
double bound_dorff(const DorffParam& d);

/// (width / (n pi)) |sin(pi mu)|, i.e. |B_1| / (2n).
double per_n_bound_strip(const StripParams& p, int n);
/// 1 / (2n)
double per_n_bound_dorff(int n);

double bound_for(const ClassTarget& target);
double per_n_bound_for(const ClassTarget& target, int n);

struct GammaSquareSum {
    double partial = 0.0;
    /// C^2 / (3 N^3) from the vector's tail constant; 0 when unknown.
    double tail = 0.0;
};

GammaSquareSum sum_gamma_sq(const LogCoeffVector& v);

/// Checks sum_{n<=K} |sub_n|^2 <= sum_{n<=K} |dom_n|^2 for K = 1..k_max.
/// Element 0 of each span is the coefficient of z^1. lhs and rhs are the two
/// partial sums at the K with the least slack.
BoundReport rogosinski_check(std::span<const cplx> sub, std::span<const cplx> dom, std::size_t k_max);

/// Smallest order N with N log(1/radius) >= 14, so the truncated tail at
/// `radius` is below about 1e-6.
std::size_t membership_min_order(double radius);

/// Samples Re{z f'/f} on a polar grid (8 radial levels up to `radius`,
/// `angles` points each) and checks it stays strictly inside re_range(target).
/// lhs is the largest distance of a sample from the centre of the range and
/// rhs its half-width. Throws std::invalid_argument when f's order is below
/// membership_min_order(radius).
BoundReport membership_check(const TruncatedSeries& f, const ClassTarget& target, double radius,
                             std::size_t angles);

/// Numerical convexity witness: Re(1 + z h''/h') > 0 on a polar grid up to
/// `radius`, with h', h'' taken from circle-sampled coefficients of h.
/// lhs is max(0, -min Re), rhs is 0. A vanishing h' at a sample point is
/// reported as violated.
BoundReport convexity_probe(const PointwiseMap& h, double radius, std::size_t angles);

struct ReferenceConstants {
    double pi2_over_6;
    double roth;
};

ReferenceConstants reference_constants();

/// Builds the extremal function of `target` at `order`, re-extracts its
/// logarithmic coefficients from the series and compares sum |gamma_n|^2
/// with the sharp bound. Context records the parameters, the order and the
/// largest deviation between series-extracted and closed-form gammas.
BoundReport sharpness_report(const ClassTarget& target, std::size_t order);

struct AuditLimits {
    std::size_t rogosinski_k = 64;
    std::size_t per_n = 128;
    std::size_t sum_terms = 512;
};

/// Soundness audit of a class member: membership, Rogosinski partial sums
/// against the integrated target, per-n bounds and the sum bound.
std::vector<BoundReport> audit_member(const TruncatedSeries& f, const ClassTarget& target, double radius,
                                      std::size_t angles, const AuditLimits& limits = {});

/// Records alpha/beta or delta into a report context.
void add_target_context(BoundReport& report, const ClassTarget& target);

} // namespace stripclass

#endif
