#include "stripclass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stripclass/polylog.hpp"

namespace stripclass {

namespace {

constexpr double pi = std::numbers::pi;

void require_radius(double radius, const char* who) {
    if (!(radius > 0.0 && radius < 1.0)) {
        throw std::invalid_argument(std::string(who) + ": radius must lie in (0, 1)");
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p *= 2;
    }
    return p;
}

// Coefficients k * a_k, i.e. the series of z a'(z).
TruncatedSeries z_derivative(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        r[k] = static_cast<double>(k) * a[k];
    }
    return r;
}

constexpr std::size_t radial_levels = 8;

} // namespace

double bound_strip(const StripParams& p) {
    const double w = p.width();
    return w * w / (4.0 * pi * pi) * li4_circle_deficit(2.0 * pi * p.mu());
}

double bound_dorff(const DorffParam& d) {
    const double s = d.sin_delta();
    // 2 delta lies in [pi, 2 pi); the deficit is symmetric about pi.
    return li4_circle_deficit(2.0 * d.delta()) / (16.0 * s * s);
}

double per_n_bound_strip(const StripParams& p, int n) {
    if (n < 1) {
        throw std::invalid_argument("per_n_bound_strip: n must be >= 1");
    }
    return p.width() / (n * pi) * std::abs(std::sin(pi * p.mu()));
}

double per_n_bound_dorff(int n) {
    if (n < 1) {
        throw std::invalid_argument("per_n_bound_dorff: n must be >= 1");
    }
    return 1.0 / (2.0 * n);
}

double bound_for(const ClassTarget& target) {
    if (const auto* p = std::get_if<StripParams>(&target)) {
        return bound_strip(*p);
    }
    return bound_dorff(std::get<DorffParam>(target));
}

double per_n_bound_for(const ClassTarget& target, int n) {
    if (const auto* p = std::get_if<StripParams>(&target)) {
        return per_n_bound_strip(*p, n);
    }
    return per_n_bound_dorff(n);
}

GammaSquareSum sum_gamma_sq(const LogCoeffVector& v) {
    GammaSquareSum out;
    // smallest terms first
    for (auto it = v.gammas.rbegin(); it != v.gammas.rend(); ++it) {
        out.partial += std::norm(*it);
    }
    if (v.tail_constant > 0.0) {
        const double n = static_cast<double>(v.order());
        out.tail = v.order() == 0 ? std::numeric_limits<double>::infinity()
                                  : v.tail_constant * v.tail_constant / (3.0 * n * n * n);
    }
    return out;
}

BoundReport rogosinski_check(std::span<const cplx> sub, std::span<const cplx> dom, std::size_t k_max) {
    if (sub.size() < k_max || dom.size() < k_max) {
        throw std::invalid_argument("rogosinski_check: sequences shorter than k_max");
    }
    double sub_sum = 0.0;
    double dom_sum = 0.0;
    double worst_slack = std::numeric_limits<double>::infinity();
    bool all_equal = true;
    bool any_violation = false;
    std::size_t worst_k = 0;
    BoundReport r;
    r.check = "rogosinski";
    for (std::size_t k = 1; k <= k_max; ++k) {
        sub_sum += std::norm(sub[k - 1]);
        dom_sum += std::norm(dom[k - 1]);
        const double tol = 1e-12 * std::max(1.0, dom_sum);
        const double slack = dom_sum - sub_sum;
        if (std::abs(slack) > tol) {
            all_equal = false;
        }
        if (slack < -tol) {
            any_violation = true;
        }
        if (slack < worst_slack) {
            worst_slack = slack;
            worst_k = k;
            r.lhs = sub_sum;
            r.rhs = dom_sum;
            r.tolerance = tol;
        }
    }
    r.verdict = any_violation ? Verdict::violated : all_equal ? Verdict::holds_with_equality : Verdict::holds;
    r.context["k_max"] = static_cast<double>(k_max);
    r.context["k_worst"] = static_cast<double>(worst_k);
    return r;
}

std::size_t membership_min_order(double radius) {
    require_radius(radius, "membership_min_order");
    return static_cast<std::size_t>(std::ceil(14.0 / std::log(1.0 / radius)));
}

BoundReport membership_check(const TruncatedSeries& f, const ClassTarget& target, double radius,
                             std::size_t angles) {
    require_radius(radius, "membership_check");
    if (angles == 0) {
        throw std::invalid_argument("membership_check: angles must be positive");
    }
    if (!f.is_normalized()) {
        throw std::invalid_argument("membership_check: series is not normalized");
    }
    if (static_cast<double>(f.order()) * std::log(1.0 / radius) < 14.0) {
        throw std::invalid_argument("membership_check: order " + std::to_string(f.order()) +
                                    " is too low for radius " + std::to_string(radius) + " (need at least " +
                                    std::to_string(membership_min_order(radius)) + ")");
    }
    const auto [lower, upper] = re_range(target);
    const double centre = 0.5 * (lower + upper);
    const TruncatedSeries zf = z_derivative(f);

    double re_min = std::numeric_limits<double>::infinity();
    double re_max = -std::numeric_limits<double>::infinity();
    bool finite = true;
    for (std::size_t level = 1; level <= radial_levels; ++level) {
        const double r = radius * static_cast<double>(level) / radial_levels;
        const auto fv = evaluate_on_circle(f, r, angles);
        const auto zfv = evaluate_on_circle(zf, r, angles);
        for (std::size_t j = 0; j < angles; ++j) {
            const double re = (zfv[j] / fv[j]).real();
            if (!std::isfinite(re)) {
                finite = false;
                continue;
            }
            re_min = std::min(re_min, re);
            re_max = std::max(re_max, re);
        }
    }

    BoundReport rep;
    rep.check = "membership";
    rep.rhs = 0.5 * (upper - lower);
    rep.lhs = std::max(std::abs(re_min - centre), std::abs(re_max - centre));
    rep.verdict = finite && re_min > lower && re_max < upper ? Verdict::holds : Verdict::violated;
    if (!finite) {
        rep.note = "z f'/f not finite at a sample point";
    }
    rep.context = {{"radius", radius},         {"angles", static_cast<double>(angles)},
                   {"order", static_cast<double>(f.order())},
                   {"re_min", re_min},         {"re_max", re_max},
                   {"lower", lower},           {"upper", upper}};
    add_target_context(rep, target);
    return rep;
}

BoundReport convexity_probe(const PointwiseMap& h, double radius, std::size_t angles) {
    require_radius(radius, "convexity_probe");
    if (angles == 0) {
        throw std::invalid_argument("convexity_probe: angles must be positive");
    }
    // Sample halfway to the unit circle; keep enough coefficients that the
    // dropped terms of h'' decay like (radius/sample_radius)^N < e^-40.
    const double sample_radius = 0.5 * (1.0 + radius);
    const auto wanted = static_cast<std::size_t>(std::ceil(40.0 / std::log(sample_radius / radius)));
    const std::size_t order = next_pow2(std::max<std::size_t>(64, wanted));
    const TruncatedSeries coeffs = coeffs_by_circle_sampling(h, order, sample_radius);
    const TruncatedSeries d1 = derivative(coeffs);
    const TruncatedSeries d2 = derivative(d1);
    const double scale = std::abs(coeffs[1]);
    if (!(scale > 0.0)) {
        throw std::invalid_argument("convexity_probe: h'(0) must not vanish");
    }

    double re_min = std::numeric_limits<double>::infinity();
    bool degenerate = false;
    for (std::size_t level = 1; level <= radial_levels; ++level) {
        const double r = radius * static_cast<double>(level) / radial_levels;
        const auto v1 = evaluate_on_circle(d1, r, angles);
        const auto v2 = evaluate_on_circle(d2, r, angles);
        const double step = 2.0 * pi / static_cast<double>(angles);
        for (std::size_t j = 0; j < angles; ++j) {
            if (std::abs(v1[j]) <= 1e-10 * scale) {
                degenerate = true;
                continue;
            }
            const cplx z = std::polar(r, step * static_cast<double>(j));
            re_min = std::min(re_min, (1.0 + z * v2[j] / v1[j]).real());
        }
    }

    BoundReport rep;
    rep.check = "convexity";
    rep.lhs = std::max(0.0, -re_min);
    rep.rhs = 0.0;
    rep.verdict = !degenerate && re_min > 0.0 ? Verdict::holds : Verdict::violated;
    if (degenerate) {
        rep.note = "h' vanishes at a sample point";
    }
    rep.context = {{"radius", radius},
                   {"angles", static_cast<double>(angles)},
                   {"coefficients", static_cast<double>(order)},
                   {"re_min", re_min}};
    return rep;
}

ReferenceConstants reference_constants() {
    return {pi * pi / 6.0, (2.0 * pi * pi - 12.0) / 3.0};
}

void add_target_context(BoundReport& report, const ClassTarget& target) {
    if (const auto* p = std::get_if<StripParams>(&target)) {
        report.context["alpha"] = p->alpha();
        report.context["beta"] = p->beta();
    } else {
        report.context["delta"] = std::get<DorffParam>(target).delta();
    }
}

BoundReport sharpness_report(const ClassTarget& target, std::size_t order) {
    if (order < 1) {
        throw std::invalid_argument("sharpness_report: order must be >= 1");
    }
    const bool strip = std::holds_alternative<StripParams>(target);
    const ExtremalFunction ext =
        strip ? extremal_strip(std::get<StripParams>(target), order) : extremal_dorff(std::get<DorffParam>(target), order);
    LogCoeffVector extracted = log_coefficients(ext.series);
    extracted.tail_constant = ext.gammas.tail_constant;

    double deviation = 0.0;
    for (std::size_t n = 0; n < order; ++n) {
        deviation = std::max(deviation, std::abs(extracted.gammas[n] - ext.gammas.gammas[n]));
    }
    const GammaSquareSum sum = sum_gamma_sq(extracted);
    BoundReport rep = classify_sharp(strip ? "sharpness-strip" : "sharpness-dorff", sum.partial,
                                     bound_for(target), sum.tail);
    rep.context["order"] = static_cast<double>(order);
    rep.context["closed_form_deviation"] = deviation;
    add_target_context(rep, target);
    if (deviation > 1e-10) {
        rep.verdict = Verdict::violated;
        rep.note = "series-extracted and closed-form gammas disagree";
    }
    return rep;
}

std::vector<BoundReport> audit_member(const TruncatedSeries& f, const ClassTarget& target, double radius,
                                      std::size_t angles, const AuditLimits& limits) {
    std::vector<BoundReport> out;
    out.push_back(membership_check(f, target, radius, angles));

    const std::size_t needed = std::max({limits.rogosinski_k, limits.per_n, limits.sum_terms});
    const std::size_t available = f.order() - 1;
    const LogCoeffVector gammas = log_coefficients(f.truncated(std::min(needed, available) + 1));

    if (gammas.order() >= limits.rogosinski_k) {
        const TruncatedSeries dom = integrated_target_series(target, limits.rogosinski_k);
        std::vector<cplx> sub(limits.rogosinski_k);
        for (std::size_t n = 1; n <= limits.rogosinski_k; ++n) {
            sub[n - 1] = 2.0 * gammas.gamma(n);
        }
        BoundReport rog = rogosinski_check(sub, dom.coeffs().subspan(1), limits.rogosinski_k);
        add_target_context(rog, target);
        out.push_back(std::move(rog));
    }

    {
        const std::size_t n_max = std::min(limits.per_n, gammas.order());
        double worst_ratio = -1.0;
        BoundReport per_n;
        for (std::size_t n = 1; n <= n_max; ++n) {
            const double lhs = std::abs(gammas.gamma(n));
            const double rhs = per_n_bound_for(target, static_cast<int>(n));
            if (lhs / rhs > worst_ratio) {
                worst_ratio = lhs / rhs;
                per_n = classify_upper("per-n-bound", lhs, rhs, 1e-12 * rhs);
                per_n.context["n"] = static_cast<double>(n);
            }
        }
        // The worst ratio decides whether any n is violated.
        per_n.context["n_max"] = static_cast<double>(n_max);
        add_target_context(per_n, target);
        out.push_back(std::move(per_n));
    }

    {
        const std::size_t n_max = std::min(limits.sum_terms, gammas.order());
        const auto first = gammas.gammas.begin();
        LogCoeffVector head{std::vector<cplx>(first, first + static_cast<std::ptrdiff_t>(n_max)), 0.0};
        const GammaSquareSum sum = sum_gamma_sq(head);
        BoundReport rep = classify_sharp("sum-bound", sum.partial, bound_for(target), 0.0);
        rep.context["terms"] = static_cast<double>(n_max);
        add_target_context(rep, target);
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace stripclass
