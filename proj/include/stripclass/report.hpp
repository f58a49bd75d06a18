#ifndef STRIPCLASS_REPORT_HPP
#define STRIPCLASS_REPORT_HPP

#include <map>
#include <string>

namespace stripclass {

enum class Verdict { holds, holds_with_equality, violated };

const char* to_string(Verdict v);

/// Outcome of checking one inequality lhs <= rhs.
struct BoundReport {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double tail_estimate = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::holds;
    /// Parameters, truncation order and any diagnostic values, sorted by key.
    std::map<std::string, double> context;
    std::string note;

    bool violated() const noexcept { return verdict == Verdict::violated; }
};

inline constexpr double equality_tolerance_floor = 1e-9;

/// Classification for a sharp inequality whose lhs is a partial sum missing
/// a tail in [0, tail]. Tolerance is max(tail, floor):
///   |lhs + tail/2 - rhs| <= tolerance  -> holds_with_equality
///   lhs - rhs > tolerance              -> violated
///   otherwise                          -> holds
BoundReport classify_sharp(std::string check, double lhs, double rhs, double tail,
                           double floor = equality_tolerance_floor);

/// Plain one-sided check: violated iff lhs - rhs > tolerance.
BoundReport classify_upper(std::string check, double lhs, double rhs, double tolerance);

} // namespace stripclass

#endif
