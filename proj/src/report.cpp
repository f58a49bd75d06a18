#include "stripclass/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace stripclass {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::holds_with_equality:
        return "holds-with-equality";
    case Verdict::violated:
        return "violated";
    }
    return "unknown";
}

BoundReport classify_sharp(std::string check, double lhs, double rhs, double tail, double floor) {
    BoundReport r;
    r.check = std::move(check);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tail_estimate = tail;
    r.tolerance = std::max(tail, floor);
    if (std::abs(lhs + 0.5 * tail - rhs) <= r.tolerance) {
        r.verdict = Verdict::holds_with_equality;
    } else if (lhs - rhs > r.tolerance) {
        r.verdict = Verdict::violated;
    } else {
        r.verdict = Verdict::holds;
    }
    return r;
}

BoundReport classify_upper(std::string check, double lhs, double rhs, double tolerance) {
    BoundReport r;
    r.check = std::move(check);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.verdict = lhs - rhs > tolerance ? Verdict::violated : Verdict::holds;
    return r;
}

} // namespace stripclass
