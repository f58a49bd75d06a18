#ifndef STRIPCLASS_SAMPLING_HPP
#define STRIPCLASS_SAMPLING_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "stripclass/logcoef.hpp"
#include "stripclass/maps.hpp"

namespace stripclass {

/// Seeded source of uniform draws. Conversions from raw 64-bit output are
/// done here rather than with <random> distributions, whose algorithms are
/// implementation-defined, so a seed gives the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * static_cast<double>(hi - lo + 1));
    }
    /// Uniform point of the disc |z| < radius.
    std::complex<double> in_disc(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double angle = 2.0 * std::numbers::pi * uniform();
        return std::polar(r, angle);
    }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// alpha uniform in [-2, 0.9], beta uniform in [1.1, 4].
inline StripParams random_strip_params(Rng& rng) {
    const double alpha = rng.uniform(-2.0, 0.9);
    const double beta = rng.uniform(1.1, 4.0);
    return {alpha, beta};
}

/// delta uniform in [pi/2, pi - 1e-3].
inline DorffParam random_dorff_param(Rng& rng) {
    return DorffParam(rng.uniform(std::numbers::pi / 2, std::numbers::pi - 1e-3));
}

/// One of the three Schwarz families with equal probability. A quarter of
/// the rotation and power draws put c on the unit circle, where the
/// composed map reaches the boundary of the target strip.
inline SchwarzSpec random_schwarz(Rng& rng) {
    auto coefficient = [&rng] {
        if (rng.uniform() < 0.25) {
            return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        }
        return rng.in_disc(1.0);
    };
    switch (rng.uniform_int(0, 2)) {
    case 0:
        return SchwarzSpec::scaled_rotation(coefficient());
    case 1: {
        const auto c = coefficient();
        const int k = rng.uniform_int(1, 4);
        return SchwarzSpec::power(c, k);
    }
    default: {
        const auto a = rng.in_disc(0.95);
        const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        return SchwarzSpec::blaschke(a, phi);
    }
    }
}

} // namespace stripclass

#endif
