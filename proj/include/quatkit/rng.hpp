#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "quatkit/quaternion.hpp"

namespace quatkit {

/// Deterministic sampling on top of std::mt19937_64. The engine itself is
/// fully specified by the standard; stdlib distributions are not, so the
/// value -> range mappings are done by hand to keep seeded output stable
/// across platforms.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi], rejection-sampled.
    long uniform_int(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = rng_();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Bounded rational: numerator in [-100,100], denominator in [1,100].
    Rational rational() { return Rational(uniform_int(-100, 100), uniform_int(1, 100)); }

    Quaternion rational_quaternion() {
        return {Scalar::rational(rational()), Scalar::rational(rational()),
                Scalar::rational(rational()), Scalar::rational(rational())};
    }

    Quaternion nonzero_rational_quaternion() {
        for (;;) {
            Quaternion q = rational_quaternion();
            if (!q.is_zero()) return q;
        }
    }

    Quaternion float_quaternion(double lo = -1.0, double hi = 1.0) {
        return {Scalar::float64(uniform(lo, hi)), Scalar::float64(uniform(lo, hi)),
                Scalar::float64(uniform(lo, hi)), Scalar::float64(uniform(lo, hi))};
    }

    /// Uniform in the closed unit ball of H (rejection from [-1,1]^4),
    /// optionally scaled by `radius`.
    Quaternion ball_point(double radius = 1.0) {
        for (;;) {
            const double a = uniform(-1.0, 1.0), b = uniform(-1.0, 1.0);
            const double c = uniform(-1.0, 1.0), d = uniform(-1.0, 1.0);
            if (a * a + b * b + c * c + d * d <= 1.0)
                return {Scalar::float64(a * radius), Scalar::float64(b * radius),
                        Scalar::float64(c * radius), Scalar::float64(d * radius)};
        }
    }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace quatkit
