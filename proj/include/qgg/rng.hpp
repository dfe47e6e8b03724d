#pragma once

#include <cstdint>

#include "qgg/quaternion.hpp"

namespace qgg {

/// Deterministic splitmix64 generator. Used everywhere a seed appears in the
/// public contract; std:: distributions are avoided because their outputs are
/// implementation-defined and would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t threshold = -n % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Nonzero rational with |numerator| <= max_abs_num, denominator <= max_den.
    Rational small_rational(long max_abs_num, long max_den) {
        long num = range(-max_abs_num, max_abs_num);
        long den = range(1, max_den);
        return Rational(num, den);
    }

    const UnitQuaternion& q8() { return q8_units()[below(8)]; }

    UnitQuaternion rational_unit(long max_abs_num = 3, long max_den = 3) {
        return rational_unit_from_vector(small_rational(max_abs_num, max_den),
                                         small_rational(max_abs_num, max_den),
                                         small_rational(max_abs_num, max_den));
    }

    /// Even mix of Lipschitz units and exact rational units.
    UnitQuaternion mixed_unit() { return coin() ? q8() : rational_unit(); }

    /// Stream-independent derived seed; lets per-item generators stay stable
    /// under any iteration or scheduling order.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        Rng r(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b + 0x632be59bd9b4e019ULL));
        r.next();
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace qgg
