#pragma once

#include "bary/point.hpp"
#include "bary/rational.hpp"
#include "bary/shape.hpp"

#include <cstdint>

namespace bary {

/// Derives an independent stream seed from a master seed and an index;
/// splitmix64 finalization, identical on every platform.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic source of random rationals, points and triangle shapes.
/// All bounded draws are hand-rolled from the raw 64-bit stream so the same
/// seed produces the same sequence on every platform and build.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [lo, hi], inclusive; rejection-sampled, bias-free.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    double uniform_real(double lo, double hi);

    /// num/den with 1 <= num <= max_num, 1 <= den <= max_den, optional sign.
    Rational rational(std::int64_t max_num, std::int64_t max_den, bool allow_negative = false);

    /// Valid triangle with side numerators/denominators bounded by `bound`;
    /// rejection-sampled until the strict triangle inequality holds.
    TriangleShape shape(std::int64_t bound = 10000);

    /// Valid scalene triangle (all sides distinct).
    TriangleShape scalene_shape(std::int64_t bound = 10000);

    /// Triangle suitable for floating-point cross-checks: sides in [1, 10]
    /// (numerators/denominators still <= 10^4) with squared area >= 1/16, so
    /// double-precision reference formulas stay well conditioned.
    TriangleShape conditioned_shape();

    /// Finite point with coordinate denominators <= max_den and numerators
    /// spanning about [-span, span] before normalization.
    BaryPoint finite_point(std::int64_t max_den = 60, std::int64_t span = 3);

    /// Finite point with small dyadic-friendly coordinates (denominator <= 8,
    /// each weight in [-2, 2]) for use in floating-point comparisons.
    BaryPoint conditioned_point();

private:
    std::uint64_t state_;
};

}  // namespace bary
