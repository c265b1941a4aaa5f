#include "bary/sampling.hpp"

#include "bary/errors.hpp"

#include <cassert>
#include <stdexcept>

namespace bary {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

std::uint64_t Sampler::next_u64() {
    state_ = splitmix64(state_);
    return state_;
}

std::int64_t Sampler::uniform_int(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit span
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % range);
}

double Sampler::uniform_real(double lo, double hi) {
    double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

Rational Sampler::rational(std::int64_t max_num, std::int64_t max_den, bool allow_negative) {
    Rational r(uniform_int(1, max_num), uniform_int(1, max_den));
    if (allow_negative && uniform_int(0, 1) == 1) return -r;
    return r;
}

TriangleShape Sampler::shape(std::int64_t bound) {
    for (;;) {
        Rational a = rational(bound, bound);
        Rational b = rational(bound, bound);
        Rational c = rational(bound, bound);
        if (a + b > c && b + c > a && c + a > b) return TriangleShape(a, b, c);
    }
}

TriangleShape Sampler::scalene_shape(std::int64_t bound) {
    for (;;) {
        TriangleShape s = shape(bound);
        if (s.a() != s.b() && s.b() != s.c() && s.c() != s.a()) return s;
    }
}

TriangleShape Sampler::conditioned_shape() {
    const Rational floor(1, 16);
    for (;;) {
        // Sides in [1, 10]: numerator in [den, 10 den] keeps both parts <= 10^4.
        Rational side[3];
        for (auto& s : side) {
            std::int64_t den = uniform_int(1, 1000);
            std::int64_t num = uniform_int(den, 10 * den);
            s = Rational(num, den);
        }
        if (!(side[0] + side[1] > side[2] && side[1] + side[2] > side[0] &&
              side[2] + side[0] > side[1]))
            continue;
        TriangleShape s(side[0], side[1], side[2]);
        if (s.squared_area() >= floor) return s;
    }
}

BaryPoint Sampler::finite_point(std::int64_t max_den, std::int64_t span) {
    std::int64_t den = uniform_int(1, max_den);
    Rational u(uniform_int(-span * den, span * den), den);
    den = uniform_int(1, max_den);
    Rational v(uniform_int(-span * den, span * den), den);
    // third coordinate completes the sum to 1
    return BaryPoint::finite(u, v, Rational(1) - u - v);
}

BaryPoint Sampler::conditioned_point() {
    std::int64_t den = uniform_int(1, 8);
    Rational u(uniform_int(-2 * den, 2 * den), den);
    den = uniform_int(1, 8);
    Rational v(uniform_int(-2 * den, 2 * den), den);
    return BaryPoint::finite(u, v, Rational(1) - u - v);
}

}  // namespace bary
