#pragma once

#include "bary/rational.hpp"

#include <array>

namespace bary {

enum class Vertex { A = 0, B = 1, C = 2 };

/// Conway symbols (S_A, S_B, S_C) = ((b^2+c^2-a^2)/2, ...cyclic).
/// Throws DegenerateTriangle on nonpositive sides or a violated strict
/// triangle inequality.
std::array<Rational, 3> conway(const Rational& a, const Rational& b, const Rational& c);

/// Reference triangle given by rational side lengths a = |BC|, b = |CA|,
/// c = |AB|. Caches the Conway symbols, the squared area and the
/// semiperimeter. Construction rejects degenerate input, so every valid
/// shape has strictly positive squared area.
class TriangleShape {
public:
    TriangleShape(Rational a, Rational b, Rational c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    /// Side opposite the given vertex (a for A, b for B, c for C).
    const Rational& side(Vertex v) const;

    const Rational& sa() const { return s_[0]; }
    const Rational& sb() const { return s_[1]; }
    const Rational& sc() const { return s_[2]; }
    const Rational& conway_symbol(Vertex v) const { return s_[static_cast<int>(v)]; }

    /// S^2 = (S_B S_C + S_C S_A + S_A S_B)/4, strictly positive.
    const Rational& squared_area() const { return s2_; }
    const Rational& semiperimeter() const { return p_; }

    friend bool operator==(const TriangleShape& x, const TriangleShape& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

private:
    Rational a_, b_, c_;
    std::array<Rational, 3> s_;
    Rational s2_;
    Rational p_;
};

inline const Rational& squared_area(const TriangleShape& shape) { return shape.squared_area(); }

}  // namespace bary
