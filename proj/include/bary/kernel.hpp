#pragma once

#include "bary/metric.hpp"
#include "bary/point.hpp"
#include "bary/shape.hpp"

namespace bary {

/// A vector between points: the difference of two finite points, or a point
/// at infinity taken directly as a direction. Components always sum to zero.
/// A finite/infinite operand mix is rejected (InfiniteMisuse), never coerced.
class Displacement {
public:
    /// to - from. Both endpoints finite, or both infinite (vector difference
    /// of two directions).
    Displacement(const BaryPoint& from, const BaryPoint& to);

    /// An infinite point used as a direction. Throws InfiniteMisuse when the
    /// argument is finite.
    explicit Displacement(const BaryPoint& direction);

    const Triple& triple() const { return t_; }
    bool is_zero() const {
        return t_[0].is_zero() && t_[1].is_zero() && t_[2].is_zero();
    }

private:
    Triple t_;
};

/// (Q-P) K (T-R)^T: the Euclidean dot product of vectors PQ and RT.
Rational inner_product(const MetricMatrix& k, const Displacement& pq, const Displacement& rt);
Rational inner_product(const MetricMatrix& k, const BaryPoint& p, const BaryPoint& q,
                       const BaryPoint& r, const BaryPoint& t);

/// Squared distance (P-Q) K (P-Q)^T; nonnegative, zero iff P == Q.
Rational dist2(const MetricMatrix& k, const BaryPoint& p, const BaryPoint& q);

/// True iff the inner product vanishes exactly. Throws ZeroVector on a zero
/// displacement.
bool is_perpendicular(const MetricMatrix& k, const Displacement& pq, const Displacement& rt);
bool is_perpendicular(const MetricMatrix& k, const BaryPoint& p, const BaryPoint& q,
                      const BaryPoint& r, const BaryPoint& t);

/// Determinant of the coordinate columns [P; Q; R]. Equals the signed area
/// ratio of triangle PQR to the reference triangle for finite points; zero
/// iff the three are collinear. Infinite points are allowed as columns.
Rational bracket(const BaryPoint& p, const BaryPoint& q, const BaryPoint& r);

/// [P; Q; T-R]; the geometric cross product of PQ and RT equals twice the
/// reference area times this coefficient. The value depends only on the two
/// difference vectors.
Rational cross_product_coeff(const Displacement& pq, const Displacement& rt);
Rational cross_product_coeff(const BaryPoint& p, const BaryPoint& q, const BaryPoint& r,
                             const BaryPoint& t);

/// Exact cotangent of an oriented angle, kept as the triple
/// (ip, bracket, s2) with numeric value ip / (2 sqrt(s2) bracket). The only
/// square root in the kernel appears in numeric evaluation; exact comparison
/// cross-multiplies the rational parts.
class AngleCot {
public:
    AngleCot(Rational ip, Rational bracket, Rational s2);

    const Rational& ip() const { return ip_; }
    const Rational& bracket() const { return bracket_; }
    const Rational& s2() const { return s2_; }

    /// bracket == 0: the three points are collinear and the cotangent is
    /// infinite.
    bool is_degenerate() const { return bracket_.is_zero(); }

    /// ip / (2 sqrt(s2) bracket); +/-inf (by sign of ip) when degenerate.
    double value() const;

    /// Exact three-way comparison of cotangent values by cross
    /// multiplication. The sign of bracket1 * bracket2 corrects the
    /// direction, so mixed-orientation inputs compare correctly as real
    /// numbers; note that comparing *angles* through their cotangents is
    /// only monotone between configurations whose brackets share a sign.
    /// Requires the same reference shape (equal s2) and both non-degenerate.
    int compare(const AngleCot& other) const;

    friend bool operator==(const AngleCot& x, const AngleCot& y) {
        return x.ip_ == y.ip_ && x.bracket_ == y.bracket_ && x.s2_ == y.s2_;
    }

private:
    Rational ip_, bracket_, s2_;
};

/// Oriented angle QPR at vertex P: ip = (P-Q) K (P-R)^T, bracket = [P; Q; R].
/// Throws ZeroVector when Q == P or R == P.
AngleCot cot_angle(const TriangleShape& shape, const BaryPoint& q, const BaryPoint& p,
                   const BaryPoint& r);

/// Line l1 alpha + l2 beta + l3 gamma = 0, defined up to a nonzero scalar.
class Line {
public:
    /// Coefficients must not all vanish.
    Line(Rational l1, Rational l2, Rational l3);

    const Rational& l1() const { return l_[0]; }
    const Rational& l2() const { return l_[1]; }
    const Rational& l3() const { return l_[2]; }

    Rational eval(const BaryPoint& x) const { return dot(l_, x.triple()); }
    bool contains(const BaryPoint& x) const { return eval(x).is_zero(); }

    /// Scaled so the first nonzero coefficient is 1.
    Line canonical() const;

    /// True iff the coefficient triples are proportional.
    bool equivalent(const Line& other) const;

    friend bool operator==(const Line& x, const Line& y) { return x.l_ == y.l_; }

private:
    Triple l_;
};

/// Join of two distinct points (either may be at infinity).
Line line_through(const BaryPoint& p, const BaryPoint& q);

/// The side opposite the given vertex: BC is alpha = 0, CA is beta = 0,
/// AB is gamma = 0. Defined combinatorially, so it stays valid for right
/// triangles where the vertex row of the metric matrix degenerates.
Line side_line(const TriangleShape&, Vertex v);

/// Meet of two non-proportional lines; finite when the homogeneous solution
/// has nonzero coordinate sum, otherwise the common direction at infinity.
BaryPoint intersect(const Line& m, const Line& n);

}  // namespace bary
