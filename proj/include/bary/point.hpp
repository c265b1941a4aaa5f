#pragma once

#include "bary/rational.hpp"

#include <array>

namespace bary {

using Triple = std::array<Rational, 3>;

inline Triple operator+(const Triple& a, const Triple& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Triple operator-(const Triple& a, const Triple& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Triple operator*(const Rational& s, const Triple& t) {
    return {s * t[0], s * t[1], s * t[2]};
}
inline Rational dot(const Triple& a, const Triple& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Rational component_sum(const Triple& t) { return t[0] + t[1] + t[2]; }

enum class PointKind { Finite, Infinite };

/// Homogeneous coordinate triple relative to the reference triangle.
///
/// Finite points are normalized (components sum to 1); infinite points are
/// direction classes of parallel lines (components sum to 0, not all zero).
class BaryPoint {
public:
    /// Normalizes (u, v, w) by its sum. Throws std::invalid_argument when the
    /// sum is zero (such a triple is a direction, not a finite point).
    static BaryPoint finite(const Rational& u, const Rational& v, const Rational& w);
    static BaryPoint finite(const Triple& t) { return finite(t[0], t[1], t[2]); }

    /// Requires the components to sum to zero and not all vanish.
    static BaryPoint infinite(const Rational& u, const Rational& v, const Rational& w);
    static BaryPoint infinite(const Triple& t) { return infinite(t[0], t[1], t[2]); }

    /// The direction from one finite point to another, as a point at infinity.
    /// Throws IdenticalPoints when from == to, InfiniteMisuse on non-finite input.
    static BaryPoint direction(const BaryPoint& from, const BaryPoint& to);

    static const BaryPoint& vertex_a();
    static const BaryPoint& vertex_b();
    static const BaryPoint& vertex_c();

    PointKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == PointKind::Finite; }
    bool is_infinite() const { return kind_ == PointKind::Infinite; }

    const Rational& alpha() const { return t_[0]; }
    const Rational& beta() const { return t_[1]; }
    const Rational& gamma() const { return t_[2]; }
    const Triple& triple() const { return t_; }

    /// Componentwise equality (infinite points compare as stored vectors,
    /// not as projective classes).
    friend bool operator==(const BaryPoint& p, const BaryPoint& q) {
        return p.kind_ == q.kind_ && p.t_ == q.t_;
    }
    friend bool operator!=(const BaryPoint& p, const BaryPoint& q) { return !(p == q); }

private:
    BaryPoint(Triple t, PointKind k) : t_(std::move(t)), kind_(k) {}

    Triple t_;
    PointKind kind_;
};

}  // namespace bary
