#include "bary/point.hpp"

#include "bary/errors.hpp"

#include <stdexcept>

namespace bary {

BaryPoint BaryPoint::finite(const Rational& u, const Rational& v, const Rational& w) {
    Rational sum = u + v + w;
    if (sum.is_zero())
        throw std::invalid_argument("coordinate sum is zero; not a finite point");
    return BaryPoint({u / sum, v / sum, w / sum}, PointKind::Finite);
}

BaryPoint BaryPoint::infinite(const Rational& u, const Rational& v, const Rational& w) {
    if (!(u + v + w).is_zero())
        throw std::invalid_argument("point at infinity requires zero coordinate sum");
    if (u.is_zero() && v.is_zero() && w.is_zero())
        throw std::invalid_argument("zero triple is not a point at infinity");
    return BaryPoint({u, v, w}, PointKind::Infinite);
}

BaryPoint BaryPoint::direction(const BaryPoint& from, const BaryPoint& to) {
    if (!from.is_finite() || !to.is_finite())
        throw InfiniteMisuse("direction requires two finite endpoints");
    if (from == to) throw IdenticalPoints("direction of a zero segment is undefined");
    return BaryPoint(to.triple() - from.triple(), PointKind::Infinite);
}

const BaryPoint& BaryPoint::vertex_a() {
    static const BaryPoint p({Rational(1), Rational(0), Rational(0)}, PointKind::Finite);
    return p;
}

const BaryPoint& BaryPoint::vertex_b() {
    static const BaryPoint p({Rational(0), Rational(1), Rational(0)}, PointKind::Finite);
    return p;
}

const BaryPoint& BaryPoint::vertex_c() {
    static const BaryPoint p({Rational(0), Rational(0), Rational(1)}, PointKind::Finite);
    return p;
}

}  // namespace bary
