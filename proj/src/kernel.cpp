#include "bary/kernel.hpp"

#include "bary/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bary {

namespace {

Rational det3(const Triple& c0, const Triple& c1, const Triple& c2) {
    return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) -
           c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
           c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

Triple homogeneous_cross(const Triple& p, const Triple& q) {
    return {p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0]};
}

}  // namespace

Displacement::Displacement(const BaryPoint& from, const BaryPoint& to) {
    if (from.kind() != to.kind())
        throw InfiniteMisuse("difference of a finite and an infinite point is ill-defined");
    t_ = to.triple() - from.triple();
}

Displacement::Displacement(const BaryPoint& direction) {
    if (!direction.is_infinite())
        throw InfiniteMisuse("a single-point displacement must be a point at infinity");
    t_ = direction.triple();
}

Rational inner_product(const MetricMatrix& k, const Displacement& pq, const Displacement& rt) {
    return k.form(pq.triple(), rt.triple());
}

Rational inner_product(const MetricMatrix& k, const BaryPoint& p, const BaryPoint& q,
                       const BaryPoint& r, const BaryPoint& t) {
    return inner_product(k, Displacement(p, q), Displacement(r, t));
}

Rational dist2(const MetricMatrix& k, const BaryPoint& p, const BaryPoint& q) {
    if (!p.is_finite() || !q.is_finite())
        throw InfiniteMisuse("distance requires two finite points");
    Triple d = p.triple() - q.triple();
    return k.form(d, d);
}

bool is_perpendicular(const MetricMatrix& k, const Displacement& pq, const Displacement& rt) {
    if (pq.is_zero() || rt.is_zero())
        throw ZeroVector("perpendicularity of a zero vector is undefined");
    return inner_product(k, pq, rt).is_zero();
}

bool is_perpendicular(const MetricMatrix& k, const BaryPoint& p, const BaryPoint& q,
                      const BaryPoint& r, const BaryPoint& t) {
    return is_perpendicular(k, Displacement(p, q), Displacement(r, t));
}

Rational bracket(const BaryPoint& p, const BaryPoint& q, const BaryPoint& r) {
    return det3(p.triple(), q.triple(), r.triple());
}

Rational cross_product_coeff(const Displacement& pq, const Displacement& rt) {
    // [P; Q; T-R] = det(X, Q-P, T-R) for any finite column X: subtracting two
    // normalized columns cancels the base point, and the determinant of three
    // zero-sum columns vanishes. Evaluate at X = (1, 0, 0).
    const Triple& u = pq.triple();
    const Triple& v = rt.triple();
    return u[1] * v[2] - u[2] * v[1];
}

Rational cross_product_coeff(const BaryPoint& p, const BaryPoint& q, const BaryPoint& r,
                             const BaryPoint& t) {
    return cross_product_coeff(Displacement(p, q), Displacement(r, t));
}

AngleCot::AngleCot(Rational ip, Rational bracket, Rational s2)
    : ip_(std::move(ip)), bracket_(std::move(bracket)), s2_(std::move(s2)) {
    if (s2_.sign() <= 0) throw std::invalid_argument("squared area must be positive");
}

double AngleCot::value() const {
    if (is_degenerate()) {
        if (ip_.is_zero()) return std::numeric_limits<double>::quiet_NaN();
        return ip_.sign() > 0 ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
    }
    return ip_.to_double() / (2.0 * std::sqrt(s2_.to_double()) * bracket_.to_double());
}

int AngleCot::compare(const AngleCot& other) const {
    if (s2_ != other.s2_)
        throw std::invalid_argument("cotangents from different reference shapes are not comparable");
    if (is_degenerate() || other.is_degenerate())
        throw std::invalid_argument("degenerate cotangent has no finite value to compare");
    // cot1 - cot2 = (ip1 br2 - ip2 br1) / (2 sqrt(s2) br1 br2)
    int diff = (ip_ * other.bracket_ - other.ip_ * bracket_).sign();
    return diff * (bracket_ * other.bracket_).sign();
}

AngleCot cot_angle(const TriangleShape& shape, const BaryPoint& q, const BaryPoint& p,
                   const BaryPoint& r) {
    if (!p.is_finite() || !q.is_finite() || !r.is_finite())
        throw InfiniteMisuse("angle vertices must be finite points");
    if (q == p || r == p) throw ZeroVector("angle with coincident vertex and endpoint");
    MetricMatrix k = metric_kh(shape);
    Rational ip = k.form(p.triple() - q.triple(), p.triple() - r.triple());
    return AngleCot(std::move(ip), bracket(p, q, r), shape.squared_area());
}

Line::Line(Rational l1, Rational l2, Rational l3) : l_{std::move(l1), std::move(l2), std::move(l3)} {
    if (l_[0].is_zero() && l_[1].is_zero() && l_[2].is_zero())
        throw std::invalid_argument("line coefficients must not all vanish");
}

Line Line::canonical() const {
    for (const Rational& c : l_)
        if (!c.is_zero()) return Line(l_[0] / c, l_[1] / c, l_[2] / c);
    return *this;  // unreachable: constructor rejects the zero triple
}

bool Line::equivalent(const Line& other) const {
    Triple cr = homogeneous_cross(l_, other.l_);
    return cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero();
}

Line line_through(const BaryPoint& p, const BaryPoint& q) {
    Triple cr = homogeneous_cross(p.triple(), q.triple());
    if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero())
        throw IdenticalPoints("no unique line through coincident points");
    return Line(cr[0], cr[1], cr[2]);
}

Line side_line(const TriangleShape&, Vertex v) {
    switch (v) {
        case Vertex::A: return Line(1, 0, 0);
        case Vertex::B: return Line(0, 1, 0);
        default: return Line(0, 0, 1);
    }
}

BaryPoint intersect(const Line& m, const Line& n) {
    Triple cr = homogeneous_cross({m.l1(), m.l2(), m.l3()}, {n.l1(), n.l2(), n.l3()});
    if (cr[0].is_zero() && cr[1].is_zero() && cr[2].is_zero())
        throw IdenticalLines("proportional lines have no unique intersection");
    Rational sum = component_sum(cr);
    if (sum.is_zero()) return BaryPoint::infinite(cr[0], cr[1], cr[2]);
    return BaryPoint::finite(cr[0], cr[1], cr[2]);
}

}  // namespace bary
