#pragma once

#include "bary/centers.hpp"
#include "bary/metric.hpp"
#include "bary/point.hpp"
#include "bary/shape.hpp"

namespace bary {

enum class Tangency { ExternallyTangent, InternallyTangent, NotTangent };

/// A circle stored as (finite center, exact squared radius) together with the
/// metric of its reference triangle. Membership is exact: X lies on the
/// circle iff power(X) = |X center|^2 - radius^2 vanishes.
class Circle {
public:
    Circle(MetricMatrix metric, BaryPoint center, Rational radius2);

    const MetricMatrix& metric() const { return k_; }
    const BaryPoint& center() const { return center_; }
    const Rational& radius2() const { return radius2_; }

    Rational power(const BaryPoint& x) const;
    bool contains(const BaryPoint& x) const { return power(x).is_zero(); }

private:
    MetricMatrix k_;
    BaryPoint center_;
    Rational radius2_;
};

/// Center O, squared radius R^2.
Circle circumcircle(const TriangleShape& shape);

/// Center N, squared radius R^2 / 4; passes through the three side
/// midpoints, the three altitude feet and the three midpoints of the
/// vertex-to-orthocenter segments.
Circle nine_point_circle(const TriangleShape& shape);

Circle incircle(const TriangleShape& shape);
Circle excircle(const TriangleShape& shape, Vertex v);

/// |X center|^2 - radius^2. Throws InfiniteMisuse for an infinite argument.
Rational power_of_point(const Circle& circle, const BaryPoint& x);

/// Square-root-free tangency test on d2 = |centers|^2 and
/// u = d2 - r1^2 - r2^2: the circles are tangent iff u^2 = 4 r1^2 r2^2
/// exactly, externally for u > 0 and internally for u < 0. Throws
/// ConcentricCircles when the centers coincide; both circles must refer to
/// the same reference triangle.
Tangency classify_tangency(const Circle& c1, const Circle& c2);

}  // namespace bary
