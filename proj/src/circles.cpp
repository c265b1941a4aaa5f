#include "bary/circles.hpp"

#include "bary/errors.hpp"
#include "bary/kernel.hpp"

#include <stdexcept>
#include <utility>

namespace bary {

Circle::Circle(MetricMatrix metric, BaryPoint center, Rational radius2)
    : k_(std::move(metric)), center_(std::move(center)), radius2_(std::move(radius2)) {
    if (!center_.is_finite()) throw InfiniteMisuse("circle center must be finite");
    if (radius2_.sign() < 0) throw std::invalid_argument("squared radius must be nonnegative");
}

Rational Circle::power(const BaryPoint& x) const {
    if (!x.is_finite()) throw InfiniteMisuse("power of an infinite point is undefined");
    return dist2(k_, x, center_) - radius2_;
}

Circle circumcircle(const TriangleShape& shape) {
    return Circle(metric_kh(shape), circumcenter(shape), circumradius2(shape));
}

Circle nine_point_circle(const TriangleShape& shape) {
    return Circle(metric_kh(shape), nine_point_center(shape),
                  circumradius2(shape) / Rational(4));
}

Circle incircle(const TriangleShape& shape) {
    return Circle(metric_kh(shape), incenter(shape), inradius2(shape));
}

Circle excircle(const TriangleShape& shape, Vertex v) {
    return Circle(metric_kh(shape), excenter(shape, v), exradius2(shape, v));
}

Rational power_of_point(const Circle& circle, const BaryPoint& x) { return circle.power(x); }

Tangency classify_tangency(const Circle& c1, const Circle& c2) {
    if (c1.metric() != c2.metric())
        throw std::invalid_argument("tangency needs circles over the same reference triangle");
    if (c1.center() == c2.center())
        throw ConcentricCircles("concentric circles are never tangent");
    Rational d2 = dist2(c1.metric(), c1.center(), c2.center());
    Rational u = d2 - c1.radius2() - c2.radius2();
    if (u * u != Rational(4) * c1.radius2() * c2.radius2()) return Tangency::NotTangent;
    return u.sign() > 0 ? Tangency::ExternallyTangent : Tangency::InternallyTangent;
}

}  // namespace bary
