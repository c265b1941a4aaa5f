#include "bary/centers.hpp"

#include "bary/errors.hpp"
#include "bary/metric.hpp"

#include <stdexcept>

namespace bary {

namespace {

Rational det3(const Triple& r0, const Triple& r1, const Triple& r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
           r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

}  // namespace

BaryPoint centroid(const TriangleShape&) {
    Rational third(1, 3);
    return BaryPoint::finite(third, third, third);
}

BaryPoint orthocenter(const TriangleShape& shape) {
    MetricMatrix k = metric_kh(shape);
    const Triple va = BaryPoint::vertex_a().triple();
    const Triple vb = BaryPoint::vertex_b().triple();
    const Triple vc = BaryPoint::vertex_c().triple();

    // Altitude through A: (B-C) K (X-A)^T = 0, through B: (C-A) K (X-B)^T = 0,
    // plus the normalization x + y + z = 1. Cramer on exact rationals.
    Triple r0 = k.apply(vb - vc);
    Triple r1 = k.apply(vc - va);
    Triple r2 = {Rational(1), Rational(1), Rational(1)};
    Rational b0 = dot(r0, va);
    Rational b1 = dot(r1, vb);
    Rational b2 = 1;

    Rational d = det3(r0, r1, r2);
    if (d.is_zero()) throw std::logic_error("altitude system is singular for a valid shape");
    Rational x = det3({b0, r0[1], r0[2]}, {b1, r1[1], r1[2]}, {b2, r2[1], r2[2]}) / d;
    Rational y = det3({r0[0], b0, r0[2]}, {r1[0], b1, r1[2]}, {r2[0], b2, r2[2]}) / d;
    Rational z = det3({r0[0], r0[1], b0}, {r1[0], r1[1], b1}, {r2[0], r2[1], b2}) / d;

    BaryPoint h = BaryPoint::finite(x, y, z);
    // The third altitude must pass through the solution as well.
    if (!k.form(va - vb, h.triple() - vc).is_zero())
        throw std::logic_error("orthocenter postcondition failed: third altitude misses");
    return h;
}

BaryPoint circumcenter(const TriangleShape& shape) {
    Triple g = centroid(shape).triple();
    Triple h = orthocenter(shape).triple();
    return BaryPoint::finite(Rational(1, 2) * (Rational(3) * g - h));
}

BaryPoint nine_point_center(const TriangleShape& shape) {
    Triple o = circumcenter(shape).triple();
    Triple h = orthocenter(shape).triple();
    return BaryPoint::finite(Rational(1, 2) * (o + h));
}

BaryPoint incenter(const TriangleShape& shape) {
    return BaryPoint::finite(shape.a(), shape.b(), shape.c());
}

BaryPoint excenter(const TriangleShape& shape, Vertex v) {
    Triple w = {shape.a(), shape.b(), shape.c()};
    w[static_cast<int>(v)] = -w[static_cast<int>(v)];
    return BaryPoint::finite(w);
}

BaryPoint midpoint(const BaryPoint& p, const BaryPoint& q) {
    if (!p.is_finite() || !q.is_finite())
        throw InfiniteMisuse("midpoint requires finite endpoints");
    return BaryPoint::finite(Rational(1, 2) * (p.triple() + q.triple()));
}

BaryPoint foot_of_perpendicular(const TriangleShape& shape, const BaryPoint& p,
                                const BaryPoint& q, const BaryPoint& r) {
    if (!p.is_finite() || !q.is_finite() || !r.is_finite())
        throw InfiniteMisuse("projection requires finite points");
    if (q == r) throw ZeroVector("projection target line needs two distinct points");
    MetricMatrix k = metric_kh(shape);
    Triple d = r.triple() - q.triple();
    Rational t = k.form(p.triple() - q.triple(), d) / k.form(d, d);
    return BaryPoint::finite(q.triple() + t * d);
}

Rational circumradius2(const TriangleShape& shape) {
    Rational abc2 = shape.a() * shape.a() * shape.b() * shape.b() * shape.c() * shape.c();
    return abc2 / (Rational(16) * shape.squared_area());
}

Rational inradius2(const TriangleShape& shape) {
    return shape.squared_area() / (shape.semiperimeter() * shape.semiperimeter());
}

Rational exradius2(const TriangleShape& shape, Vertex v) {
    Rational d = shape.semiperimeter() - shape.side(v);
    return shape.squared_area() / (d * d);
}

Rational circum_in_product(const TriangleShape& shape) {
    return shape.a() * shape.b() * shape.c() / (Rational(4) * shape.semiperimeter());
}

Rational circum_ex_product(const TriangleShape& shape, Vertex v) {
    Rational d = shape.semiperimeter() - shape.side(v);
    return shape.a() * shape.b() * shape.c() / (Rational(4) * d);
}

CenterSet compute_centers(const TriangleShape& shape) {
    BaryPoint g = centroid(shape);
    BaryPoint h = orthocenter(shape);
    BaryPoint o = circumcenter(shape);
    BaryPoint n = nine_point_center(shape);
    return CenterSet{
        g,
        h,
        o,
        n,
        incenter(shape),
        {excenter(shape, Vertex::A), excenter(shape, Vertex::B), excenter(shape, Vertex::C)},
        circumradius2(shape),
        inradius2(shape),
        {exradius2(shape, Vertex::A), exradius2(shape, Vertex::B), exradius2(shape, Vertex::C)},
        circum_in_product(shape),
        {circum_ex_product(shape, Vertex::A), circum_ex_product(shape, Vertex::B),
         circum_ex_product(shape, Vertex::C)},
    };
}

}  // namespace bary
