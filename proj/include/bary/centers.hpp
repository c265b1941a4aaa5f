#pragma once

#include "bary/kernel.hpp"
#include "bary/point.hpp"
#include "bary/shape.hpp"

#include <array>

namespace bary {

BaryPoint centroid(const TriangleShape& shape);

/// Intersection of the altitudes, obtained by solving the two altitude
/// equations plus the normalization row as an exact 3x3 linear system.
BaryPoint orthocenter(const TriangleShape& shape);

/// (3G - H) / 2; equidistant from the three vertices.
BaryPoint circumcenter(const TriangleShape& shape);

/// (O + H) / 2.
BaryPoint nine_point_center(const TriangleShape& shape);

/// (aA + bB + cC) / (2p); every component positive.
BaryPoint incenter(const TriangleShape& shape);

/// Center of the excircle opposite the given vertex, e.g.
/// (-aA + bB + cC) / (2(p - a)) for A.
BaryPoint excenter(const TriangleShape& shape, Vertex v);

/// (P + Q) / 2 for finite points.
BaryPoint midpoint(const BaryPoint& p, const BaryPoint& q);

/// Orthogonal projection of P onto the line QR:
/// X = Q + t (R - Q) with t = (P-Q) K (R-Q)^T / |QR|^2.
BaryPoint foot_of_perpendicular(const TriangleShape& shape, const BaryPoint& p,
                                const BaryPoint& q, const BaryPoint& r);

Rational circumradius2(const TriangleShape& shape);  // a^2 b^2 c^2 / (16 S^2)
Rational inradius2(const TriangleShape& shape);      // S^2 / p^2
Rational exradius2(const TriangleShape& shape, Vertex v);

/// Exact product R * r = abc / (4p); rational even though R and r are not.
Rational circum_in_product(const TriangleShape& shape);
/// R * r_a = abc / (4(p - a)) and cyclic.
Rational circum_ex_product(const TriangleShape& shape, Vertex v);

/// The classical centers X(1)..X(5) and excenters together with the exact
/// squared radii and radius products they satisfy.
struct CenterSet {
    BaryPoint g, h, o, n, i;
    std::array<BaryPoint, 3> excenters;     // opposite A, B, C
    Rational circumradius2;                 // R^2
    Rational inradius2;                     // r^2
    std::array<Rational, 3> exradius2;      // r_a^2, r_b^2, r_c^2
    Rational circum_in_product;             // R r
    std::array<Rational, 3> circum_ex_product;  // R r_a, R r_b, R r_c
};

CenterSet compute_centers(const TriangleShape& shape);

}  // namespace bary
