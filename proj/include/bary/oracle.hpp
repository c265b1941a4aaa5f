#pragma once

#include "bary/point.hpp"
#include "bary/rational.hpp"
#include "bary/shape.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace bary {

/// Double-precision planar reference computations. Deliberately naive
/// textbook formulas on Cartesian coordinates, sharing no code path with the
/// exact kernel, so disagreement localizes bugs to one side or the other.

struct CartesianPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class Placement { Canonical, Random };

/// A concrete placement of the reference triangle in the plane. Side lengths
/// reproduce (a, b, c) to double precision and the orientation A, B, C is
/// counterclockwise.
struct Embedding {
    CartesianPoint a, b, c;
    std::string provenance;
};

/// Canonical placement puts B = (0,0), C = (a,0) and A in the upper half
/// plane; Random applies a seeded rigid motion (rotation + translation) on
/// top, which preserves distances and orientation.
Embedding embed(const TriangleShape& shape, Placement placement = Placement::Canonical,
                std::uint64_t seed = 0);

using Matrix3d = std::array<std::array<double, 3>, 3>;

/// x = x_A alpha + x_B beta + x_C gamma (and likewise y). Finite points only.
CartesianPoint to_cartesian(const Embedding& emb, const BaryPoint& p);

/// Signed-area ratios by Cramer's rule. The double ratios are rationalized
/// exactly (every double is a dyadic rational) and normalized, so the result
/// satisfies the finite-point invariant while staying within float accuracy
/// of the input. Throws DegenerateEmbedding when the embedding is (numerically)
/// collinear.
BaryPoint from_cartesian(const Embedding& emb, const CartesianPoint& pt);

/// The Gram-style matrix with entries x_i x_j + y_i y_j + 1, computed
/// literally from the embedding coordinates.
Matrix3d oracle_metric(const Embedding& emb);

double oracle_dist2(const Embedding& emb, const BaryPoint& p, const BaryPoint& q);
/// Dot product of vectors PQ and RT.
double oracle_dot(const Embedding& emb, const BaryPoint& p, const BaryPoint& q,
                  const BaryPoint& r, const BaryPoint& t);
/// Cross product of vectors PQ and RT (z component).
double oracle_cross(const Embedding& emb, const BaryPoint& p, const BaryPoint& q,
                    const BaryPoint& r, const BaryPoint& t);
/// Signed area of triangle PQR (shoelace).
double oracle_area(const Embedding& emb, const BaryPoint& p, const BaryPoint& q,
                   const BaryPoint& r);
/// Cotangent of the oriented angle QPR at P: dot / (2 * signed area).
double oracle_cot(const Embedding& emb, const BaryPoint& q, const BaryPoint& p,
                  const BaryPoint& r);

/// Subtracts the gauge term fitted from the off-diagonal midpoints, leaving
/// the canonical diagonal representative of m's gauge class.
Matrix3d gauge_reduce(const Matrix3d& m);

/// |kernel - oracle| <= rel_tol * max(1, |oracle|).
bool compare(const Rational& kernel_value, double oracle_value, double rel_tol);

}  // namespace bary
