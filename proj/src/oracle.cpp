#include "bary/oracle.hpp"

#include "bary/errors.hpp"
#include "bary/sampling.hpp"

#include <cmath>
#include <cstdlib>

namespace bary {

namespace {

double twice_signed_area(const CartesianPoint& p, const CartesianPoint& q,
                         const CartesianPoint& r) {
    return (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
}

}  // namespace

Embedding embed(const TriangleShape& shape, Placement placement, std::uint64_t seed) {
    double a = shape.a().to_double();
    // x_A = S_B / a places A over the base at the right offset; y_A = 2S / a
    // is the height. Both follow from the side-length constraints.
    double xa = shape.sb().to_double() / a;
    double ya = 2.0 * std::sqrt(shape.squared_area().to_double()) / a;
    Embedding emb{{xa, ya}, {0.0, 0.0}, {a, 0.0}, "canonical"};
    if (placement == Placement::Random) {
        Sampler sampler(seed);
        double theta = sampler.uniform_real(0.0, 6.283185307179586);
        double tx = sampler.uniform_real(-5.0, 5.0);
        double ty = sampler.uniform_real(-5.0, 5.0);
        double ct = std::cos(theta), st = std::sin(theta);
        for (CartesianPoint* p : {&emb.a, &emb.b, &emb.c}) {
            double x = p->x * ct - p->y * st + tx;
            double y = p->x * st + p->y * ct + ty;
            p->x = x;
            p->y = y;
        }
        emb.provenance = "random(seed=" + std::to_string(seed) + ")";
    }
    return emb;
}

CartesianPoint to_cartesian(const Embedding& emb, const BaryPoint& p) {
    if (!p.is_finite()) throw InfiniteMisuse("cannot embed a point at infinity");
    double u = p.alpha().to_double();
    double v = p.beta().to_double();
    double w = p.gamma().to_double();
    return {u * emb.a.x + v * emb.b.x + w * emb.c.x,
            u * emb.a.y + v * emb.b.y + w * emb.c.y};
}

BaryPoint from_cartesian(const Embedding& emb, const CartesianPoint& pt) {
    double denom = twice_signed_area(emb.a, emb.b, emb.c);
    if (std::fabs(denom) < 1e-12)
        throw DegenerateEmbedding("embedding vertices are (numerically) collinear");
    double u = twice_signed_area(pt, emb.b, emb.c) / denom;
    double v = twice_signed_area(emb.a, pt, emb.c) / denom;
    double w = twice_signed_area(emb.a, emb.b, pt) / denom;
    // Exact dyadic rationalization, then exact normalization: the float sum
    // is 1 up to rounding, and dividing by it restores the invariant exactly.
    return BaryPoint::finite(Rational::from_double_exact(u), Rational::from_double_exact(v),
                             Rational::from_double_exact(w));
}

Matrix3d oracle_metric(const Embedding& emb) {
    const CartesianPoint* v[3] = {&emb.a, &emb.b, &emb.c};
    Matrix3d m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = v[i]->x * v[j]->x + v[i]->y * v[j]->y + 1.0;
    return m;
}

double oracle_dist2(const Embedding& emb, const BaryPoint& p, const BaryPoint& q) {
    CartesianPoint cp = to_cartesian(emb, p);
    CartesianPoint cq = to_cartesian(emb, q);
    double dx = cp.x - cq.x, dy = cp.y - cq.y;
    return dx * dx + dy * dy;
}

double oracle_dot(const Embedding& emb, const BaryPoint& p, const BaryPoint& q,
                  const BaryPoint& r, const BaryPoint& t) {
    CartesianPoint cp = to_cartesian(emb, p), cq = to_cartesian(emb, q);
    CartesianPoint cr = to_cartesian(emb, r), ct = to_cartesian(emb, t);
    return (cq.x - cp.x) * (ct.x - cr.x) + (cq.y - cp.y) * (ct.y - cr.y);
}

double oracle_cross(const Embedding& emb, const BaryPoint& p, const BaryPoint& q,
                    const BaryPoint& r, const BaryPoint& t) {
    CartesianPoint cp = to_cartesian(emb, p), cq = to_cartesian(emb, q);
    CartesianPoint cr = to_cartesian(emb, r), ct = to_cartesian(emb, t);
    return (cq.x - cp.x) * (ct.y - cr.y) - (cq.y - cp.y) * (ct.x - cr.x);
}

double oracle_area(const Embedding& emb, const BaryPoint& p, const BaryPoint& q,
                   const BaryPoint& r) {
    return 0.5 * twice_signed_area(to_cartesian(emb, p), to_cartesian(emb, q),
                                   to_cartesian(emb, r));
}

double oracle_cot(const Embedding& emb, const BaryPoint& q, const BaryPoint& p,
                  const BaryPoint& r) {
    double d = oracle_dot(emb, p, q, p, r);
    double twice_area = 2.0 * oracle_area(emb, p, q, r);
    return d / twice_area;
}

Matrix3d gauge_reduce(const Matrix3d& m) {
    // Off-diagonal entries of a gauge term are midpoints of its diagonal, so
    // the diagonal that zeroes the off-diagonals solves a linear system:
    double g0 = m[0][1] + m[0][2] - m[1][2];
    double g1 = m[0][1] + m[1][2] - m[0][2];
    double g2 = m[0][2] + m[1][2] - m[0][1];
    double g[3] = {g0, g1, g2};
    Matrix3d out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = m[i][j] - 0.5 * (g[i] + g[j]);
    return out;
}

bool compare(const Rational& kernel_value, double oracle_value, double rel_tol) {
    return std::fabs(kernel_value.to_double() - oracle_value) <=
           rel_tol * std::max(1.0, std::fabs(oracle_value));
}

}  // namespace bary
