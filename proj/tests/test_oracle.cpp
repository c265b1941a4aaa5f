#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bary/centers.hpp"
#include "bary/errors.hpp"
#include "bary/kernel.hpp"
#include "bary/metric.hpp"
#include "bary/oracle.hpp"
#include "bary/sampling.hpp"

#include <cmath>

using namespace bary;

namespace {
const BaryPoint& A = BaryPoint::vertex_a();
const BaryPoint& B = BaryPoint::vertex_b();
const BaryPoint& C = BaryPoint::vertex_c();

double dist(const CartesianPoint& p, const CartesianPoint& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}
}  // namespace

TEST_CASE("canonical embedding") {
    TriangleShape right(5, 4, 3);
    Embedding emb = embed(right);
    CHECK(emb.b.x == doctest::Approx(0.0));
    CHECK(emb.b.y == doctest::Approx(0.0));
    CHECK(emb.c.x == doctest::Approx(5.0));
    CHECK(emb.a.x == doctest::Approx(9.0 / 5.0).epsilon(1e-12));
    CHECK(emb.a.y == doctest::Approx(12.0 / 5.0).epsilon(1e-12));

    Embedding eq = embed(TriangleShape(2, 2, 2));
    CHECK(eq.a.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eq.a.y == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("embeddings reproduce the side lengths with positive orientation") {
    Sampler sampler(101);
    for (int t = 0; t < 100; ++t) {
        TriangleShape s = sampler.conditioned_shape();
        for (Placement placement : {Placement::Canonical, Placement::Random}) {
            Embedding emb = embed(s, placement, sampler.next_u64());
            CHECK(dist(emb.b, emb.c) == doctest::Approx(s.a().to_double()).epsilon(1e-12));
            CHECK(dist(emb.c, emb.a) == doctest::Approx(s.b().to_double()).epsilon(1e-12));
            CHECK(dist(emb.a, emb.b) == doctest::Approx(s.c().to_double()).epsilon(1e-12));
            double twice_area = (emb.b.x - emb.a.x) * (emb.c.y - emb.a.y) -
                                (emb.c.x - emb.a.x) * (emb.b.y - emb.a.y);
            CHECK(twice_area > 0.0);
        }
    }
}

TEST_CASE("random placement preserves pairwise distances") {
    TriangleShape s(6, 5, 5);
    Embedding canon = embed(s);
    Embedding moved = embed(s, Placement::Random, 99);
    CHECK(dist(canon.a, canon.b) == doctest::Approx(dist(moved.a, moved.b)).epsilon(1e-12));
    CHECK(dist(canon.b, canon.c) == doctest::Approx(dist(moved.b, moved.c)).epsilon(1e-12));
    CHECK(dist(canon.c, canon.a) == doctest::Approx(dist(moved.c, moved.a)).epsilon(1e-12));
}

TEST_CASE("to_cartesian maps the named points correctly") {
    TriangleShape right(5, 4, 3);
    Embedding emb = embed(right);
    CartesianPoint a = to_cartesian(emb, A);
    CHECK(a.x == doctest::Approx(emb.a.x));
    CHECK(a.y == doctest::Approx(emb.a.y));

    CartesianPoint g = to_cartesian(emb, centroid(right));
    CHECK(g.x == doctest::Approx((emb.a.x + emb.b.x + emb.c.x) / 3.0).epsilon(1e-12));
    CHECK(g.y == doctest::Approx((emb.a.y + emb.b.y + emb.c.y) / 3.0).epsilon(1e-12));

    // incenter of the canonical (5,4,3) embedding sits at (2, 1): height r = 1
    // above the base BC on the x-axis
    CartesianPoint i = to_cartesian(emb, incenter(right));
    CHECK(i.x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(i.y == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS((to_cartesian(emb, BaryPoint::direction(A, B))), InfiniteMisuse);
}

TEST_CASE("from_cartesian inverts to_cartesian") {
    TriangleShape right(5, 4, 3);
    Embedding emb = embed(right);
    BaryPoint i = from_cartesian(emb, {2.0, 1.0});
    CHECK(i.alpha().to_double() == doctest::Approx(5.0 / 12.0).epsilon(1e-10));
    CHECK(i.beta().to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(i.gamma().to_double() == doctest::Approx(1.0 / 4.0).epsilon(1e-10));
    // exact normalization: the rationalized coordinates sum to exactly 1
    CHECK(i.alpha() + i.beta() + i.gamma() == Rational(1));

    BaryPoint va = from_cartesian(emb, emb.a);
    CHECK(va.alpha().to_double() == doctest::Approx(1.0).epsilon(1e-12));

    Sampler sampler(103);
    for (int t = 0; t < 50; ++t) {
        TriangleShape s = sampler.conditioned_shape();
        Embedding e = embed(s, Placement::Random, sampler.next_u64());
        BaryPoint p = sampler.conditioned_point();
        CartesianPoint cp = to_cartesian(e, p);
        BaryPoint back = from_cartesian(e, cp);
        CHECK(back.alpha().to_double() == doctest::Approx(p.alpha().to_double()).epsilon(1e-10));
        CHECK(back.beta().to_double() == doctest::Approx(p.beta().to_double()).epsilon(1e-10));
        CHECK(back.gamma().to_double() == doctest::Approx(p.gamma().to_double()).epsilon(1e-10));
    }

    Embedding degenerate{{0, 0}, {1, 0}, {2, 0}, "collinear"};
    CHECK_THROWS_AS((from_cartesian(degenerate, {0.5, 0.5})), DegenerateEmbedding);
}

TEST_CASE("oracle metric gauge-reduces to the canonical diagonal") {
    Sampler sampler(107);
    for (int t = 0; t < 100; ++t) {
        TriangleShape s = sampler.conditioned_shape();
        Embedding emb = embed(s, Placement::Random, sampler.next_u64());
        Matrix3d reduced = gauge_reduce(oracle_metric(emb));
        MetricMatrix kh = metric_kh(s);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(std::fabs(reduced[i][j] - kh.at(i, j).to_double()) < 1e-9);
    }
}

TEST_CASE("frozen oracle values on the right shape") {
    TriangleShape right(5, 4, 3);
    Embedding emb = embed(right);
    CHECK(oracle_dist2(emb, A, B) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(oracle_cot(emb, B, A, C) == doctest::Approx(0.0));
    CHECK(oracle_area(emb, A, B, C) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("kernel quantities match the oracle on random shapes") {
    Sampler sampler(109);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        TriangleShape s = sampler.conditioned_shape();
        MetricMatrix k = metric_kh(s);
        double root_area = std::sqrt(s.squared_area().to_double());
        Embedding embs[2] = {embed(s), embed(s, Placement::Random, sampler.next_u64())};
        for (int j = 0; j < 5; ++j) {
            BaryPoint p = sampler.conditioned_point();
            BaryPoint q = sampler.conditioned_point();
            BaryPoint r = sampler.conditioned_point();
            BaryPoint t2 = sampler.conditioned_point();
            if (p == q || p == r || abs(bracket(p, q, r)) < Rational(1, 4)) continue;
            ++checked;
            for (const Embedding& emb : embs) {
                CHECK(compare(dist2(k, p, q), oracle_dist2(emb, p, q), 1e-9));
                CHECK(compare(inner_product(k, p, q, r, t2), oracle_dot(emb, p, q, r, t2), 1e-9));
                double area = oracle_area(emb, p, q, r);
                CHECK(std::fabs(bracket(p, q, r).to_double() * root_area - area) <=
                      1e-9 * std::max(1.0, std::fabs(area)));
                double cross = oracle_cross(emb, p, q, r, t2);
                CHECK(std::fabs(cross_product_coeff(p, q, r, t2).to_double() * 2.0 * root_area -
                                cross) <= 1e-9 * std::max(1.0, std::fabs(cross)));
                double cot = oracle_cot(emb, q, p, r);
                CHECK(std::fabs(cot_angle(s, q, p, r).value() - cot) <=
                      1e-9 * std::max(1.0, std::fabs(cot)));
            }
        }
    }
    CHECK(checked > 300);  // the conditioning filter must not starve the test
}

TEST_CASE("compare applies a relative tolerance with an absolute floor") {
    CHECK(compare(Rational(5, 4), 1.25, 1e-9));
    CHECK(compare(Rational(0), 1e-13, 1e-9));
    CHECK_FALSE(compare(Rational(1), 1.1, 1e-9));
}
