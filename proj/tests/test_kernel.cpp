#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bary/centers.hpp"
#include "bary/errors.hpp"
#include "bary/kernel.hpp"
#include "bary/metric.hpp"
#include "bary/point.hpp"
#include "bary/sampling.hpp"
#include "bary/shape.hpp"

using namespace bary;

namespace {
const BaryPoint& A = BaryPoint::vertex_a();
const BaryPoint& B = BaryPoint::vertex_b();
const BaryPoint& C = BaryPoint::vertex_c();
}  // namespace

TEST_CASE("conway symbols") {
    auto s = conway(2, 2, 2);
    CHECK(s[0] == Rational(2));
    CHECK(s[1] == Rational(2));
    CHECK(s[2] == Rational(2));

    s = conway(5, 4, 3);  // right angle at A
    CHECK(s[0] == Rational(0));
    CHECK(s[1] == Rational(9));
    CHECK(s[2] == Rational(16));

    s = conway(6, 5, 5);
    CHECK(s[0] == Rational(7));
    CHECK(s[1] == Rational(18));
    CHECK(s[2] == Rational(18));

    CHECK_THROWS_AS((conway(1, 1, 3)), DegenerateTriangle);
    CHECK_THROWS_AS((conway(1, 1, 2)), DegenerateTriangle);  // strict inequality
    CHECK_THROWS_AS((conway(0, 1, 1)), DegenerateTriangle);
    CHECK_THROWS_AS((conway(Rational(-2), 3, 4)), DegenerateTriangle);
}

TEST_CASE("squared area") {
    CHECK(TriangleShape(5, 4, 3).squared_area() == Rational(36));
    CHECK(TriangleShape(2, 2, 2).squared_area() == Rational(3));
    CHECK(TriangleShape(1, 1, 1).squared_area() == Rational(3, 16));

    // Heron brute force as an independent route
    Sampler sampler(11);
    for (int i = 0; i < 50; ++i) {
        TriangleShape s = sampler.shape(100);
        Rational p = (s.a() + s.b() + s.c()) / Rational(2);
        Rational heron = p * (p - s.a()) * (p - s.b()) * (p - s.c());
        CHECK(s.squared_area() == heron);
        CHECK(s.squared_area().sign() > 0);
    }
}

TEST_CASE("canonical and off-diagonal metric matrices") {
    TriangleShape right(5, 4, 3);
    MetricMatrix kh = metric_kh(right);
    CHECK(kh == MetricMatrix::diagonal(0, 9, 16));

    MetricMatrix ko = metric_ko(right);
    CHECK(ko.at(0, 1) == Rational(-9, 2));
    CHECK(ko.at(0, 2) == Rational(-8));
    CHECK(ko.at(1, 2) == Rational(-25, 2));
    CHECK(ko.at(0, 0) == Rational(0));

    TriangleShape eq(2, 2, 2);
    MetricMatrix koe = metric_ko(eq);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(koe.at(i, j) == (i == j ? Rational(0) : Rational(-2)));
}

TEST_CASE("gauge family") {
    CHECK(gauge(0, 0, 0) == MetricMatrix::zero());
    MetricMatrix ones = gauge(1, 1, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ones.at(i, j) == Rational(1));

    // gauge terms annihilate every pair of difference vectors
    Sampler sampler(5);
    for (int i = 0; i < 100; ++i) {
        MetricMatrix f = gauge(sampler.rational(50, 50, true), sampler.rational(50, 50, true),
                               sampler.rational(50, 50, true));
        BaryPoint p = sampler.finite_point(), q = sampler.finite_point();
        BaryPoint r = sampler.finite_point(), t = sampler.finite_point();
        CHECK(inner_product(f, p, q, r, t) == Rational(0));
    }
}

TEST_CASE("gauge equivalence test") {
    TriangleShape right(5, 4, 3);
    TriangleShape eq(2, 2, 2);
    CHECK(is_gauge_equivalent(metric_kh(right), metric_kh(right)));
    CHECK(is_gauge_equivalent(metric_kh(right), metric_ko(right)));
    CHECK_FALSE(is_gauge_equivalent(metric_kh(right), metric_kh(eq)));

    // K_H = K_O + f(S_A, S_B, S_C) exactly, for random shapes
    Sampler sampler(7);
    for (int i = 0; i < 100; ++i) {
        TriangleShape s = sampler.shape(1000);
        CHECK(metric_kh(s) == metric_ko(s) + gauge(s.sa(), s.sb(), s.sc()));
        CHECK(is_gauge_equivalent(metric_kh(s), metric_ko(s)));
    }
}

TEST_CASE("inner product frozen examples") {
    TriangleShape right(5, 4, 3);
    MetricMatrix k = metric_kh(right);
    CHECK(inner_product(k, A, B, A, C) == Rational(0));  // right angle at A
    CHECK(inner_product(k, A, B, A, B) == Rational(9));  // c^2
    CHECK(inner_product(k, A, A, B, C) == Rational(0));  // zero vector

    TriangleShape eq(2, 2, 2);
    CHECK(inner_product(metric_kh(eq), A, B, A, C) == Rational(2));  // S_A
}

TEST_CASE("inner product accepts single infinite directions") {
    TriangleShape shape(6, 5, 5);
    MetricMatrix k = metric_kh(shape);
    BaryPoint d = BaryPoint::direction(A, B);
    CHECK(inner_product(k, Displacement(d), Displacement(A, B)) ==
          inner_product(k, A, B, A, B));
    // rational scaling of a direction scales the product linearly
    BaryPoint d3 = BaryPoint::infinite(Rational(3) * d.triple());
    CHECK(inner_product(k, Displacement(d3), Displacement(A, C)) ==
          Rational(3) * inner_product(k, A, B, A, C));

    CHECK_THROWS_AS((Displacement(A, d)), InfiniteMisuse);   // finite minus infinite
    CHECK_THROWS_AS((Displacement(d, A)), InfiniteMisuse);
    CHECK_THROWS_AS((Displacement(A)), InfiniteMisuse);    // finite point is not a direction
    CHECK_THROWS_AS((dist2(k, d, A)), InfiniteMisuse);
}

TEST_CASE("dist2 frozen examples and positivity") {
    TriangleShape right(5, 4, 3);
    MetricMatrix k = metric_kh(right);
    CHECK(dist2(k, A, B) == Rational(9));
    CHECK(dist2(k, A, A) == Rational(0));

    TriangleShape eq(2, 2, 2);
    CHECK(dist2(metric_kh(eq), centroid(eq), A) == Rational(4, 3));

    Sampler sampler(13);
    for (int i = 0; i < 100; ++i) {
        TriangleShape s = sampler.shape(1000);
        MetricMatrix m = metric_kh(s);
        BaryPoint p = sampler.finite_point(), q = sampler.finite_point();
        Rational d = dist2(m, p, q);
        if (p == q)
            CHECK(d == Rational(0));
        else
            CHECK(d.sign() > 0);
    }
}

TEST_CASE("law of cosines closure on random shapes") {
    Sampler sampler(17);
    for (int i = 0; i < 200; ++i) {
        TriangleShape s = sampler.shape(10000);
        MetricMatrix k = metric_kh(s);
        CHECK(dist2(k, B, C) == s.sb() + s.sc());
        CHECK(dist2(k, C, A) == s.sc() + s.sa());
        CHECK(dist2(k, A, B) == s.sa() + s.sb());
    }
}

TEST_CASE("gauge invariance of inner products") {
    Sampler sampler(19);
    TriangleShape s = sampler.shape(1000);
    MetricMatrix kh = metric_kh(s);
    for (int i = 0; i < 100; ++i) {
        MetricMatrix shifted = kh + gauge(sampler.rational(1000, 1000, true),
                                          sampler.rational(1000, 1000, true),
                                          sampler.rational(1000, 1000, true));
        BaryPoint p = sampler.finite_point(), q = sampler.finite_point();
        BaryPoint r = sampler.finite_point(), t = sampler.finite_point();
        CHECK(inner_product(shifted, p, q, r, t) == inner_product(kh, p, q, r, t));
    }
}

TEST_CASE("bilinearity and symmetry of the inner product") {
    Sampler sampler(23);
    TriangleShape s = sampler.shape(1000);
    MetricMatrix k = metric_kh(s);
    for (int i = 0; i < 50; ++i) {
        BaryPoint p = sampler.finite_point(), q = sampler.finite_point();
        BaryPoint r = sampler.finite_point(), t = sampler.finite_point();
        CHECK(inner_product(k, p, q, r, t) == inner_product(k, r, t, p, q));
    }
}

TEST_CASE("perpendicularity") {
    TriangleShape right(5, 4, 3);
    MetricMatrix k = metric_kh(right);
    CHECK(is_perpendicular(k, A, B, A, C));

    TriangleShape eq(2, 2, 2);
    CHECK_FALSE(is_perpendicular(metric_kh(eq), A, B, A, C));
    CHECK_THROWS_AS((is_perpendicular(k, A, A, B, C)), ZeroVector);

    // altitude direction: (B - C) is perpendicular to (H - A) on any shape
    Sampler sampler(29);
    for (int i = 0; i < 50; ++i) {
        TriangleShape s = sampler.shape(1000);
        BaryPoint h = orthocenter(s);
        if (h == A) continue;  // right angle at A: zero vector
        CHECK(is_perpendicular(metric_kh(s), B, C, A, h));
    }
}

TEST_CASE("bracket determinant") {
    CHECK(bracket(A, B, C) == Rational(1));
    CHECK(bracket(A, C, B) == Rational(-1));

    Sampler sampler(31);
    for (int i = 0; i < 50; ++i) {
        TriangleShape s = sampler.shape(1000);
        // G, O, H are collinear
        CHECK(bracket(centroid(s), circumcenter(s), orthocenter(s)) == Rational(0));
        // antisymmetry under transpositions
        BaryPoint p = sampler.finite_point(), q = sampler.finite_point(),
                  r = sampler.finite_point();
        Rational br = bracket(p, q, r);
        CHECK(bracket(q, p, r) == -br);
        CHECK(bracket(p, r, q) == -br);
        CHECK(bracket(r, q, p) == -br);
    }
}

TEST_CASE("cross product coefficient") {
    CHECK(cross_product_coeff(A, B, A, C) == Rational(1));
    CHECK(cross_product_coeff(A, B, C, B) == Rational(-1));
    // midsegment parallel to the base
    BaryPoint mac = midpoint(A, C), mbc = midpoint(B, C);
    CHECK(cross_product_coeff(A, B, mac, mbc) == Rational(0));
    // direction arguments give the same value
    CHECK(cross_product_coeff(Displacement(A, B), Displacement(A, C)) == Rational(1));
    BaryPoint d = BaryPoint::direction(A, C);
    BaryPoint d5 = BaryPoint::infinite(Rational(5) * d.triple());
    CHECK(cross_product_coeff(Displacement(A, B), Displacement(d5)) == Rational(5));
}

TEST_CASE("oriented angle cotangent") {
    TriangleShape right(5, 4, 3);
    AngleCot bac = cot_angle(right, B, A, C);
    CHECK(bac.ip() == Rational(0));
    CHECK(bac.bracket() == Rational(1));
    CHECK(bac.value() == doctest::Approx(0.0));

    TriangleShape eq(2, 2, 2);
    AngleCot sixty = cot_angle(eq, B, A, C);
    CHECK(sixty.ip() == Rational(2));
    CHECK(sixty.bracket() == Rational(1));
    CHECK(sixty.s2() == Rational(3));
    CHECK(sixty.value() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    // reversing orientation negates the bracket and flips the sign
    AngleCot rev = cot_angle(eq, C, A, B);
    CHECK(rev.bracket() == -sixty.bracket());
    CHECK(rev.ip() == sixty.ip());
    CHECK(rev.value() == doctest::Approx(-sixty.value()).epsilon(1e-12));

    CHECK_THROWS_AS((cot_angle(eq, A, A, B)), ZeroVector);

    // exact comparison: at the base of (6,5,5), angle B equals angle C
    TriangleShape iso(6, 5, 5);
    AngleCot at_b = cot_angle(iso, C, B, A);
    AngleCot at_c = cot_angle(iso, A, C, B);
    CHECK(at_b.compare(at_c) == 0);
    AngleCot at_a = cot_angle(iso, B, A, C);  // apex angle is larger, cot smaller
    CHECK(at_a.compare(at_b) < 0);
    CHECK(at_b.compare(at_a) > 0);
}

TEST_CASE("angle-level Pythagorean identity") {
    Sampler sampler(37);
    for (int i = 0; i < 100; ++i) {
        TriangleShape s = sampler.shape(1000);
        MetricMatrix k = metric_kh(s);
        BaryPoint p = sampler.finite_point(), q = sampler.finite_point(),
                  r = sampler.finite_point();
        if (p == q || p == r) continue;
        AngleCot cot = cot_angle(s, q, p, r);
        Rational lhs = cot.ip() * cot.ip() +
                       Rational(4) * cot.s2() * cot.bracket() * cot.bracket();
        CHECK(lhs == dist2(k, p, q) * dist2(k, p, r));
    }
}

TEST_CASE("side lines and joins") {
    TriangleShape right(5, 4, 3);
    Line bc = side_line(right, Vertex::A);
    CHECK(bc.contains(B));
    CHECK(bc.contains(C));
    CHECK_FALSE(bc.contains(A));
    CHECK(bc == Line(1, 0, 0));

    // A K_H row degenerates for the right shape (S_A = 0), but the
    // combinatorial side line is still alpha = 0; for non-right shapes the
    // vertex row spans the same line.
    TriangleShape iso(6, 5, 5);
    MetricMatrix k = metric_kh(iso);
    Triple row = k.apply(BaryPoint::vertex_a().triple());
    Line via_row(row[0], row[1], row[2]);
    CHECK(via_row.equivalent(side_line(iso, Vertex::A)));
    CHECK(side_line(iso, Vertex::B).equivalent(Line(0, 2, 0)));

    CHECK(line_through(A, B) == Line(0, 0, 1));
    CHECK_THROWS_AS((line_through(A, A)), IdenticalPoints);
}

TEST_CASE("line intersection") {
    Line beta0(0, 1, 0), gamma0(0, 0, 1);
    CHECK(intersect(beta0, gamma0) == A);
    CHECK_THROWS_AS((intersect(beta0, Line(0, 5, 0))), IdenticalLines);

    // parallels meet at infinity: AB and the midsegment of the other two sides
    Line ab = line_through(A, B);
    Line mid = line_through(midpoint(A, C), midpoint(B, C));
    BaryPoint meet = intersect(ab, mid);
    CHECK(meet.is_infinite());
    CHECK(ab.contains(meet));
    CHECK(mid.contains(meet));
    // the meet is the direction of AB
    CHECK(cross_product_coeff(Displacement(meet), Displacement(A, B)) == Rational(0));

    CHECK(Line(0, 5, 5).canonical() == Line(0, 1, 1));
}
