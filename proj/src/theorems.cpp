#include "bary/theorems.hpp"

#include "bary/centers.hpp"
#include "bary/circles.hpp"
#include "bary/errors.hpp"
#include "bary/kernel.hpp"
#include "bary/metric.hpp"
#include "bary/sampling.hpp"

#include <functional>
#include <utility>

namespace bary {

namespace {

class ReportBuilder {
public:
    ReportBuilder(std::string name, const TriangleShape& shape)
        : rep_{std::move(name), shape, false, {}, {}, {}} {}

    void equal(const std::string& label, Rational lhs, Rational rhs) {
        labels_.push_back(label);
        rep_.lhs.push_back(std::move(lhs));
        rep_.rhs.push_back(std::move(rhs));
    }

    void equal_triple(const std::string& label, const Triple& lhs, const Triple& rhs) {
        static const char* comp[3] = {"alpha", "beta", "gamma"};
        for (int i = 0; i < 3; ++i) equal(label + "." + comp[i], lhs[i], rhs[i]);
    }

    TheoremReport finish() {
        rep_.passed = true;
        for (std::size_t i = 0; i < rep_.lhs.size(); ++i) {
            if (rep_.lhs[i] != rep_.rhs[i]) {
                rep_.passed = false;
                rep_.detail = labels_[i] + ": " + rep_.lhs[i].str() + " != " + rep_.rhs[i].str();
                break;
            }
        }
        return std::move(rep_);
    }

private:
    TheoremReport rep_;
    std::vector<std::string> labels_;
};

constexpr Vertex kVertices[3] = {Vertex::A, Vertex::B, Vertex::C};

const char* vertex_name(Vertex v) {
    switch (v) {
        case Vertex::A: return "A";
        case Vertex::B: return "B";
        default: return "C";
    }
}

const BaryPoint& vertex_point(Vertex v) {
    switch (v) {
        case Vertex::A: return BaryPoint::vertex_a();
        case Vertex::B: return BaryPoint::vertex_b();
        default: return BaryPoint::vertex_c();
    }
}

using CheckFn = std::function<TheoremReport(const TriangleShape&, std::span<const BaryPoint>)>;

TheoremReport check_euler_line(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("euler_line", shape);
    CenterSet cs = compute_centers(shape);
    b.equal_triple("3G = 2O + H", Rational(3) * cs.g.triple(),
                   Rational(2) * cs.o.triple() + cs.h.triple());
    return b.finish();
}

TheoremReport check_centroid_min(const TriangleShape& shape, std::span<const BaryPoint> probes) {
    ReportBuilder b("centroid_min", shape);
    MetricMatrix k = metric_kh(shape);
    BaryPoint g = centroid(shape);
    const BaryPoint& va = BaryPoint::vertex_a();
    const BaryPoint& vb = BaryPoint::vertex_b();
    const BaryPoint& vc = BaryPoint::vertex_c();
    Rational at_g = dist2(k, g, va) + dist2(k, g, vb) + dist2(k, g, vc);
    int idx = 0;
    for (const BaryPoint& x : probes) {
        Rational at_x = dist2(k, x, va) + dist2(k, x, vb) + dist2(k, x, vc);
        b.equal("probe " + std::to_string(idx++), at_x, at_g + Rational(3) * dist2(k, g, x));
    }
    return b.finish();
}

TheoremReport check_h_kernel(const TriangleShape& shape, std::span<const BaryPoint> probes) {
    ReportBuilder b("h_kernel", shape);
    MetricMatrix k = metric_kh(shape);
    Triple h = orthocenter(shape).triple();
    Rational hkh = k.form(h, h);
    int idx = 0;
    for (const BaryPoint& x : probes)
        b.equal("probe " + std::to_string(idx++), k.form(h, x.triple()), hkh);
    return b.finish();
}

TheoremReport check_oko_hkh(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("oko_hkh", shape);
    MetricMatrix k = metric_kh(shape);
    Triple o = circumcenter(shape).triple();
    Triple h = orthocenter(shape).triple();
    b.equal("OKO + HKH = R^2", k.form(o, o) + k.form(h, h), circumradius2(shape));
    return b.finish();
}

TheoremReport check_euler_formula(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("euler_formula", shape);
    MetricMatrix k = metric_kh(shape);
    Rational lhs = dist2(k, circumcenter(shape), incenter(shape));
    b.equal("|OI|^2 = R^2 - 2Rr", lhs,
            circumradius2(shape) - Rational(2) * circum_in_product(shape));
    return b.finish();
}

TheoremReport check_euler_inequality(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("euler_inequality", shape);
    // Restated on squares: R^2 - 4r^2 >= 0, encoded as margin == max(margin, 0).
    Rational margin = circumradius2(shape) - Rational(4) * inradius2(shape);
    b.equal("R^2 - 4r^2 >= 0", margin, margin.sign() >= 0 ? margin : Rational(0));
    return b.finish();
}

TheoremReport check_oia_formula(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("oia_formula", shape);
    MetricMatrix k = metric_kh(shape);
    BaryPoint o = circumcenter(shape);
    Rational r2 = circumradius2(shape);
    for (Vertex v : kVertices) {
        Rational lhs = dist2(k, o, excenter(shape, v));
        b.equal(std::string("|OI_") + vertex_name(v) + "|^2", lhs,
                r2 + Rational(2) * circum_ex_product(shape, v));
    }
    return b.finish();
}

TheoremReport check_feuerbach_inner(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("feuerbach_inner", shape);
    MetricMatrix k = metric_kh(shape);
    BaryPoint n = nine_point_center(shape);
    BaryPoint i = incenter(shape);
    Rational lhs = dist2(k, n, i);
    Rational rhs = circumradius2(shape) / Rational(4) - circum_in_product(shape) + inradius2(shape);
    b.equal("|NI|^2 = (R/2 - r)^2", lhs, rhs);
    if (n == i) {
        // Equilateral: R/2 = r, and the tangency degenerates to coincidence.
        b.equal("nine-point circle coincides with incircle",
                nine_point_circle(shape).radius2(), incircle(shape).radius2());
    } else {
        Tangency t = classify_tangency(nine_point_circle(shape), incircle(shape));
        b.equal("internally tangent", Rational(t == Tangency::InternallyTangent ? 1 : 0),
                Rational(1));
    }
    return b.finish();
}

TheoremReport check_feuerbach_outer(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("feuerbach_outer", shape);
    MetricMatrix k = metric_kh(shape);
    BaryPoint n = nine_point_center(shape);
    Circle npc = nine_point_circle(shape);
    Rational quarter_r2 = circumradius2(shape) / Rational(4);
    for (Vertex v : kVertices) {
        Rational lhs = dist2(k, n, excenter(shape, v));
        Rational rhs = quarter_r2 + circum_ex_product(shape, v) + exradius2(shape, v);
        b.equal(std::string("|NI_") + vertex_name(v) + "|^2 = (R/2 + r_ex)^2", lhs, rhs);
        Tangency t = classify_tangency(npc, excircle(shape, v));
        b.equal(std::string("externally tangent to excircle ") + vertex_name(v),
                Rational(t == Tangency::ExternallyTangent ? 1 : 0), Rational(1));
    }
    return b.finish();
}

TheoremReport check_median_ratio(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("median_ratio", shape);
    Triple g = centroid(shape).triple();
    for (Vertex v : kVertices) {
        const BaryPoint& p = vertex_point(v);
        const BaryPoint& q = vertex_point(kVertices[(static_cast<int>(v) + 1) % 3]);
        const BaryPoint& r = vertex_point(kVertices[(static_cast<int>(v) + 2) % 3]);
        b.equal_triple(std::string("3G - ") + vertex_name(v) + " = 2 midpoint",
                       Rational(3) * g - p.triple(),
                       Rational(2) * midpoint(q, r).triple());
    }
    return b.finish();
}

TheoremReport check_altitude_concurrency(const TriangleShape& shape,
                                         std::span<const BaryPoint> probes) {
    ReportBuilder b("altitude_concurrency", shape);
    MetricMatrix k = metric_kh(shape);
    const Triple a = BaryPoint::vertex_a().triple();
    const Triple bb = BaryPoint::vertex_b().triple();
    const Triple c = BaryPoint::vertex_c().triple();
    int idx = 0;
    for (const BaryPoint& px : probes) {
        const Triple& x = px.triple();
        Rational sum = k.form(bb - c, x - a) + k.form(c - a, x - bb) + k.form(a - bb, x - c);
        b.equal("probe " + std::to_string(idx++), sum, Rational(0));
    }
    return b.finish();
}

TheoremReport check_side_relations(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("side_relations", shape);
    b.equal("a^2 = S_B + S_C", shape.a() * shape.a(), shape.sb() + shape.sc());
    b.equal("b^2 = S_C + S_A", shape.b() * shape.b(), shape.sc() + shape.sa());
    b.equal("c^2 = S_A + S_B", shape.c() * shape.c(), shape.sa() + shape.sb());
    return b.finish();
}

TheoremReport check_vertex_products(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("vertex_products", shape);
    MetricMatrix k = metric_kh(shape);
    for (Vertex v : kVertices) {
        const Triple& p = vertex_point(v).triple();
        b.equal(std::string(vertex_name(v)) + "K" + vertex_name(v) + " = S_" + vertex_name(v),
                k.form(p, p), shape.conway_symbol(v));
        Vertex w = kVertices[(static_cast<int>(v) + 1) % 3];
        b.equal(std::string(vertex_name(v)) + "K" + vertex_name(w) + " = 0",
                k.form(p, vertex_point(w).triple()), Rational(0));
    }
    return b.finish();
}

TheoremReport check_incircle_ids(const TriangleShape& shape, std::span<const BaryPoint>) {
    ReportBuilder b("incircle_ids", shape);
    MetricMatrix k = metric_kh(shape);
    Triple g3 = Rational(3) * centroid(shape).triple();
    Triple i = incenter(shape).triple();
    Rational r2 = inradius2(shape);
    Rational rr = circum_in_product(shape);
    b.equal("IKI = 2r^2", k.form(i, i), Rational(2) * r2);
    b.equal("3GKI = 2Rr + 2r^2", k.form(g3, i), Rational(2) * rr + Rational(2) * r2);
    for (Vertex v : kVertices) {
        Triple ex = excenter(shape, v).triple();
        Rational ra2 = exradius2(shape, v);
        Rational rra = circum_ex_product(shape, v);
        b.equal(std::string("I_") + vertex_name(v) + "KI_" + vertex_name(v) + " = 2r_ex^2",
                k.form(ex, ex), Rational(2) * ra2);
        b.equal(std::string("3GKI_") + vertex_name(v) + " = -2Rr_ex + 2r_ex^2",
                k.form(g3, ex), Rational(-2) * rra + Rational(2) * ra2);
    }
    return b.finish();
}

TheoremReport check_nine_point_membership(const TriangleShape& shape,
                                          std::span<const BaryPoint>) {
    ReportBuilder b("nine_point_membership", shape);
    Circle npc = nine_point_circle(shape);
    BaryPoint h = orthocenter(shape);
    for (Vertex v : kVertices) {
        const BaryPoint& p = vertex_point(v);
        const BaryPoint& q = vertex_point(kVertices[(static_cast<int>(v) + 1) % 3]);
        const BaryPoint& r = vertex_point(kVertices[(static_cast<int>(v) + 2) % 3]);
        b.equal(std::string("side midpoint opposite ") + vertex_name(v),
                npc.power(midpoint(q, r)), Rational(0));
        b.equal(std::string("altitude foot from ") + vertex_name(v),
                npc.power(foot_of_perpendicular(shape, p, q, r)), Rational(0));
        b.equal(std::string("orthocenter midpoint of ") + vertex_name(v),
                npc.power(midpoint(p, h)), Rational(0));
    }
    return b.finish();
}

const std::vector<std::pair<std::string, CheckFn>>& catalog() {
    static const std::vector<std::pair<std::string, CheckFn>> entries = {
        {"euler_line", check_euler_line},
        {"centroid_min", check_centroid_min},
        {"h_kernel", check_h_kernel},
        {"oko_hkh", check_oko_hkh},
        {"euler_formula", check_euler_formula},
        {"euler_inequality", check_euler_inequality},
        {"oia_formula", check_oia_formula},
        {"feuerbach_inner", check_feuerbach_inner},
        {"feuerbach_outer", check_feuerbach_outer},
        {"median_ratio", check_median_ratio},
        {"altitude_concurrency", check_altitude_concurrency},
        {"side_relations", check_side_relations},
        {"vertex_products", check_vertex_products},
        {"incircle_ids", check_incircle_ids},
        {"nine_point_membership", check_nine_point_membership},
    };
    return entries;
}

std::vector<BaryPoint> default_probes(std::uint64_t seed) {
    std::vector<BaryPoint> probes = {BaryPoint::vertex_a(), BaryPoint::vertex_b(),
                                     BaryPoint::vertex_c(),
                                     BaryPoint::finite(Rational(1, 3), Rational(1, 3), Rational(1, 3))};
    Sampler sampler(seed);
    for (int i = 0; i < 4; ++i) probes.push_back(sampler.finite_point());
    return probes;
}

}  // namespace

const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : catalog()) v.push_back(name);
        return v;
    }();
    return names;
}

TheoremReport check(const std::string& name, const TriangleShape& shape,
                    std::span<const BaryPoint> probes) {
    for (const BaryPoint& p : probes)
        if (!p.is_finite()) throw InfiniteMisuse("probe points must be finite");
    for (const auto& [entry, fn] : catalog()) {
        if (entry == name) {
            if (probes.empty()) {
                std::vector<BaryPoint> defaults = default_probes(0);
                return fn(shape, defaults);
            }
            return fn(shape, probes);
        }
    }
    throw UnknownTheorem("no catalog entry named '" + name + "'");
}

std::vector<TheoremReport> run_all(const TriangleShape& shape, std::uint64_t seed) {
    std::vector<BaryPoint> probes = default_probes(seed);
    std::vector<TheoremReport> reports;
    reports.reserve(catalog().size());
    for (const auto& [name, fn] : catalog()) reports.push_back(fn(shape, probes));
    return reports;
}

}  // namespace bary
