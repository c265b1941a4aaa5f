#include "bary/cli.hpp"

#include "bary/centers.hpp"
#include "bary/circles.hpp"
#include "bary/errors.hpp"
#include "bary/kernel.hpp"
#include "bary/metric.hpp"
#include "bary/oracle.hpp"
#include "bary/sampling.hpp"
#include "bary/shape.hpp"
#include "bary/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

namespace bary {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct RunConfig {
    std::string command;
    std::vector<std::string> sides;   // three rational strings
    std::vector<double> vertices;     // six reals, lossy input path
    std::string from, to, at;         // point names for distance/angle
    std::uint64_t seed = 0;
    std::int64_t count = 100;
    double tol = 1e-9;
    std::string format = "text";
};

json rational_json(const Rational& r) { return r.str(); }

json triple_json(const BaryPoint& p) {
    return json::array({p.alpha().str(), p.beta().str(), p.gamma().str()});
}

std::string triple_text(const BaryPoint& p) {
    return "(" + p.alpha().str() + ", " + p.beta().str() + ", " + p.gamma().str() + ")";
}

json shape_json(const TriangleShape& s) {
    return json{{"a", s.a().str()}, {"b", s.b().str()}, {"c", s.c().str()}};
}

/// Builds the shape from --sides (exact) or --vertices (lossy: float side
/// lengths are replaced by their best rational approximants with denominator
/// <= 10^6 before entering the exact kernel).
TriangleShape make_shape(const RunConfig& cfg) {
    if (!cfg.sides.empty()) {
        return TriangleShape(Rational::from_string(cfg.sides[0]),
                             Rational::from_string(cfg.sides[1]),
                             Rational::from_string(cfg.sides[2]));
    }
    const auto& v = cfg.vertices;
    CartesianPoint pa{v[0], v[1]}, pb{v[2], v[3]}, pc{v[4], v[5]};
    double a = std::hypot(pc.x - pb.x, pc.y - pb.y);
    double b = std::hypot(pa.x - pc.x, pa.y - pc.y);
    double c = std::hypot(pb.x - pa.x, pb.y - pa.y);
    constexpr std::int64_t kMaxDen = 1000000;
    return TriangleShape(Rational::approx_from_double(a, kMaxDen),
                         Rational::approx_from_double(b, kMaxDen),
                         Rational::approx_from_double(c, kMaxDen));
}

BaryPoint parse_point(const TriangleShape& shape, const std::string& spec) {
    std::string name = spec;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char ch) { return std::toupper(ch); });
    if (name == "A") return BaryPoint::vertex_a();
    if (name == "B") return BaryPoint::vertex_b();
    if (name == "C") return BaryPoint::vertex_c();
    if (name == "G") return centroid(shape);
    if (name == "H") return orthocenter(shape);
    if (name == "O") return circumcenter(shape);
    if (name == "N") return nine_point_center(shape);
    if (name == "I") return incenter(shape);
    if (name == "IA") return excenter(shape, Vertex::A);
    if (name == "IB") return excenter(shape, Vertex::B);
    if (name == "IC") return excenter(shape, Vertex::C);
    // otherwise "u,v,w": homogeneous rational triple, normalized by its sum
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3)
        throw std::invalid_argument("unknown point '" + spec +
                                    "' (expected a center name or 'u,v,w')");
    return BaryPoint::finite(Rational::from_string(parts[0]), Rational::from_string(parts[1]),
                             Rational::from_string(parts[2]));
}

void emit(const RunConfig& cfg, std::ostream& out, const json& doc, const std::string& text) {
    if (cfg.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << text;
}

int cmd_centers(const RunConfig& cfg, std::ostream& out) {
    TriangleShape shape = make_shape(cfg);
    CenterSet cs = compute_centers(shape);
    json results;
    results["G"] = triple_json(cs.g);
    results["H"] = triple_json(cs.h);
    results["O"] = triple_json(cs.o);
    results["N"] = triple_json(cs.n);
    results["I"] = triple_json(cs.i);
    results["Ia"] = triple_json(cs.excenters[0]);
    results["Ib"] = triple_json(cs.excenters[1]);
    results["Ic"] = triple_json(cs.excenters[2]);
    results["R2"] = rational_json(cs.circumradius2);
    results["r2"] = rational_json(cs.inradius2);
    results["ra2"] = rational_json(cs.exradius2[0]);
    results["rb2"] = rational_json(cs.exradius2[1]);
    results["rc2"] = rational_json(cs.exradius2[2]);
    results["Rr"] = rational_json(cs.circum_in_product);
    results["Rra"] = rational_json(cs.circum_ex_product[0]);
    results["Rrb"] = rational_json(cs.circum_ex_product[1]);
    results["Rrc"] = rational_json(cs.circum_ex_product[2]);
    json doc{{"command", "centers"},
             {"shape", shape_json(shape)},
             {"results", results},
             {"passed", true},
             {"seed", cfg.seed}};

    std::ostringstream text;
    text << "shape: a=" << shape.a() << " b=" << shape.b() << " c=" << shape.c() << "\n";
    text << "G  = " << triple_text(cs.g) << "\n";
    text << "H  = " << triple_text(cs.h) << "\n";
    text << "O  = " << triple_text(cs.o) << "\n";
    text << "N  = " << triple_text(cs.n) << "\n";
    text << "I  = " << triple_text(cs.i) << "\n";
    text << "Ia = " << triple_text(cs.excenters[0]) << "\n";
    text << "Ib = " << triple_text(cs.excenters[1]) << "\n";
    text << "Ic = " << triple_text(cs.excenters[2]) << "\n";
    text << "R2 = " << cs.circumradius2 << "  r2 = " << cs.inradius2 << "\n";
    text << "ra2 = " << cs.exradius2[0] << "  rb2 = " << cs.exradius2[1]
         << "  rc2 = " << cs.exradius2[2] << "\n";
    text << "Rr = " << cs.circum_in_product << "  Rra = " << cs.circum_ex_product[0]
         << "  Rrb = " << cs.circum_ex_product[1] << "  Rrc = " << cs.circum_ex_product[2]
         << "\n";
    emit(cfg, out, doc, text.str());
    return kExitOk;
}

int cmd_distance(const RunConfig& cfg, std::ostream& out) {
    TriangleShape shape = make_shape(cfg);
    BaryPoint p = parse_point(shape, cfg.from);
    BaryPoint q = parse_point(shape, cfg.to);
    Rational d2 = dist2(metric_kh(shape), p, q);
    double approx = std::sqrt(d2.to_double());
    json doc{{"command", "distance"},
             {"shape", shape_json(shape)},
             {"results",
              {{"from", cfg.from},
               {"to", cfg.to},
               {"dist2", d2.str()},
               {"distance_approx", approx}}},
             {"passed", true},
             {"seed", cfg.seed}};
    std::ostringstream text;
    text << "dist2(" << cfg.from << ", " << cfg.to << ") = " << d2 << "  (distance approx "
         << approx << ")\n";
    emit(cfg, out, doc, text.str());
    return kExitOk;
}

int cmd_angle(const RunConfig& cfg, std::ostream& out) {
    TriangleShape shape = make_shape(cfg);
    BaryPoint q = parse_point(shape, cfg.from);
    BaryPoint p = parse_point(shape, cfg.at);
    BaryPoint r = parse_point(shape, cfg.to);
    AngleCot cot = cot_angle(shape, q, p, r);
    double value = cot.value();
    double degrees = std::atan2(1.0, value) * 180.0 / 3.14159265358979323846;
    json results{{"at", cfg.at},
                 {"from", cfg.from},
                 {"to", cfg.to},
                 {"ip", cot.ip().str()},
                 {"bracket", cot.bracket().str()},
                 {"s2", cot.s2().str()},
                 {"degenerate", cot.is_degenerate()}};
    if (!cot.is_degenerate()) {
        results["cot_approx"] = value;
        results["degrees_approx"] = degrees;
    }
    json doc{{"command", "angle"},
             {"shape", shape_json(shape)},
             {"results", results},
             {"passed", true},
             {"seed", cfg.seed}};
    std::ostringstream text;
    text << "angle(" << cfg.from << " -> " << cfg.at << " -> " << cfg.to << "): ip = " << cot.ip()
         << ", bracket = " << cot.bracket() << ", s2 = " << cot.s2();
    if (cot.is_degenerate())
        text << "  (degenerate: collinear)\n";
    else
        text << "  cot approx " << value << " (" << degrees << " deg)\n";
    emit(cfg, out, doc, text.str());
    return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    TriangleShape shape = make_shape(cfg);
    std::vector<TheoremReport> reports = run_all(shape, cfg.seed);
    std::size_t passed = 0;
    json arr = json::array();
    std::ostringstream text;
    for (const TheoremReport& rep : reports) {
        if (rep.passed) ++passed;
        json lhs = json::array(), rhs = json::array();
        for (const Rational& v : rep.lhs) lhs.push_back(v.str());
        for (const Rational& v : rep.rhs) rhs.push_back(v.str());
        arr.push_back(json{{"name", rep.name},
                           {"passed", rep.passed},
                           {"lhs", lhs},
                           {"rhs", rhs},
                           {"detail", rep.detail}});
        text << (rep.passed ? "[pass] " : "[FAIL] ") << rep.name;
        if (!rep.passed) text << ": " << rep.detail;
        text << "\n";
    }
    bool all = passed == reports.size();
    text << passed << "/" << reports.size() << " passed\n";
    json doc{{"command", "check"},
             {"shape", shape_json(shape)},
             {"results", arr},
             {"passed", all},
             {"seed", cfg.seed}};
    emit(cfg, out, doc, text.str());
    return all ? kExitOk : kExitVerificationFailure;
}

struct FuzzFailure {
    std::int64_t trial;
    std::uint64_t seed;
    TriangleShape shape;
    std::string reason;
};

/// One fuzz trial: the full exact catalog plus kernel-vs-oracle comparisons
/// under canonical and random placements. Returns an explanation on failure.
std::optional<std::string> fuzz_trial(const TriangleShape& shape, std::uint64_t trial_seed,
                                      double tol) {
    for (const TheoremReport& rep : run_all(shape, derive_seed(trial_seed, 1)))
        if (!rep.passed) return "exact check '" + rep.name + "' failed: " + rep.detail;

    MetricMatrix k = metric_kh(shape);
    double root_area = std::sqrt(shape.squared_area().to_double());
    Sampler sampler(derive_seed(trial_seed, 2));
    Embedding embs[2] = {embed(shape),
                         embed(shape, Placement::Random, derive_seed(trial_seed, 3))};
    for (int query = 0; query < 10; ++query) {
        BaryPoint p = sampler.conditioned_point();
        BaryPoint q = sampler.conditioned_point();
        BaryPoint r = sampler.conditioned_point();
        BaryPoint t = sampler.conditioned_point();
        // Well-separated probes keep the double-precision reference
        // meaningful at the requested tolerance.
        const Rational quarter(1, 4);
        if (abs(bracket(p, q, r)) < quarter || p == q || r == t || p == r) {
            --query;  // resample; the stream advances so this terminates
            continue;
        }
        Rational kernel_d2 = dist2(k, p, q);
        Rational kernel_dot = inner_product(k, p, q, r, t);
        Rational kernel_br = bracket(p, q, r);
        Rational kernel_cross = cross_product_coeff(p, q, r, t);
        AngleCot kernel_cot = cot_angle(shape, q, p, r);
        for (const Embedding& emb : embs) {
            if (!compare(kernel_d2, oracle_dist2(emb, p, q), tol))
                return "dist2 mismatch vs oracle (" + emb.provenance + ")";
            if (!compare(kernel_dot, oracle_dot(emb, p, q, r, t), tol))
                return "inner product mismatch vs oracle (" + emb.provenance + ")";
            double area = oracle_area(emb, p, q, r);
            if (std::fabs(kernel_br.to_double() * root_area - area) >
                tol * std::max(1.0, std::fabs(area)))
                return "area bracket mismatch vs oracle (" + emb.provenance + ")";
            double cross = oracle_cross(emb, p, q, r, t);
            if (std::fabs(kernel_cross.to_double() * 2.0 * root_area - cross) >
                tol * std::max(1.0, std::fabs(cross)))
                return "cross product mismatch vs oracle (" + emb.provenance + ")";
            double cot = oracle_cot(emb, q, p, r);
            if (std::fabs(kernel_cot.value() - cot) > tol * std::max(1.0, std::fabs(cot)))
                return "cotangent mismatch vs oracle (" + emb.provenance + ")";
        }
    }
    return std::nullopt;
}

int cmd_fuzz(const RunConfig& cfg, std::ostream& out) {
    std::int64_t passed = 0;
    std::optional<FuzzFailure> first_failure;
    for (std::int64_t trial = 0; trial < cfg.count; ++trial) {
        std::uint64_t trial_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial));
        Sampler sampler(trial_seed);
        TriangleShape shape = sampler.conditioned_shape();
        std::optional<std::string> failure = fuzz_trial(shape, trial_seed, cfg.tol);
        if (!failure) {
            ++passed;
        } else if (!first_failure) {
            first_failure = FuzzFailure{trial, trial_seed, shape, *failure};
        }
    }
    bool all = passed == cfg.count;
    json failure_json = nullptr;
    std::ostringstream text;
    text << passed << "/" << cfg.count << " shapes passed\n";
    if (first_failure) {
        failure_json = json{{"trial", first_failure->trial},
                            {"seed", first_failure->seed},
                            {"shape", shape_json(first_failure->shape)},
                            {"reason", first_failure->reason}};
        text << "first failure: trial " << first_failure->trial << " (seed "
             << first_failure->seed << "), shape (" << first_failure->shape.a() << ", "
             << first_failure->shape.b() << ", " << first_failure->shape.c()
             << "): " << first_failure->reason << "\n";
    }
    json doc{{"command", "fuzz"},
             {"shape", first_failure ? shape_json(first_failure->shape) : json(nullptr)},
             {"results",
              {{"count", cfg.count}, {"passed_count", passed}, {"first_failure", failure_json}}},
             {"passed", all},
             {"seed", cfg.seed}};
    emit(cfg, out, doc, text.str());
    return all ? kExitOk : kExitVerificationFailure;
}

void add_shape_options(CLI::App* cmd, RunConfig& cfg) {
    auto* sides = cmd->add_option("--sides", cfg.sides,
                                  "side lengths a b c as rationals, e.g. 5 4 3 or 7/2 3 4")
                      ->expected(3);
    cmd->add_option("--vertices", cfg.vertices,
                    "Cartesian vertices xA yA xB yB xC yC (lossy: rounded to rationals)")
        ->expected(6)
        ->excludes(sides);
}

void add_format_option(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"exact barycentric triangle geometry calculator", "barycalc"};
    app.require_subcommand(1);

    CLI::App* centers_cmd = app.add_subcommand("centers", "classical centers and radii");
    add_shape_options(centers_cmd, cfg);
    add_format_option(centers_cmd, cfg);

    CLI::App* distance_cmd = app.add_subcommand("distance", "exact squared distance");
    add_shape_options(distance_cmd, cfg);
    add_format_option(distance_cmd, cfg);
    distance_cmd->add_option("--from", cfg.from, "point name or 'u,v,w'")->required();
    distance_cmd->add_option("--to", cfg.to, "point name or 'u,v,w'")->required();

    CLI::App* angle_cmd = app.add_subcommand("angle", "exact oriented-angle cotangent");
    add_shape_options(angle_cmd, cfg);
    add_format_option(angle_cmd, cfg);
    angle_cmd->add_option("--at", cfg.at, "angle vertex")->required();
    angle_cmd->add_option("--from", cfg.from, "first ray endpoint")->required();
    angle_cmd->add_option("--to", cfg.to, "second ray endpoint")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "run the exact theorem catalog");
    add_shape_options(check_cmd, cfg);
    add_format_option(check_cmd, cfg);
    check_cmd->add_option("--seed", cfg.seed, "probe-point seed");

    CLI::App* fuzz_cmd =
        app.add_subcommand("fuzz", "random triangles: exact catalog + oracle comparison");
    add_format_option(fuzz_cmd, cfg);
    fuzz_cmd->add_option("--count", cfg.count, "number of trials")
        ->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--seed", cfg.seed, "master seed");
    fuzz_cmd->add_option("--tol", cfg.tol, "oracle comparison tolerance")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (centers_cmd->parsed() || distance_cmd->parsed() || angle_cmd->parsed() ||
            check_cmd->parsed()) {
            if (cfg.sides.empty() && cfg.vertices.empty()) {
                err << "error: one of --sides or --vertices is required\n";
                return kExitUsage;
            }
        }
        if (centers_cmd->parsed()) return cmd_centers(cfg, out);
        if (distance_cmd->parsed()) return cmd_distance(cfg, out);
        if (angle_cmd->parsed()) return cmd_angle(cfg, out);
        if (check_cmd->parsed()) return cmd_check(cfg, out);
        return cmd_fuzz(cfg, out);
    } catch (const DegenerateTriangle& e) {
        err << "error: degenerate triangle: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace bary
