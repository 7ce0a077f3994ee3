#include "zpoly/cli.hpp"

#include "zpoly/cubic_unbounded.hpp"
#include "zpoly/homogeneous.hpp"
#include "zpoly/oracle.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace zpoly {

using ojson = nlohmann::ordered_json;

namespace {

Int parse_int(const ojson& v, const char* what) {
    if (v.is_number_integer()) return Int(v.dump());
    if (!v.is_string()) throw Error(Errc::ParseError, std::string(what) + " must be an integer string");
    Rat r = parse_rat(v.get<std::string>());
    if (r.get_den() != 1) throw Error(Errc::ParseError, std::string(what) + " must be an integer: " + v.get<std::string>());
    return r.get_num();
}

SolveMode parse_mode(const std::string& s) {
    if (s == "auto") return SolveMode::Auto;
    if (s == "cubic") return SolveMode::Cubic;
    if (s == "homogeneous") return SolveMode::Homogeneous;
    throw Error(Errc::ParseError, "unknown mode: " + s);
}

const char* mode_name(SolveMode m) {
    switch (m) {
        case SolveMode::Auto: return "auto";
        case SolveMode::Cubic: return "cubic";
        case SolveMode::Homogeneous: return "homogeneous";
    }
    return "?";
}

ojson num(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ojson rows_json(const Polyhedron2& p) {
    ojson rows = ojson::array();
    for (const auto& r : p.rows()) rows.push_back({{"a", to_string(r.a)}, {"b", to_string(r.b)}, {"c", to_string(r.c)}});
    return rows;
}

Polyhedron2 effective_region(const Problem& prob, const RunOptions& opt) {
    Polyhedron2 p = prob.p;
    if (opt.box_radius) p = p.intersect(Polyhedron2::square(Rat(*opt.box_radius)));
    return p;
}

// Resolves auto mode: translatable first, then the cubic path for degree at most 3.
SolveMode resolve(const Problem& prob, const RunOptions& opt, const Polyhedron2& p) {
    SolveMode m = opt.mode.value_or(prob.mode);
    if (m != SolveMode::Auto) return m;
    int d = prob.f.degree();
    if (detect_translatable(prob.f) && (p.is_bounded() || d > 3)) return SolveMode::Homogeneous;
    if (d <= 3) return SolveMode::Cubic;
    throw Error(Errc::NotTranslatable, "degree " + std::to_string(d) + " objective is not homogeneous translatable");
}

ojson oracle_check(const BiPoly& f, const Polyhedron2& p, const SolveOutcome& o, const std::optional<Rat>& radius) {
    ojson j;
    try {
        if (o.status == Status::Unbounded) {
            j["checked"] = true;
            j["agrees"] = verify_unbounded(f, p, o.point, o.ray);
            return j;
        }
        Int r;
        if (p.is_bounded())
            r = p.is_empty() ? Int(1) : box_radius(p);
        else if (radius)
            r = 4 * std::max<Int>(ceil_rat(*radius), Int(1));
        else
            throw Error(Errc::UnboundedRegion, "no finite box to enumerate");
        auto exp = brute_force_min(f, p, Polyhedron2::square(Rat(r)));
        j["checked"] = true;
        j["agrees"] = exp.status == o.status && (o.status != Status::Optimal || (exp.value == o.value && exp.point == o.point));
        j["expected"] = ojson::parse(outcome_json(exp));
    } catch (const Error& e) {
        j["checked"] = false;
        j["reason"] = e.what();
    }
    return j;
}

}  // namespace

Problem parse_problem(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw Error(Errc::ParseError, "problem file is not a JSON object");
    Problem prob;
    if (!j.contains("objective") || !j["objective"].is_array() || j["objective"].empty())
        throw Error(Errc::ParseError, "objective must be a nonempty list of monomials");
    for (const auto& m : j["objective"]) {
        if (!m.is_object() || !m.contains("i") || !m.contains("j") || !m.contains("c"))
            throw Error(Errc::ParseError, "monomial needs i, j and c");
        if (!m["i"].is_number_unsigned() || !m["j"].is_number_unsigned())
            throw Error(Errc::ParseError, "monomial exponents must be nonnegative integers");
        prob.f.add_term(m["i"].get<int>(), m["j"].get<int>(), Rat(parse_int(m["c"], "coefficient")));
    }
    if (j.contains("constraints")) {
        if (!j["constraints"].is_array()) throw Error(Errc::ParseError, "constraints must be a list");
        for (const auto& c : j["constraints"]) {
            if (!c.is_object() || !c.contains("a") || !c.contains("b") || !c.contains("c"))
                throw Error(Errc::ParseError, "constraint needs a, b and c");
            prob.p.add(Rat(parse_int(c["a"], "a")), Rat(parse_int(c["b"], "b")), Rat(parse_int(c["c"], "c")));
        }
    }
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw Error(Errc::ParseError, "mode must be a string");
        prob.mode = parse_mode(j["mode"].get<std::string>());
    }
    return prob;
}

std::string run_problem(const Problem& prob, const RunOptions& opt) {
    Polyhedron2 p = effective_region(prob, opt);
    SolveMode m = resolve(prob, opt, p);
    SolveStats st;
    SolveOutcome o;
    if (p.is_empty()) {
        o = SolveOutcome::infeasible();
    } else if (m == SolveMode::Homogeneous) {
        o = solve_homogeneous_bounded(prob.f, p, &st);
        if (o.status == Status::Optimal) st.certified_radius = Rat(box_radius(p));
    } else {
        o = solve_cubic(prob.f, p, &st);
    }
    ojson out = ojson::parse(outcome_json(o));
    out["mode_used"] = mode_name(m);
    out["stats"] = {{"bisection_steps", st.bisection_steps}, {"pieces", st.pieces}};
    if (st.certified_radius) out["certified_radius"] = to_string(*st.certified_radius);
    if (opt.oracle) out["oracle"] = oracle_check(prob.f, p, o, st.certified_radius);
    return out.dump();
}

std::string emit_regions(const Problem& prob, const RunOptions& opt) {
    Polyhedron2 p = effective_region(prob, opt);
    SolveMode m = resolve(prob, opt, p);
    Int r;
    if (opt.box_radius)
        r = *opt.box_radius;
    else if (p.is_bounded() && !p.is_empty())
        r = box_radius(p);
    else
        throw Error(Errc::UnboundedRegion, "regions needs a bounded polyhedron or --box-radius");
    DivisionDescription dd;
    ojson out;
    out["mode_used"] = mode_name(m);
    out["box_radius"] = num(r);
    if (m == SolveMode::Homogeneous) {
        dd = quasi_division(prob.f, r);
    } else {
        if (!opt.omega) throw Error(Errc::ParseError, "cubic regions need --omega");
        dd = dd_cubic(prob.f, *opt.omega, r);
        out["omega"] = to_string(*opt.omega);
    }
    auto pieces = [](const std::vector<Polyhedron2>& v) {
        ojson a = ojson::array();
        for (const auto& q : v) a.push_back({{"rows", rows_json(q)}});
        return a;
    };
    out["box"] = rows_json(dd.box);
    out["convex_side"] = pieces(dd.convex_side);
    out["concave_side"] = pieces(dd.concave_side);
    ojson lines = ojson::array();
    for (const auto& l : dd.lines) lines.push_back({{"a", to_string(l.a)}, {"b", to_string(l.b)}, {"c", to_string(l.c)}});
    out["lines"] = lines;
    return out.dump();
}

int exit_code_for(Errc e) {
    switch (e) {
        case Errc::ParseError: return 2;
        case Errc::Unsupported:
        case Errc::DegreeTooHigh:
        case Errc::NotTranslatable:
        case Errc::NotHomogeneous:
        case Errc::UnboundedRegion:
        case Errc::TooLarge: return 3;
        default: return 1;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer minimization of bivariate polynomials over polyhedra"};
    app.require_subcommand(1);

    std::string path, mode, omega, kind = "cubic";
    long box = 0;
    bool oracle = false;
    uint64_t seed = 0;
    long count = 10, degree = 3, coeff = 9, constraints = 2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", path, "problem file (JSON)")->required();
        sub->add_option("--mode", mode, "auto, cubic or homogeneous")->check(CLI::IsMember({"auto", "cubic", "homogeneous"}));
        sub->add_option("--box-radius", box, "intersect P with [-R, R]^2")->check(CLI::PositiveNumber);
    };
    CLI::App* run = app.add_subcommand("run", "solve a problem file");
    add_common(run);
    run->add_flag("--oracle", oracle, "check the answer against brute force");
    CLI::App* regions = app.add_subcommand("regions", "dump the division description");
    add_common(regions);
    regions->add_option("--omega", omega, "level for cubic dumps, e.g. 1/2");
    CLI::App* orc = app.add_subcommand("oracle", "differential run on generated instances");
    orc->add_option("--seed", seed, "first seed");
    orc->add_option("--count", count, "number of instances")->check(CLI::NonNegativeNumber);
    orc->add_option("--kind", kind, "cubic, homogeneous or unbounded")->check(CLI::IsMember({"cubic", "homogeneous", "unbounded"}));
    orc->add_option("--degree", degree, "total degree");
    orc->add_option("--coeff-bound", coeff, "coefficient bound")->check(CLI::PositiveNumber);
    orc->add_option("--box-radius", box, "box radius")->check(CLI::PositiveNumber);
    orc->add_option("--constraints", constraints, "extra rows per instance")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (orc->parsed()) {
            std::vector<InstanceSpec> specs;
            for (long k = 0; k < count; ++k) {
                InstanceSpec s;
                s.seed = seed + static_cast<uint64_t>(k);
                s.kind = kind == "homogeneous" ? InstanceKind::Homogeneous : InstanceKind::Cubic;
                s.unbounded = kind == "unbounded";
                s.degree = static_cast<int>(degree);
                s.coeff_bound = coeff;
                s.box_radius = box > 0 ? box : 10;
                s.constraint_count = static_cast<int>(constraints);
                specs.push_back(s);
            }
            auto rep = differential_run(specs);
            out << rep.to_text();
            return rep.mismatches() == 0 ? 0 : 1;
        }
        std::ifstream in(path);
        if (!in) throw Error(Errc::ParseError, "cannot read " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        Problem prob = parse_problem(ss.str());
        RunOptions opt;
        if (!mode.empty()) opt.mode = parse_mode(mode);
        if (box > 0) opt.box_radius = Int(box);
        opt.oracle = oracle;
        if (!omega.empty()) opt.omega = parse_rat(omega);
        out << (run->parsed() ? run_problem(prob, opt) : emit_regions(prob, opt)) << "\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        out << ojson{{"status", "error"}, {"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace zpoly
