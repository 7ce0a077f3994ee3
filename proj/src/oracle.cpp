#include "zpoly/oracle.hpp"

#include "zpoly/cubic_unbounded.hpp"
#include "zpoly/homogeneous.hpp"

#include <atomic>
#include <json.hpp>
#include <sstream>
#include <thread>

namespace zpoly {

using ojson = nlohmann::ordered_json;

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long SplitMix64::range(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

// ---------------------------------------------------------------- generation

namespace {

BiPoly random_part(SplitMix64& rng, int k, long bound) {
    BiPoly h;
    while (h.is_zero())
        for (int i = k; i >= 0; --i) h.add_term(i, k - i, Rat(rng.range(-bound, bound)));
    return h;
}

Polyhedron2 random_rows(SplitMix64& rng, const InstanceSpec& spec) {
    long r = spec.box_radius;
    Polyhedron2 p;
    // every row keeps this anchor, so P meets the box
    long qx = rng.range(-r, r), qy = rng.range(-r, r);
    for (int k = 0; k < spec.constraint_count; ++k) {
        long a = 0, b = 0;
        while (a == 0 && b == 0) {
            a = rng.range(-5, 5);
            b = rng.range(-5, 5);
        }
        p.add(Rat(a), Rat(b), Rat(a * qx + b * qy + rng.range(0, r)));
    }
    return p;
}

}  // namespace

Instance gen_instance(const InstanceSpec& spec) {
    if (spec.coeff_bound < 1 || spec.box_radius < 1) throw Error(Errc::Unsupported, "coeff_bound and box_radius must be positive");
    SplitMix64 rng(spec.seed);
    Instance inst;
    if (spec.kind == InstanceKind::Homogeneous) {
        BiPoly h = random_part(rng, spec.degree, spec.coeff_bound);
        long half = std::max<long>(spec.box_radius / 2, 1);
        auto coord = [&] {
            long den = rng.range(1, std::max(spec.max_denominator, 1));
            return rat(rng.range(-half * den, half * den), den);
        };
        Rat tx = coord(), ty = coord();
        BiPoly f = substitute_affine(h, 1, 0, 0, 1, -tx, -ty);
        inst.f = f.integer_scale() * f;
    } else {
        for (int k = 0; k < spec.degree; ++k)
            for (int i = k; i >= 0; --i) inst.f.add_term(i, k - i, Rat(rng.range(-spec.coeff_bound, spec.coeff_bound)));
        inst.f = inst.f + random_part(rng, spec.degree, spec.coeff_bound);
    }
    if (spec.unbounded) {
        // redraw until the rows leave P unbounded
        do inst.p = random_rows(rng, spec);
        while (inst.p.is_bounded());
    } else {
        inst.p = Polyhedron2::square(Rat(spec.box_radius));
        Polyhedron2 extra = random_rows(rng, spec);
        for (const auto& r : extra.rows()) inst.p.add(r.a, r.b, r.c);
    }
    return inst;
}

// ---------------------------------------------------------------- brute force

SolveOutcome brute_force_min(const BiPoly& f, const Polyhedron2& p, const Polyhedron2& box) {
    std::optional<Int> xlo, xhi, ylo, yhi;
    auto lower = [](std::optional<Int>& cur, const Int& v) {
        if (!cur || v > *cur) cur = v;
    };
    auto upper = [](std::optional<Int>& cur, const Int& v) {
        if (!cur || v < *cur) cur = v;
    };
    for (const auto& r : box.rows()) {
        if (sgn(r.b) == 0 && sgn(r.a) > 0) upper(xhi, floor_rat(r.c / r.a));
        if (sgn(r.b) == 0 && sgn(r.a) < 0) lower(xlo, ceil_rat(r.c / r.a));
        if (sgn(r.a) == 0 && sgn(r.b) > 0) upper(yhi, floor_rat(r.c / r.b));
        if (sgn(r.a) == 0 && sgn(r.b) < 0) lower(ylo, ceil_rat(r.c / r.b));
    }
    if (!xlo || !xhi || !ylo || !yhi) throw Error(Errc::Unsupported, "brute force needs an axis-parallel box");
    if (*xhi < *xlo || *yhi < *ylo) return SolveOutcome::infeasible();
    Int count = (*xhi - *xlo + 1) * (*yhi - *ylo + 1);
    if (count > kBruteForceCap) throw Error(Errc::TooLarge, "brute force over " + to_string(count) + " points");

    // rows scaled to integers
    struct IRow {
        Int a, b, c;
    };
    std::vector<IRow> rows;
    for (const auto& r : p.rows()) {
        Int l;
        mpz_lcm(l.get_mpz_t(), r.a.get_den().get_mpz_t(), r.b.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.c.get_den().get_mpz_t());
        rows.push_back({Rat(r.a * l).get_num(), Rat(r.b * l).get_num(), Rat(r.c * l).get_num()});
    }
    PointEval ev(f);
    bool found = false;
    Int best_val;
    Point2 best_pt;
    Int lhs;
    for (Int x = *xlo; x <= *xhi; ++x)
        for (Int y = *ylo; y <= *yhi; ++y) {
            bool in = true;
            for (const auto& r : rows) {
                lhs = r.a * x + r.b * y;
                if (lhs > r.c) {
                    in = false;
                    break;
                }
            }
            if (!in) continue;
            Int v = ev.scaled(x, y);
            if (!found || v < best_val) {
                found = true;
                best_val = v;
                best_pt = {x, y};
            }
        }
    if (!found) return SolveOutcome::infeasible();
    return SolveOutcome::optimal(best_pt, Rat(best_val, ev.scale()));
}

// ---------------------------------------------------------------- differential harness

namespace {

ojson coord_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ojson outcome_obj(const SolveOutcome& o) {
    ojson j;
    j["status"] = status_name(o.status);
    if (o.status == Status::Optimal) {
        j["point"] = {coord_json(o.point.x), coord_json(o.point.y)};
        j["value"] = to_string(o.value);
    } else if (o.status == Status::Unbounded) {
        j["point"] = {coord_json(o.point.x), coord_json(o.point.y)};
        j["ray"] = {coord_json(o.ray.x), coord_json(o.ray.y)};
    }
    return j;
}

bool same(const SolveOutcome& a, const SolveOutcome& b) {
    if (a.status != b.status) return false;
    if (a.status == Status::Optimal) return a.value == b.value && a.point == b.point;
    return true;
}

// Certificate soundness, including the sampled monotonicity along the ray.
bool certificate_ok(const BiPoly& f, const Polyhedron2& p, const SolveOutcome& o) {
    if (!verify_unbounded(f, p, o.point, o.ray)) return false;
    Rat prev;
    Int step(1);
    for (int k = 0; k <= 4; ++k, step *= 10) {
        Rat v = f(Rat(o.point.x + step * o.ray.x), Rat(o.point.y + step * o.ray.y));
        if (k > 0 && !(v < prev)) return false;
        prev = v;
    }
    return true;
}

DiffRecord check_one(const InstanceSpec& spec, const InstanceSolver& solver) {
    DiffRecord rec;
    rec.seed = spec.seed;
    rec.kind = spec.kind == InstanceKind::Homogeneous ? "homogeneous" : (spec.unbounded ? "unbounded" : "cubic");
    try {
        Instance inst = gen_instance(spec);
        Int radius(0);
        SolveOutcome got;
        try {
            got = solver(inst, spec, &radius);
        } catch (const Error& e) {
            rec.expected = spec.unbounded ? "certificate-or-optimal" : outcome_obj(brute_force_min(inst.f, inst.p, Polyhedron2::square(Rat(spec.box_radius)))).dump();
            rec.got = ojson{{"status", "error"}, {"message", e.what()}}.dump();
            return rec;
        }
        rec.got = outcome_obj(got).dump();
        if (!spec.unbounded) {
            auto exp = brute_force_min(inst.f, inst.p, Polyhedron2::square(Rat(spec.box_radius)));
            rec.expected = outcome_obj(exp).dump();
            rec.ok = same(exp, got);
        } else if (got.status == Status::Unbounded) {
            rec.expected = "valid certificate";
            rec.ok = certificate_ok(inst.f, inst.p, got);
        } else {
            long r4 = 4 * std::max<long>(radius.get_si(), 1);
            auto exp = brute_force_min(inst.f, inst.p, Polyhedron2::square(Rat(r4)));
            rec.expected = outcome_obj(exp).dump();
            rec.ok = same(exp, got);
        }
    } catch (const Error& e) {
        rec.ok = false;
        if (rec.expected.empty()) rec.expected = "n/a";
        rec.got = ojson{{"status", "error"}, {"message", e.what()}}.dump();
    }
    return rec;
}

}  // namespace

std::string outcome_json(const SolveOutcome& o) { return outcome_obj(o).dump(); }

SolveOutcome default_instance_solver(const Instance& inst, const InstanceSpec& spec, Int* certified_radius) {
    SolveStats st;
    SolveOutcome o;
    if (spec.kind == InstanceKind::Homogeneous && inst.p.is_bounded())
        o = solve_homogeneous_bounded(inst.f, inst.p, &st);
    else
        o = solve_cubic(inst.f, inst.p, &st);
    if (certified_radius)
        *certified_radius = st.certified_radius ? ceil_rat(*st.certified_radius) : Int(spec.box_radius);
    return o;
}

std::string DiffRecord::to_line() const {
    ojson j;
    j["seed"] = seed;
    j["kind"] = kind;
    j["result"] = ok ? "match" : "mismatch";
    auto embed = [](const std::string& s) -> ojson {
        auto parsed = ojson::parse(s, nullptr, false);
        return parsed.is_discarded() ? ojson(s) : parsed;
    };
    j["expected"] = embed(expected);
    j["got"] = embed(got);
    return j.dump();
}

size_t DiffReport::mismatches() const {
    size_t n = 0;
    for (const auto& r : records) n += r.ok ? 0 : 1;
    return n;
}

std::string DiffReport::to_text() const {
    std::ostringstream os;
    for (const auto& r : records) os << r.to_line() << "\n";
    return os.str();
}

DiffReport differential_run(const std::vector<InstanceSpec>& specs, const InstanceSolver& solver, unsigned threads) {
    DiffReport rep;
    rep.records.resize(specs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<size_t>(specs.size(), 1));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next.fetch_add(1)) < specs.size();) rep.records[i] = check_one(specs[i], solver);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rep;
}

}  // namespace zpoly
