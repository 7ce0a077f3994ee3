#include "zpoly/regions.hpp"

#include <algorithm>

namespace zpoly {

// ---------------------------------------------------------------- column machinery

ColumnCache::ColumnCache(const BiPoly& f) : f_(f), fy_(f.dy()), eval_(f) {}

const std::vector<Int>& ColumnCache::critical(const Int& x) {
    auto it = crit_.find(x);
    if (it != crit_.end()) return it->second;
    std::vector<Int> out;
    UniPoly d = fy_.at_x(Rat(x));
    if (d.degree() == 1) {
        Rat r = -d.coeff(0) / d.coeff(1);
        out = {floor_rat(r), ceil_rat(r)};
    } else if (d.degree() > 1) {
        // an integer minimizer lies within distance 1 of a critical point
        for (const auto& iv : isolate_roots(d, rat(1, 2)))
            for (Int y = floor_rat(iv.lo); y <= ceil_rat(iv.hi); ++y) out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return crit_.emplace(x, std::move(out)).first->second;
}

std::pair<Int, Int> ColumnCache::column_min(const Int& x, const Int& lo, const Int& hi) {
    auto key = std::make_tuple(x, lo, hi);
    auto it = mins_.find(key);
    if (it != mins_.end()) return it->second;
    Int best = eval_.scaled(x, lo), arg = lo;
    auto consider = [&](const Int& y) {
        Int v = eval_.scaled(x, y);
        if (v < best || (v == best && y < arg)) {
            best = v;
            arg = y;
        }
    };
    for (const auto& y : critical(x))
        if (y > lo && y < hi) consider(y);
    if (hi != lo) consider(hi);
    return mins_.emplace(key, std::make_pair(best, arg)).first->second;
}

SublevelOracle::SublevelOracle(const BiPoly& f, const Rat& omega)
    : SublevelOracle(std::make_shared<ColumnCache>(f), omega) {}

SublevelOracle::SublevelOracle(std::shared_ptr<ColumnCache> cache, const Rat& omega)
    : cache_(std::move(cache)), omega_(omega) {
    scaled_omega_ = floor_rat(omega_ * Rat(cache_->eval().scale()));
}

bool SublevelOracle::feasible(const Point2& p) const { return cache_->eval().scaled(p.x, p.y) <= scaled_omega_; }

// ---------------------------------------------------------------- geometry helpers

std::optional<std::pair<Int, Int>> integer_column(const Polyhedron2& p, const Int& x) {
    auto c = p.column(Rat(x));
    if (!c) return std::nullopt;
    if (!c->first || !c->second) throw Error(Errc::UnboundedRegion, "unbounded column");
    Int a = ceil_rat(*c->first), b = floor_rat(*c->second);
    if (a > b) return std::nullopt;
    return std::make_pair(a, b);
}

std::optional<std::pair<Int, Int>> integer_x_range(const Polyhedron2& p) {
    auto v = p.vertices();
    if (v.empty()) return std::nullopt;
    Rat lo = v[0].x, hi = v[0].x;
    for (const auto& w : v) {
        lo = std::min<Rat>(lo, w.x);
        hi = std::max<Rat>(hi, w.x);
    }
    Int a = ceil_rat(lo), b = floor_rat(hi);
    if (a > b) return std::nullopt;
    return std::make_pair(a, b);
}

Int box_radius(const Polyhedron2& p) {
    Rat r(1);
    for (const auto& w : p.vertices()) r = std::max<Rat>(r, std::max<Rat>(abs_rat(w.x), abs_rat(w.y)));
    return ceil_rat(r);
}

// ---------------------------------------------------------------- the two tests

std::optional<Point2> point_outside_convex(const Polyhedron2& p, const std::function<bool(const Point2&)>& member) {
    if (!p.is_bounded()) throw Error(Errc::UnboundedRegion, "point_outside_convex needs a bounded set");
    auto h = integer_hull(p);
    std::sort(h.begin(), h.end());
    for (const auto& v : h)
        if (!member(v)) return v;
    return std::nullopt;
}

std::optional<Point2> point_inside_convex_sublevel(const Polyhedron2& p, const SublevelOracle& oracle) {
    if (!p.is_bounded()) throw Error(Errc::UnboundedRegion, "point_inside_convex_sublevel needs a bounded set");
    auto xr = integer_x_range(p);
    if (!xr) return std::nullopt;
    Int bound = floor_rat(oracle.omega() * Rat(oracle.cache().eval().scale()));
    for (Int x = xr->first; x <= xr->second; ++x) {
        auto col = integer_column(p, x);
        if (!col) continue;
        auto [v, y] = oracle.cache().column_min(x, col->first, col->second);
        if (v <= bound) return Point2{x, y};
    }
    return std::nullopt;
}

namespace {

// a*s + b*t = g = gcd(a, b) >= 0
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

std::optional<LineSegmentParam> lattice_segment(const LatticeLine& l, const Polyhedron2& p) {
    Int g, s, t;
    ext_gcd(l.a, l.b, g, s, t);
    if (l.c % g != 0) return std::nullopt;
    Int k = l.c / g;
    LineSegmentParam out;
    out.origin = {s * k, t * k};
    out.dir = {l.b / g, -l.a / g};
    if (out.dir.x < 0 || (out.dir.x == 0 && out.dir.y < 0)) out.dir = {-out.dir.x, -out.dir.y};
    for (const auto& r : p.rows()) {
        Rat kk = r.a * Rat(out.dir.x) + r.b * Rat(out.dir.y);
        Rat rhs = r.c - r.a * Rat(out.origin.x) - r.b * Rat(out.origin.y);
        int sk = sgn(kk);
        if (sk == 0) {
            if (sgn(rhs) < 0) return std::nullopt;
            continue;
        }
        Rat q = rhs / kk;
        if (sk > 0) {
            Int b = floor_rat(q);
            if (!out.thi || b < *out.thi) out.thi = b;
        } else {
            Int b = ceil_rat(q);
            if (!out.tlo || b > *out.tlo) out.tlo = b;
        }
    }
    if (out.tlo && out.thi && *out.tlo > *out.thi) return std::nullopt;
    return out;
}

std::optional<Point2> feasible_in_division(const DivisionDescription& dd, const SublevelOracle& oracle,
                                           const Polyhedron2& restrict_to) {
    Polyhedron2 scope = dd.box.intersect(restrict_to);
    for (const auto& piece : dd.convex_side) {
        auto pt = point_inside_convex_sublevel(piece.intersect(scope), oracle);
        if (pt) return pt;
    }
    for (const auto& piece : dd.concave_side) {
        auto pt = point_outside_convex(piece.intersect(scope), [&](const Point2& z) { return !oracle.feasible(z); });
        if (pt) return pt;
    }
    for (const auto& line : dd.lines) {
        auto seg = lattice_segment(line, scope);
        if (!seg) continue;
        if (!seg->tlo || !seg->thi) throw Error(Errc::UnboundedRegion, "division line leaves the box");
        UniPoly g = oracle.f().along(Rat(seg->origin.x), Rat(seg->origin.y), Rat(seg->dir.x), Rat(seg->dir.y));
        auto o = minimize_univariate(g, seg->tlo, seg->thi);
        if (o.status == Status::Optimal && o.value <= oracle.omega())
            return Point2{seg->origin.x + o.point.x * seg->dir.x, seg->origin.y + o.point.x * seg->dir.y};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- drivers

SolveOutcome minimize_univariate(const UniPoly& p, const std::optional<Int>& lo, const std::optional<Int>& hi) {
    if (lo && hi && *lo > *hi) throw Error(Errc::EmptyInterval, "minimize_univariate on an empty range");
    int d = p.degree();
    if (d >= 1) {
        int lead = sgn(p.lead());
        if (!hi && lead < 0) return SolveOutcome::unbounded({lo ? *lo : Int(0), 0}, {1, 0});
        bool down_left = (d % 2 == 1) ? lead > 0 : lead < 0;
        if (!lo && down_left) return SolveOutcome::unbounded({hi ? *hi : Int(0), 0}, {-1, 0});
    }
    std::vector<Int> cand;
    if (lo) cand.push_back(*lo);
    if (hi) cand.push_back(*hi);
    if (d >= 2) {
        UniPoly dp = p.derivative();
        for (const auto& iv : isolate_roots(dp, rat(1, 2)))
            for (Int x = floor_rat(iv.lo); x <= ceil_rat(iv.hi); ++x) {
                if ((lo && x < *lo) || (hi && x > *hi)) continue;
                cand.push_back(x);
            }
    }
    if (cand.empty()) cand.push_back(0);  // constant p on the whole line
    std::optional<Int> best;
    Rat bv;
    for (const auto& x : cand) {
        Rat v = p(Rat(x));
        if (!best || v < bv || (v == bv && x < *best)) {
            best = x;
            bv = v;
        }
    }
    return SolveOutcome::optimal({*best, 0}, bv);
}

namespace {

SolveOutcome minimize_on_segment(const Polyhedron2& p, const BiPoly& f, const RatPoint& a, const RatPoint& b) {
    Rat la = b.y - a.y, lb = a.x - b.x;
    LatticeLine l = LatticeLine::make(la, lb, la * a.x + lb * a.y);
    auto seg = lattice_segment(l, p);
    if (!seg) return SolveOutcome::infeasible();
    UniPoly g = f.along(Rat(seg->origin.x), Rat(seg->origin.y), Rat(seg->dir.x), Rat(seg->dir.y));
    auto o = minimize_univariate(g, seg->tlo, seg->thi);
    Point2 pt{seg->origin.x + o.point.x * seg->dir.x, seg->origin.y + o.point.x * seg->dir.y};
    return SolveOutcome::optimal(pt, o.value);
}

}  // namespace

SolveOutcome minimize_by_bisection(const Polyhedron2& p, const BiPoly& f, const DivisionBuilder& builder,
                                   SolveStats* stats) {
    if (!p.is_bounded()) throw Error(Errc::UnboundedRegion, "minimize_by_bisection needs a bounded polyhedron");
    auto start = ilp_point(p);
    if (!start) return SolveOutcome::infeasible();
    auto verts = p.vertices();
    if (verts.size() == 1) return SolveOutcome::optimal(*start, f(Rat(start->x), Rat(start->y)));
    if (verts.size() == 2) return minimize_on_segment(p, f, verts[0], verts[1]);

    auto cache = std::make_shared<ColumnCache>(f);
    const Int& scale = cache->eval().scale();
    Rat rscale(scale);
    Int m = floor_rat(f.abs_sum() * rscale) + 1;
    Int r = box_radius(p);
    int d = std::max(f.degree(), 0);
    // L*f takes integer values in [-M R^d, M R^d]
    Int lo = -m * pow_int(r, static_cast<unsigned>(d)) - 1;
    Int hi = cache->eval().scaled(start->x, start->y);
    auto omega_of = [&](const Int& k) -> Rat { return (Rat(k) + rat(1, 2)) / rscale; };

    long steps = 0, pieces = 0;
    while (hi - lo > 1) {
        Int mid = lo + (hi - lo) / 2;
        Rat w = omega_of(mid);
        DivisionDescription dd = builder(w);
        pieces = std::max<long>(pieces, static_cast<long>(dd.piece_count()));
        SublevelOracle oracle(cache, w);
        if (feasible_in_division(dd, oracle, p))
            hi = mid;
        else
            lo = mid;
        ++steps;
    }
    // witness at the optimal level, then lexicographic normalisation by columns
    Rat w = omega_of(hi);
    DivisionDescription dd = builder(w);
    pieces = std::max<long>(pieces, static_cast<long>(dd.piece_count()));
    SublevelOracle oracle(cache, w);
    auto witness = feasible_in_division(dd, oracle, p);
    if (!witness) throw Error(Errc::Internal, "no witness at the optimal level");
    Point2 best = *witness;
    auto xr = integer_x_range(p);
    for (Int x = xr->first; x <= best.x; ++x) {
        auto col = integer_column(p, x);
        if (!col) continue;
        auto [v, y] = cache->column_min(x, col->first, col->second);
        if (v < hi) throw Error(Errc::Internal, "division description missed a lattice point");
        if (v == hi) {
            best = {x, y};
            break;
        }
    }
    if (stats) {
        stats->bisection_steps += steps;
        stats->pieces = std::max(stats->pieces, pieces);
    }
    return SolveOutcome::optimal(best, rat(hi, scale));
}

}  // namespace zpoly
