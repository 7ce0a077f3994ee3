#include "zpoly/homogeneous.hpp"

#include <algorithm>

namespace zpoly {

BiPoly bordered_hessian_det(const BiPoly& f) {
    BiPoly f1 = f.dx(), f2 = f.dy();
    BiPoly f11 = f1.dx(), f22 = f2.dy(), f12 = f1.dy();
    return -(f1 * f1 * f22) + Rat(2) * (f1 * f2 * f12) - f2 * f2 * f11;
}

bool euler_identity_check(const BiPoly& h) {
    if (!h.is_homogeneous()) throw Error(Errc::NotHomogeneous, "euler identity needs a homogeneous polynomial");
    int d = h.degree();
    if (d < 2) throw Error(Errc::NotHomogeneous, "euler identity needs degree at least 2");
    BiPoly h11 = h.dx().dx(), h22 = h.dy().dy(), h12 = h.dx().dy();
    BiPoly rhs = rat(-d, d - 1) * (h * (h11 * h22 - h12 * h12));
    return bordered_hessian_det(h) == rhs;
}

std::optional<TranslationWitness> detect_translatable(const BiPoly& f) {
    int d = f.degree();
    if (d <= 0) return TranslationWitness{0, 0, f};
    // shear x -> x + k y so that some top-degree coefficient vanishes
    Rat k(0);
    bool all_top = true;
    for (int i = 0; i <= d; ++i)
        if (sgn(f.coeff(i, d - i)) == 0) all_top = false;
    if (all_top) k = -f.coeff(d - 1, 1) / (d * f.coeff(d, 0));
    BiPoly g = sgn(k) == 0 ? f : substitute_affine(f, 1, k, 0, 1, 0, 0);
    auto c = [&](int i, int j) -> Rat { return (i < 0 || j < 0) ? Rat(0) : g.coeff(i, j); };

    // relation for |v| = d - 1: c_v + (v1 + 1) c_{v+e1} t1 + (v2 + 1) c_{v+e2} t2 = 0
    struct Rel {
        Rat c0, a, b;
    };
    std::vector<Rel> rels;
    for (int i = 0; i <= d - 1; ++i) {
        int j = d - 1 - i;
        rels.push_back({c(i, j), Rat(i + 1) * c(i + 1, j), Rat(j + 1) * c(i, j + 1)});
    }
    std::optional<Rat> t1, t2;
    for (int i = 0; i <= d && !t1 && !t2; ++i) {
        int j = d - i;
        if (sgn(c(i, j)) != 0) continue;
        if (j >= 1 && sgn(c(i + 1, j - 1)) != 0) {
            // relation at (i, j - 1) has no t2 term
            t1 = -c(i, j - 1) / (Rat(i + 1) * c(i + 1, j - 1));
        } else if (i >= 1 && sgn(c(i - 1, j + 1)) != 0) {
            t2 = -c(i - 1, j) / (Rat(j + 1) * c(i - 1, j + 1));
        }
    }
    if (!t1 && !t2) return std::nullopt;
    if (t1) {
        t2 = Rat(0);
        for (const auto& r : rels)
            if (sgn(r.b) != 0) {
                t2 = -(r.c0 + r.a * *t1) / r.b;
                break;
            }
    } else {
        t1 = Rat(0);
        for (const auto& r : rels)
            if (sgn(r.a) != 0) {
                t1 = -(r.c0 + r.b * *t2) / r.a;
                break;
            }
    }
    // g(x + t) = f(x + k y + t1 + k t2, y + t2), so f translates by (t1 + k t2, t2)
    Rat sx = *t1 + k * *t2, sy = *t2;
    BiPoly h = substitute_affine(f, 1, 0, 0, 1, sx, sy);
    if (!h.is_homogeneous()) return std::nullopt;
    return TranslationWitness{sx, sy, h};
}

// ---------------------------------------------------------------- sign partition

namespace {

struct Quad {
    std::vector<RatPoint> pts;
    Polyhedron2 poly;
};

// Roots of F(x, +-r) paired in both orders, as thin quadrilaterals; false when the counts differ.
bool quads_for(const BiPoly& F, const Int& r, bool swap, std::vector<Quad>& out) {
    UniPoly top = F.at_y(Rat(r)), bot = F.at_y(Rat(-r));
    if (top.is_zero() || bot.is_zero()) return false;
    Rat eps = 1 / Rat(4 * r);
    auto a = top.degree() > 0 ? isolate_roots(top, eps) : std::vector<RootInterval>{};
    auto b = bot.degree() > 0 ? isolate_roots(bot, eps) : std::vector<RootInterval>{};
    if (a.size() != b.size()) return false;
    size_t n = a.size();
    auto make = [&](const RootInterval& u, const RootInterval& v) {
        std::vector<RatPoint> pts{{u.lo, Rat(r)}, {u.hi, Rat(r)}, {v.hi, Rat(-r)}, {v.lo, Rat(-r)}};
        if (swap)
            for (auto& p : pts) std::swap(p.x, p.y);
        Quad q;
        q.poly = Polyhedron2::from_points(pts);
        q.pts = std::move(pts);
        out.push_back(std::move(q));
    };
    for (size_t i = 0; i < n; ++i) {
        make(a[i], b[i]);
        if (n - 1 - i != i) make(a[i], b[n - 1 - i]);
    }
    return true;
}

void push_unique(std::vector<LatticeLine>& v, const LatticeLine& l) {
    if (std::find(v.begin(), v.end(), l) == v.end()) v.push_back(l);
}

}  // namespace

SignPartition sign_partition(const BiPoly& F, const Int& r, const std::optional<TranslationWitness>& hint) {
    if (F.is_zero()) throw Error(Errc::ZeroFunction, "sign partition of the zero polynomial");
    SignPartition sp;
    sp.box = Polyhedron2::square(Rat(r));
    std::vector<Quad> quads;
    Int rr = r;
    BiPoly G = F.swap_xy();
    for (int bump = 0;; ++bump) {
        if (bump > 2 * F.degree() + 4) throw Error(Errc::Internal, "root counts never matched");
        quads.clear();
        if (quads_for(F, rr, false, quads) && quads_for(G, rr, true, quads)) break;
        ++rr;
    }
    sp.construction_radius = rr;

    std::vector<LatticeLine> arr;
    for (const auto& q : quads) {
        push_unique(sp.lines, line_in_thin_polytope(q.pts));
        // long edges: pts[0]-pts[3] and pts[1]-pts[2]
        for (auto [i, j] : {std::pair{0, 3}, std::pair{1, 2}}) {
            const auto &p = q.pts[i], &s = q.pts[j];
            Rat a = s.y - p.y, b = p.x - s.x;
            if (sgn(a) == 0 && sgn(b) == 0) continue;
            push_unique(arr, LatticeLine::make(a, b, a * p.x + b * p.y));
        }
    }
    auto wit = hint ? hint : detect_translatable(F);
    bool lattice_t = false;
    if (wit) {
        // keep the centre off cell interiors; when it is a lattice point, cut it out of every cell
        if (abs_rat(wit->tx) < Rat(r)) push_unique(arr, LatticeLine::make(1, 0, wit->tx));
        if (abs_rat(wit->ty) < Rat(r)) push_unique(arr, LatticeLine::make(0, 1, wit->ty));
        lattice_t = wit->tx.get_den() == 1 && wit->ty.get_den() == 1 && sp.box.contains(wit->tx, wit->ty);
        if (lattice_t) push_unique(sp.lines, LatticeLine::make(1, 0, wit->tx));
    }
    for (const auto& cell : arrangement_cells(arr, sp.box)) {
        const auto& ip = cell.interior;
        bool inside = false;
        for (const auto& q : quads)
            if (q.poly.contains(ip.x, ip.y)) {
                inside = true;
                break;
            }
        if (inside) continue;
        Polyhedron2 region = cell.region;
        if (lattice_t && region.contains(wit->tx, wit->ty)) {
            // sx (x - tx) + sy (y - ty) >= 1 drops only the centre from this cell
            Rat sx(sgn(Rat(ip.x - wit->tx))), sy(sgn(Rat(ip.y - wit->ty)));
            region.add(-sx, -sy, -(sx * wit->tx + sy * wit->ty + 1));
        }
        int s = sgn(F(ip.x, ip.y));
        if (s > 0)
            sp.positive.push_back(region);
        else if (s < 0)
            sp.negative.push_back(region);
        else
            throw Error(Errc::Internal, "zero of F outside every quadrilateral");
    }
    return sp;
}

DivisionDescription quasi_division(const BiPoly& f, const Int& r) {
    if (f.degree() < 2) throw Error(Errc::Unsupported, "quasi_division needs degree at least 2");
    auto wit = detect_translatable(f);
    if (!wit) throw Error(Errc::NotTranslatable, "not homogeneous translatable: " + f.to_string());
    BiPoly df = bordered_hessian_det(f);
    DivisionDescription dd;
    SignPartition sp;
    if (df.is_zero()) {
        // a power of a linear form: convex where positive, concave where negative
        sp = sign_partition(f, r, wit);
        dd.convex_side = sp.positive;
        dd.concave_side = sp.negative;
    } else {
        TranslationWitness dw{wit->tx, wit->ty, substitute_affine(df, 1, 0, 0, 1, wit->tx, wit->ty)};
        sp = sign_partition(df, r, dw);
        dd.convex_side = sp.negative;
        dd.concave_side = sp.positive;
    }
    dd.lines = sp.lines;
    dd.box = sp.box;
    return dd;
}

SolveOutcome solve_homogeneous_bounded(const BiPoly& f, const Polyhedron2& p, SolveStats* stats) {
    if (!p.is_bounded()) throw Error(Errc::UnboundedRegion, "solve_homogeneous_bounded needs a bounded polyhedron");
    auto wit = detect_translatable(f);
    if (!wit) throw Error(Errc::NotTranslatable, "not homogeneous translatable: " + f.to_string());
    int d = f.degree();
    if (d <= 1) {
        auto o = ilp_min_linear(p, f.coeff(1, 0), f.coeff(0, 1));
        if (o.status == Status::Optimal) o.value += f.coeff(0, 0);
        return o;
    }
    DivisionDescription dd = quasi_division(f, box_radius(p));
    return minimize_by_bisection(p, f, [&](const Rat&) { return dd; }, stats);
}

}  // namespace zpoly
