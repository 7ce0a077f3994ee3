#include "zpoly/cubic_bounded.hpp"

#include <algorithm>

namespace zpoly {

namespace {

Curvature curvature_of(int s) {
    if (s > 0) return Curvature::Convex;
    if (s < 0) return Curvature::Concave;
    return Curvature::Both;
}

LatticeLine column_line(const Int& k) { return LatticeLine{1, 0, k}; }

// y = y0 + s (x - x0) as a polynomial in x
UniPoly line_poly(const Rat& x0, const Rat& y0, const Rat& s) { return UniPoly({y0 - s * x0, s}); }

// Rows y >= line and y <= line, as halfplanes a x + b y <= c.
Row above(const Rat& x0, const Rat& y0, const Rat& s) { return {s, Rat(-1), s * x0 - y0}; }
Row below(const Rat& x0, const Rat& y0, const Rat& s) { return {-s, Rat(1), y0 - s * x0}; }

Polyhedron2 strip(const Int& lo, const Int& hi, const Int& ry) {
    return Polyhedron2::box(Rat(lo), Rat(hi), Rat(-ry), Rat(ry));
}

Polyhedron2 with_row(Polyhedron2 p, const Row& r) {
    p.add(r.a, r.b, r.c);
    return p;
}

struct Quad {
    UniPoly f0w, f1, f2, delta;
};

Quad quad_of(const YSlices& s, const Rat& omega) {
    Quad q;
    q.f0w = s[0] - UniPoly::constant(omega);
    q.f1 = s[1];
    q.f2 = s[2];
    q.delta = q.f1 * q.f1 - Rat(4) * (q.f2 * q.f0w);
    return q;
}

// f(x, line(x)) - omega has sign -sign(f2) on [lo, hi], so the line runs strictly between the branches.
void check_separator(const Quad& q, const UniPoly& line, const Int& lo, const Int& hi, int sign_f2) {
    UniPoly h = q.f2 * line * line + q.f1 * line + q.f0w;
    bool ok = !h.is_zero() && h.sign_at(Rat(lo)) == -sign_f2;
    if (ok && h.degree() > 0) ok = SturmChain(squarefree_part(h)).count(Rat(lo), Rat(hi)) == 0;
    if (!ok)
        throw Error(Errc::Internal, "separator on [" + to_string(lo) + ", " + to_string(hi) + "] fails to separate");
}

// Places a one-branch piece on the convex or concave side.
void classify(DivisionDescription& dd, Polyhedron2 piece, bool upper, int sign_f2, Curvature c) {
    bool sub_above = (upper && sign_f2 < 0) || (!upper && sign_f2 > 0);
    bool convex_sub = c == Curvature::Both || (sub_above && c == Curvature::Convex) ||
                      (!sub_above && c == Curvature::Concave);
    (convex_sub ? dd.convex_side : dd.concave_side).push_back(std::move(piece));
}

Rat abs_sum_slices(const YSlices& s) { return std::max<Rat>(s.oriented.abs_sum(), Rat(1)); }

}  // namespace

// ---------------------------------------------------------------- slices

YSlices slice_as_is(const BiPoly& f) {
    if (f.degree() > 3 || f.deg_y() > 3) throw Error(Errc::DegreeTooHigh, "cubic routines need degree at most 3");
    YSlices s;
    s.oriented = f;
    s.f = f.y_slices();
    s.f.resize(4);
    s.deg_y = f.deg_y();
    s.deg_x = f.deg_x();
    return s;
}

YSlices slice_and_orient(const BiPoly& f) {
    if (f.degree() > 3) throw Error(Errc::DegreeTooHigh, "degree " + std::to_string(f.degree()) + " exceeds 3");
    bool swap = f.deg_x() < f.deg_y();
    YSlices s = slice_as_is(swap ? f.swap_xy() : f);
    s.swapped = swap;
    return s;
}

DivisionDescription swap_xy(const DivisionDescription& dd) {
    auto swap_poly = [](const Polyhedron2& p) {
        std::vector<Row> rows;
        for (const auto& r : p.rows()) rows.push_back({r.b, r.a, r.c});
        return Polyhedron2(std::move(rows));
    };
    DivisionDescription out;
    for (const auto& p : dd.convex_side) out.convex_side.push_back(swap_poly(p));
    for (const auto& p : dd.concave_side) out.concave_side.push_back(swap_poly(p));
    for (const auto& l : dd.lines) out.lines.push_back(LatticeLine::make(Rat(l.b), Rat(l.a), Rat(l.c)));
    out.box = swap_poly(dd.box);
    return out;
}

// ---------------------------------------------------------------- grids

std::vector<Rat> approx_roots(const UniPoly& p, const Rat& eps) {
    std::vector<Rat> out;
    if (p.degree() < 1) return out;
    for (const auto& iv : isolate_roots(p, eps)) out.push_back(iv.mid());
    return out;
}

std::vector<Rat> approx_roots(const UniPoly& p, const Rat& eps, const Int& lo, const Int& hi) {
    std::vector<Rat> out;
    if (p.degree() < 1) return out;
    for (const auto& iv : isolate_roots(p, eps, Rat(lo), Rat(hi))) out.push_back(iv.mid());
    return out;
}

Grid make_grid(std::vector<Rat> approx, const Int& lo, const Int& hi) {
    std::vector<Rat> a{Rat(lo), Rat(hi)};
    for (auto& v : approx)
        if (v > Rat(lo - 1) && v < Rat(hi + 1)) a.push_back(v);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    Grid g;
    for (const auto& v : a)
        for (const Int& k : {floor_rat(v), ceil_rat(v)})
            if (k >= lo && k <= hi) g.columns.push_back(k);
    std::sort(g.columns.begin(), g.columns.end());
    g.columns.erase(std::unique(g.columns.begin(), g.columns.end()), g.columns.end());
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        Int l = std::max<Int>(ceil_rat(a[i]) + 1, lo);
        Int u = std::min<Int>(floor_rat(a[i + 1]) - 1, hi);
        if (l <= u) g.intervals.push_back({l, u});
    }
    return g;
}

// ---------------------------------------------------------------- branches

namespace {

struct PQ {
    UniPoly p, q;
};

// y_+'' = (-p + sqrt(delta) q) / (8 f2^3 delta^(3/2)); y_-'' has numerator p + sqrt(delta) q.
PQ branch_pq(const UniPoly& f1, const UniPoly& f2, const UniPoly& delta) {
    UniPoly d1 = delta.derivative(), d2 = d1.derivative();
    UniPoly g1 = f2.derivative(), g2 = g1.derivative();
    UniPoly h1 = f1.derivative(), h2 = h1.derivative();
    UniPoly minus_p = delta * (Rat(2) * (f2 * f2 * d2) - Rat(4) * (f2 * g1 * d1)) +
                      delta * delta * (Rat(8) * (g1 * g1) - Rat(4) * (f2 * g2)) - f2 * f2 * d1 * d1;
    UniPoly q = delta * (Rat(4) * (f2 * f1 * g2) + Rat(8) * (f2 * g1 * h1) - Rat(8) * (f1 * g1 * g1) -
                         Rat(4) * (f2 * f2 * h2));
    return {-minus_p, q};
}

}  // namespace

std::pair<int, int> branch_curvature_signs(const UniPoly& f0, const UniPoly& f1, const UniPoly& f2, const Rat& omega,
                                           const Rat& x) {
    UniPoly f0w = f0 - UniPoly::constant(omega);
    UniPoly delta = f1 * f1 - Rat(4) * (f2 * f0w);
    PQ pq = branch_pq(f1, f2, delta);
    Rat p = pq.p(x), q = pq.q(x), d = delta(x);
    int s2 = f2.sign_at(x);
    return {sign_quadratic(-p, q, d) * s2, sign_quadratic(p, q, d) * s2};
}

BranchReport branch_analysis(const UniPoly& f0, const UniPoly& f1, const UniPoly& f2, const Rat& omega,
                             const Int& r) {
    if (f2.is_zero()) throw Error(Errc::ZeroLeadingSlice, "branch analysis needs f2 != 0");
    UniPoly f0w = f0 - UniPoly::constant(omega);
    UniPoly delta = f1 * f1 - Rat(4) * (f2 * f0w);
    BranchReport rep;
    auto add = [&](const UniPoly& p, const Rat& eps) {
        auto v = approx_roots(p, eps, -r, r);
        rep.breakpoints.insert(rep.breakpoints.end(), v.begin(), v.end());
    };
    add(f2, rat(1, 8));
    add(delta, rat(1, 8));
    PQ pq;
    if (!delta.is_zero()) {
        pq = branch_pq(f1, f2, delta);
        add(pq.p * pq.q, rat(1, 4));
        add(pq.p * pq.p - pq.q * pq.q * delta, rat(1, 4));
    }
    std::sort(rep.breakpoints.begin(), rep.breakpoints.end());
    Grid g = make_grid(rep.breakpoints, -r, r);
    rep.columns = g.columns;
    for (const auto& [lo, hi] : g.intervals) {
        BranchInterval bi;
        bi.lo = lo;
        bi.hi = hi;
        Rat xm = Rat(lo + hi) / 2;
        bi.sign_f2 = f2.sign_at(xm);
        bi.sign_delta = delta.sign_at(xm);
        if (bi.sign_delta > 0) {
            Rat p = pq.p(xm), q = pq.q(xm), d = delta(xm);
            bi.plus = curvature_of(sign_quadratic(-p, q, d) * bi.sign_f2);
            bi.minus = curvature_of(sign_quadratic(p, q, d) * bi.sign_f2);
        }
        rep.intervals.push_back(bi);
    }
    return rep;
}

// ---------------------------------------------------------------- builders

DivisionDescription dd_degy0(const YSlices& s, const Rat& omega, const Int& rx, const Int& ry) {
    (void)omega;
    DivisionDescription dd;
    dd.box = Polyhedron2::box(Rat(-rx), Rat(rx), Rat(-ry), Rat(ry));
    Grid g = make_grid(approx_roots(s[0].derivative(), rat(1, 4), -rx, rx), -rx, rx);
    for (const auto& k : g.columns) dd.lines.push_back(column_line(k));
    for (const auto& [lo, hi] : g.intervals) dd.convex_side.push_back(strip(lo, hi, ry));
    return dd;
}

DivisionDescription dd_degy1(const YSlices& s, const Rat& omega, const Int& rx, const Int& ry) {
    const UniPoly& f1 = s[1];
    if (f1.is_zero()) throw Error(Errc::ZeroLeadingSlice, "deg_y = 1 needs f1 != 0");
    UniPoly f0w = s[0] - UniPoly::constant(omega);
    UniPoly a1 = f1.derivative(), a2 = a1.derivative();
    UniPoly b1 = s[0].derivative(), b2 = b1.derivative();
    // numerator of y_*'' times f1^3, y_* = (omega - f0) / f1
    UniPoly n = f1 * (f0w * a2 + Rat(2) * (b1 * a1)) - Rat(2) * (f0w * a1 * a1) - f1 * f1 * b2;

    std::vector<Rat> bp = approx_roots(f1, rat(1, 4), -rx, rx);
    if (!n.is_zero()) {
        auto v = approx_roots(n, rat(1, 4), -rx, rx);
        bp.insert(bp.end(), v.begin(), v.end());
    }
    DivisionDescription dd;
    dd.box = Polyhedron2::box(Rat(-rx), Rat(rx), Rat(-ry), Rat(ry));
    Grid g = make_grid(bp, -rx, rx);
    for (const auto& k : g.columns) dd.lines.push_back(column_line(k));
    for (const auto& [lo, hi] : g.intervals) {
        Rat xm = Rat(lo + hi) / 2;
        int sf1 = f1.sign_at(xm);
        Curvature c = curvature_of(n.sign_at(xm) * sf1);
        // f1 > 0: sublevel set is the hypograph of y_*
        classify(dd, strip(lo, hi, ry), true, sf1, c);
    }
    return dd;
}

DivisionDescription dd_degy2(const YSlices& s, const Rat& omega, const Int& rx, const Int& ry) {
    if (s[2].is_zero()) throw Error(Errc::ZeroLeadingSlice, "deg_y = 2 needs f2 != 0");
    Quad q = quad_of(s, omega);
    DivisionDescription dd;
    dd.box = Polyhedron2::box(Rat(-rx), Rat(rx), Rat(-ry), Rat(ry));

    if (q.delta.is_zero()) {
        // f - omega = f2 (y - y_+)^2 with y_+ affine
        auto [quo, rem] = divmod(q.f1, q.f2);
        if (!rem.is_zero() || quo.degree() > 1) throw Error(Errc::Internal, "double-root branch is not a line");
        Rat alpha = -quo.coeff(1) / 2, beta = -quo.coeff(0) / 2;
        LatticeLine l = LatticeLine::make(alpha, Rat(-1), -beta);
        Grid g = make_grid(approx_roots(q.f2, rat(1, 8), -rx, rx), -rx, rx);
        for (const auto& k : g.columns) dd.lines.push_back(column_line(k));
        dd.lines.push_back(l);
        Rat a(l.a), b(l.b), c(l.c);
        for (const auto& [lo, hi] : g.intervals) {
            dd.convex_side.push_back(with_row(strip(lo, hi, ry), {-a, -b, -(c + 1)}));
            dd.convex_side.push_back(with_row(strip(lo, hi, ry), {a, b, c - 1}));
        }
        return dd;
    }

    BranchReport rep = branch_analysis(s[0], s[1], s[2], omega, rx);
    for (const auto& k : rep.columns) dd.lines.push_back(column_line(k));
    Rat big_m = abs_sum_slices(s);
    Rat big_r = Rat(std::max(rx, ry));
    for (const auto& bi : rep.intervals) {
        const Int &lo = bi.lo, &hi = bi.hi;
        if (bi.sign_delta < 0) {
            dd.convex_side.push_back(strip(lo, hi, ry));
            continue;
        }
        if (lo == hi) {
            dd.lines.push_back(column_line(lo));
            continue;
        }
        Curvature up = bi.sign_f2 > 0 ? bi.plus : bi.minus;
        Curvature down = bi.sign_f2 > 0 ? bi.minus : bi.plus;
        auto mid_root = [&](const Int& x) -> Rat { return -q.f1(Rat(x)) / (2 * q.f2(Rat(x))); };
        auto split = [&](const Int& l, const Int& u, const Row& top, const Row& bottom) {
            classify(dd, with_row(strip(l, u, ry), top), true, bi.sign_f2, up);
            classify(dd, with_row(strip(l, u, ry), bottom), false, bi.sign_f2, down);
        };

        if (up != Curvature::Convex && down != Curvature::Concave) {
            // concave over convex: segment through the root midpoints at both ends
            Rat yl = mid_root(lo), yu = mid_root(hi);
            Rat slope = (yu - yl) / Rat(hi - lo);
            check_separator(q, line_poly(Rat(lo), yl, slope), lo, hi, bi.sign_f2);
            split(lo, hi, above(Rat(lo), yl, slope), below(Rat(lo), yl, slope));
        } else if (up == Curvature::Convex && down == Curvature::Concave) {
            // convex over concave: tangent-direction line where the gap is smallest
            UniPoly f2p = q.f2.derivative();
            UniPoly gap = q.delta.derivative() * q.f2 * q.f2 - Rat(2) * (q.f2 * f2p * q.delta);
            Grid sub = make_grid(approx_roots(gap, rat(1, 4), lo, hi), lo, hi);
            for (const auto& k : sub.columns) dd.lines.push_back(column_line(k));
            Rat k0 = 400 * big_m * big_m * big_m * pow_rat(big_r, 5);
            Rat eps = 1 / (4 * k0 * k0);
            Rat eps_hat = eps / k0;
            for (const auto& [l, u] : sub.intervals) {
                if (l == u) {
                    dd.lines.push_back(column_line(l));
                    continue;
                }
                auto ratio = [&](const Int& x) -> Rat {
                    Rat v = q.f2(Rat(x));
                    return q.delta(Rat(x)) / (v * v);
                };
                Rat xh(ratio(l) <= ratio(u) ? l : u);
                Rat f1v = q.f1(xh), f2v = q.f2(xh), dv = q.delta(xh);
                Rat X = dv * (f2p(xh) * f1v - f2v * q.f1.derivative()(xh));
                Rat Y = -dv * f2p(xh) + f2v * q.delta.derivative()(xh) / 2;
                Rat Z = 2 * f2v * f2v * dv;
                Rat root = approx_sqrt(dv, eps_hat);
                Rat slope = ((X + Y * root) / Z + (X - Y * root) / Z) / 2;
                Rat yh = -f1v / (2 * f2v);
                check_separator(q, line_poly(xh, yh, slope), l, u, bi.sign_f2);
                split(l, u, above(xh, yh, slope), below(xh, yh, slope));
            }
        } else {
            // same curvature: thin quadrangle around the chord of the outer branch
            bool outer_up = up != Curvature::Convex;
            Rat eps = 1 / Rat(2 * (hi - lo));
            auto bracket = [&](const Int& x) -> RootInterval {
                UniPoly slice({q.f0w(Rat(x)), q.f1(Rat(x)), q.f2(Rat(x))});
                auto ivs = isolate_roots(slice, eps);
                if (ivs.size() != 2) throw Error(Errc::Internal, "expected two branch roots");
                return outer_up ? ivs[1] : ivs[0];
            };
            RootInterval bl = bracket(lo), bu = bracket(hi);
            Rat w(hi - lo);
            Rat s_top = (bu.hi - bl.hi) / w, s_bot = (bu.lo - bl.lo) / w;
            Polyhedron2 quad = Polyhedron2::from_points({{Rat(lo), bl.lo}, {Rat(lo), bl.hi}, {Rat(hi), bu.lo}, {Rat(hi), bu.hi}});
            Polyhedron2 clipped = quad.intersect(dd.box);
            if (!clipped.is_empty()) dd.lines.push_back(line_in_thin_polytope(clipped.vertices()));
            split(lo, hi, above(Rat(lo), bl.hi, s_top), below(Rat(lo), bl.lo, s_bot));
        }
    }
    return dd;
}

DivisionDescription dd_degy0(const YSlices& s, const Rat& omega, const Int& r) { return dd_degy0(s, omega, r, r); }
DivisionDescription dd_degy1(const YSlices& s, const Rat& omega, const Int& r) { return dd_degy1(s, omega, r, r); }
DivisionDescription dd_degy2(const YSlices& s, const Rat& omega, const Int& r) { return dd_degy2(s, omega, r, r); }

// ---------------------------------------------------------------- deg_y = 3

ShearData shear_for(const BiPoly& f, const Int& r) {
    UniPoly c({f.coeff(3, 0), f.coeff(2, 1), f.coeff(1, 2), f.coeff(0, 3)});
    if (c.degree() != 3) throw Error(Errc::ZeroLeadingSlice, "shear needs a y^3 term");
    UniPoly sqf = squarefree_part(c);
    auto ivs = isolate_roots(sqf, Rat(1));
    ShearData sd;
    // prefer a rational direction, which makes the shear exact
    const RootInterval* chosen = &ivs[0];
    for (const auto& iv : ivs) {
        if (auto e = rational_root_in(sqf, iv)) {
            sd.abar_exact = *e;
            chosen = &iv;
            break;
        }
    }
    RootInterval iv = *chosen;
    // Cauchy bound, valid for zero roots too
    Rat upper = 1;
    for (int i = 0; i < 3; ++i) upper = std::max<Rat>(upper, 1 + abs_rat(c.coeff(i) / c.lead()));
    sd.rbar = Rat(ceil_rat(upper) + 1);
    Rat m = std::max<Rat>(f.abs_sum(), Rat(1));
    Rat t = 2 * sd.rbar + 1, u = sd.rbar + 1;
    sd.eps = 1 / (144 * m * t * t * t * u * u * u * Rat(r * r * r));
    if (sd.abar_exact) {
        sd.a_eps = *sd.abar_exact;
        sd.abar_lo = sd.abar_hi = *sd.abar_exact;
    } else {
        refine_root(sqf, iv, sd.eps);
        if (sqf.sign_at(iv.lo) * sqf.sign_at(iv.hi) >= 0) throw Error(Errc::Internal, "shear root bracket lost");
        sd.abar_lo = iv.lo;
        sd.abar_hi = iv.hi;
        sd.a_eps = simplest_between(iv.lo, iv.hi);
    }
    sd.f_eps = f - BiPoly::monomial(c(sd.a_eps), 3, 0);
    return sd;
}

DivisionDescription dd_degy3(const YSlices& s, const Rat& omega, const Int& r) {
    return dd_degy3(s, omega, r, shear_for(s.oriented, r));
}

DivisionDescription dd_degy3(const YSlices& s, const Rat& omega, const Int& r, const ShearData& sd) {
    (void)s;
    Int p = sd.a_eps.get_num(), qd = sd.a_eps.get_den();
    // (u, v) = (x, q y - p x); g(v, u) = f_eps(u, (v + p u) / q)
    BiPoly g = substitute_affine(sd.f_eps, 0, 1, Rat(1) / Rat(qd), Rat(p) / Rat(qd), 0, 0);
    YSlices gs = slice_as_is(g);
    Int rv = (qd + abs(p)) * r;
    DivisionDescription gdd;
    switch (gs.deg_y) {
        case 2: gdd = dd_degy2(gs, omega, rv, r); break;
        case 1: gdd = dd_degy1(gs, omega, rv, r); break;
        default: gdd = dd_degy0(gs, omega, rv, r); break;
    }
    Rat pr(p), qr(qd);
    auto map_row = [&](const Row& w) -> Row { return {w.b - w.a * pr, w.a * qr, w.c}; };
    auto map_poly = [&](const Polyhedron2& h) {
        std::vector<Row> rows;
        for (const auto& w : h.rows()) rows.push_back(map_row(w));
        return Polyhedron2(std::move(rows));
    };
    DivisionDescription dd;
    dd.box = Polyhedron2::square(Rat(r));
    for (const auto& h : gdd.convex_side) dd.convex_side.push_back(map_poly(h));
    for (const auto& h : gdd.concave_side) dd.concave_side.push_back(map_poly(h));
    for (const auto& l : gdd.lines) {
        Row w = map_row({Rat(l.a), Rat(l.b), Rat(l.c)});
        dd.lines.push_back(LatticeLine::make(w.a, w.b, w.c));
    }
    return dd;
}

namespace {

DivisionDescription dd_oriented(const YSlices& s, const Rat& omega, const Int& r) {
    switch (s.deg_y) {
        case 3: return dd_degy3(s, omega, r);
        case 2: return dd_degy2(s, omega, r);
        case 1: return dd_degy1(s, omega, r);
        default: return dd_degy0(s, omega, r);
    }
}

}  // namespace

DivisionDescription dd_cubic(const BiPoly& f, const Rat& omega, const Int& r) {
    YSlices s = slice_and_orient(f);
    DivisionDescription dd = dd_oriented(s, omega, r);
    return s.swapped ? swap_xy(dd) : dd;
}

// ---------------------------------------------------------------- solvers

SolveOutcome solve_degy0(const YSlices& s, const Polyhedron2& p) {
    if (s.deg_y > 0) throw Error(Errc::Unsupported, "solve_degy0 needs deg_y = 0");
    if (!p.is_bounded()) throw Error(Errc::UnboundedRegion, "solve_degy0 needs a bounded polyhedron");
    auto xr = integer_x_range(p);
    if (!xr) return SolveOutcome::infeasible();
    const UniPoly& f0 = s[0];
    UniPoly d = f0.derivative();
    Grid g = make_grid(approx_roots(d, rat(1, 4), xr->first, xr->second), xr->first, xr->second);
    SolveOutcome best;
    for (const auto& k : g.columns) {
        auto col = integer_column(p, k);
        if (col) best = better(best, SolveOutcome::optimal({k, col->first}, f0(Rat(k))));
    }
    for (const auto& [lo, hi] : g.intervals) {
        Polyhedron2 sub = p;
        sub.add(-1, 0, Rat(-lo)).add(1, 0, Rat(hi));
        bool increasing = d.sign_at(Rat(lo + hi) / 2) >= 0;
        auto o = ilp_min_linear(sub, increasing ? 1 : -1, 0);
        if (o.status == Status::Optimal) best = better(best, SolveOutcome::optimal(o.point, f0(Rat(o.point.x))));
    }
    return best;
}

SolveOutcome solve_cubic_bounded(const BiPoly& f, const Polyhedron2& p, SolveStats* stats) {
    YSlices s = slice_and_orient(f);
    if (!p.is_bounded()) throw Error(Errc::UnboundedRegion, "solve_cubic_bounded needs a bounded polyhedron");
    if (f.degree() <= 0) {
        auto o = ilp_min_linear(p, 1, 0);
        if (o.status == Status::Infeasible) return o;
        return SolveOutcome::optimal(o.point, f.coeff(0, 0));
    }
    if (s.deg_y == 0 && !s.swapped) return solve_degy0(s, p);
    Int r = box_radius(p);
    std::optional<ShearData> sd;
    if (s.deg_y == 3) sd = shear_for(s.oriented, r);
    auto builder = [&](const Rat& omega) {
        DivisionDescription dd = sd ? dd_degy3(s, omega, r, *sd) : dd_oriented(s, omega, r);
        return s.swapped ? swap_xy(dd) : dd;
    };
    return minimize_by_bisection(p, f, builder, stats);
}

}  // namespace zpoly
