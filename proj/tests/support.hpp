#pragma once

#include "zpoly/regions.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace zpoly::testing {

inline SolveOutcome brute_min(const BiPoly& f, const Polyhedron2& p, long r) {
    SolveOutcome best;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
            if (p.contains(Rat(x), Rat(y))) best = better(best, SolveOutcome::optimal({x, y}, f(Rat(x), Rat(y))));
    return best;
}

inline bool covered(const DivisionDescription& dd, const Point2& z) {
    for (const auto& p : dd.convex_side)
        if (p.contains(z)) return true;
    for (const auto& p : dd.concave_side)
        if (p.contains(z)) return true;
    for (const auto& l : dd.lines)
        if (l.contains(z)) return true;
    return false;
}

// Every lattice point of piece ∩ box in the hull of the selected points is itself selected.
inline bool lattice_convex(const Polyhedron2& piece, long r, const std::function<bool(const Point2&)>& sel) {
    std::vector<Point2> in, all;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y) {
            Point2 z{x, y};
            if (!piece.contains(z)) continue;
            all.push_back(z);
            if (sel(z)) in.push_back(z);
        }
    if (in.size() < 3) {
        if (in.size() < 2) return true;
        std::vector<RatPoint> seg{{Rat(in[0].x), Rat(in[0].y)}, {Rat(in[1].x), Rat(in[1].y)}};
        Polyhedron2 h = Polyhedron2::from_points(seg);
        for (const auto& z : all)
            if (h.contains(z) && !sel(z)) return false;
        return true;
    }
    std::vector<RatPoint> hv;
    for (const auto& v : convex_hull(in)) hv.push_back({Rat(v.x), Rat(v.y)});
    if (hv.size() < 3) {
        std::sort(in.begin(), in.end());
        hv = {{Rat(in.front().x), Rat(in.front().y)}, {Rat(in.back().x), Rat(in.back().y)}};
    }
    Polyhedron2 h = Polyhedron2::from_points(hv);
    for (const auto& z : all)
        if (h.contains(z) && !sel(z)) return false;
    return true;
}

// Empty string when dd is lattice-valid for f at omega on [-r, r]^2, else a description of the first problem.
inline std::string division_problem(const DivisionDescription& dd, const BiPoly& f, const Rat& omega, long r) {
    Polyhedron2 box = Polyhedron2::square(Rat(r));
    auto low = [&](const Point2& z) { return f(Rat(z.x), Rat(z.y)) <= omega; };
    auto high = [&](const Point2& z) { return !low(z); };
    bool any = false;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y) {
            Point2 z{x, y};
            if (!covered(dd, z)) return "uncovered " + std::to_string(x) + "," + std::to_string(y);
            any = any || low(z);
        }
    for (const auto& p : dd.convex_side)
        if (!lattice_convex(p.intersect(box), r, low)) return "convex piece fails " + p.to_string();
    for (const auto& q : dd.concave_side)
        if (!lattice_convex(q.intersect(box), r, high)) return "concave piece fails " + q.to_string();
    SublevelOracle oracle(f, omega);
    auto pt = feasible_in_division(dd, oracle);
    if (pt.has_value() != any) return "feasibility disagrees with enumeration";
    if (pt && !low(*pt)) return "returned point is not in the sublevel set";
    return {};
}

}  // namespace zpoly::testing
