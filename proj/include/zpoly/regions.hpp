#pragma once

#include "zpoly/lattice2d.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace zpoly {

struct DivisionDescription {
    std::vector<Polyhedron2> convex_side;   // sublevel set convex on each piece
    std::vector<Polyhedron2> concave_side;  // strict superlevel set convex on each piece
    std::vector<LatticeLine> lines;
    Polyhedron2 box;

    size_t piece_count() const { return convex_side.size() + concave_side.size() + lines.size(); }
};

// Memoized column data for a fixed f. Not thread-safe.
class ColumnCache {
public:
    explicit ColumnCache(const BiPoly& f);

    const BiPoly& f() const { return f_; }
    const PointEval& eval() const { return eval_; }
    // Minimum of L*f(x, y) over integers lo <= y <= hi, with the smallest minimizing y.
    std::pair<Int, Int> column_min(const Int& x, const Int& lo, const Int& hi);

private:
    const std::vector<Int>& critical(const Int& x);

    BiPoly f_;
    BiPoly fy_;
    PointEval eval_;
    std::map<Int, std::vector<Int>> crit_;
    std::map<std::tuple<Int, Int, Int>, std::pair<Int, Int>> mins_;
};

// Decides f <= omega at lattice points; omega is a half-integer for integer-valued f.
class SublevelOracle {
public:
    SublevelOracle(const BiPoly& f, const Rat& omega);
    SublevelOracle(std::shared_ptr<ColumnCache> cache, const Rat& omega);

    const BiPoly& f() const { return cache_->f(); }
    const Rat& omega() const { return omega_; }
    bool feasible(const Point2& p) const;
    ColumnCache& cache() const { return *cache_; }
    std::shared_ptr<ColumnCache> shared_cache() const { return cache_; }

private:
    std::shared_ptr<ColumnCache> cache_;
    Rat omega_;
    Int scaled_omega_;  // floor(L * omega)
};

struct SolveStats {
    long bisection_steps = 0;
    long pieces = 0;
    std::optional<Rat> certified_radius;
};

// Integer column range [lo, hi] of a bounded set at x.
std::optional<std::pair<Int, Int>> integer_column(const Polyhedron2& p, const Int& x);
// Integer x-range of a bounded set; nullopt when empty.
std::optional<std::pair<Int, Int>> integer_x_range(const Polyhedron2& p);
// Smallest R >= 1 with P inside [-R, R]^2.
Int box_radius(const Polyhedron2& p);

std::optional<Point2> point_outside_convex(const Polyhedron2& p, const std::function<bool(const Point2&)>& member);

std::optional<Point2> point_inside_convex_sublevel(const Polyhedron2& p, const SublevelOracle& oracle);

// Lattice points of a line inside a set, as origin + t*dir for integer t in [tlo, thi];
// a missing bound means the set is unbounded along dir. dir is lexicographically positive.
struct LineSegmentParam {
    Point2 origin, dir;
    std::optional<Int> tlo, thi;
};
std::optional<LineSegmentParam> lattice_segment(const LatticeLine& l, const Polyhedron2& p);

// Every piece is intersected with restrict_to (the problem's P) before testing.
std::optional<Point2> feasible_in_division(const DivisionDescription& dd, const SublevelOracle& oracle,
                                           const Polyhedron2& restrict_to = Polyhedron2());

using DivisionBuilder = std::function<DivisionDescription(const Rat& omega)>;

SolveOutcome minimize_by_bisection(const Polyhedron2& p, const BiPoly& f, const DivisionBuilder& builder,
                                   SolveStats* stats = nullptr);

// One-dimensional outcomes use point = (x, 0) and ray = (+-1, 0).
SolveOutcome minimize_univariate(const UniPoly& p, const std::optional<Int>& lo, const std::optional<Int>& hi);

}  // namespace zpoly
