#pragma once

#include "zpoly/exactmath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zpoly {

struct Point2 {
    Int x, y;
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    // lexicographic: x first, then y
    friend bool operator<(const Point2& a, const Point2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

struct RatPoint {
    Rat x, y;
    friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const RatPoint& a, const RatPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

// a*x + b*y <= c
struct Row {
    Rat a, b, c;
};

class Polyhedron2 {
public:
    Polyhedron2() = default;
    explicit Polyhedron2(std::vector<Row> rows) : rows_(std::move(rows)) {}

    static Polyhedron2 box(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1);
    static Polyhedron2 square(const Rat& r) { return box(-r, r, -r, r); }
    // Convex hull of the given points as an inequality system; handles segments and points.
    static Polyhedron2 from_points(const std::vector<RatPoint>& pts);

    const std::vector<Row>& rows() const { return rows_; }
    Polyhedron2& add(const Rat& a, const Rat& b, const Rat& c);
    Polyhedron2 intersect(const Polyhedron2& o) const;

    bool contains(const Rat& x, const Rat& y) const;
    bool contains(const Point2& p) const { return contains(Rat(p.x), Rat(p.y)); }

    bool is_empty() const;
    bool is_bounded() const;
    // Vertices in counterclockwise order; requires a bounded set.
    std::vector<RatPoint> vertices() const;
    // Real y-range of the vertical line at x, if it meets the set. Bounds may be absent when unbounded.
    std::optional<std::pair<std::optional<Rat>, std::optional<Rat>>> column(const Rat& x) const;

    std::string to_string() const;

private:
    std::vector<Row> rows_;
};

// Generators of the set in V-form. For a pointed set, P = conv(vertices) + cone(rays).
struct VRep {
    bool empty = false;
    std::vector<RatPoint> vertices;
    std::vector<RatPoint> rays;  // cone generators, possibly redundant
    std::optional<RatPoint> lineality;
};
VRep vrep(const Polyhedron2& p);

// Primitive integer direction parallel to a nonzero rational vector.
Point2 primitive_direction(const RatPoint& d);

// a*x + b*y = c with gcd(a, b, c) = 1 and (a, b) != 0.
struct LatticeLine {
    Int a, b, c;

    static LatticeLine make(const Rat& a, const Rat& b, const Rat& c);
    static LatticeLine through(const Point2& p, const Point2& q);
    // sign of a*x + b*y - c
    int side(const Rat& x, const Rat& y) const;
    bool contains(const Point2& p) const { return a * p.x + b * p.y == c; }
    friend bool operator==(const LatticeLine& u, const LatticeLine& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c;
    }
    std::string to_string() const;
};

struct Cell {
    std::vector<int> sign_vector;
    RatPoint interior;
    Polyhedron2 region;
};

enum class Status { Infeasible, Optimal, Unbounded };

struct SolveOutcome {
    Status status = Status::Infeasible;
    Point2 point;
    Rat value;
    Point2 ray;

    static SolveOutcome infeasible() { return {}; }
    static SolveOutcome optimal(Point2 p, Rat v) { return {Status::Optimal, std::move(p), std::move(v), {}}; }
    static SolveOutcome unbounded(Point2 p, Point2 r) { return {Status::Unbounded, std::move(p), Rat(0), std::move(r)}; }
};

const char* status_name(Status s);

// Keeps the better of two outcomes: unbounded beats optimal, lower value then lexicographic point wins.
SolveOutcome better(const SolveOutcome& a, const SolveOutcome& b);

// Vertices (counterclockwise) of the convex hull of the integer points in P inside box.
std::vector<Point2> integer_hull(const Polyhedron2& p, const Polyhedron2& box);
std::vector<Point2> integer_hull(const Polyhedron2& p);

std::optional<Point2> ilp_point(const Polyhedron2& p);

SolveOutcome ilp_min_linear(const Polyhedron2& p, const Rat& cx, const Rat& cy);

Rat polygon_area(const std::vector<RatPoint>& pts);

LatticeLine line_in_thin_polytope(const std::vector<RatPoint>& k);

std::vector<Cell> arrangement_cells(const std::vector<LatticeLine>& lines, const Polyhedron2& box);

// Convex hull, counterclockwise, collinear points dropped.
std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts);
std::vector<Point2> convex_hull(std::vector<Point2> pts);

}  // namespace zpoly
