#include "zpoly/lattice2d.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zpoly {

namespace {

Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Int cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

template <class P>
std::vector<P> monotone_chain(std::vector<P> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<P> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool row_trivial(const Row& r) { return sgn(r.a) == 0 && sgn(r.b) == 0; }

// Intersection of the boundary lines of two rows, when not parallel.
std::optional<RatPoint> meet(const Row& r, const Row& s) {
    Rat det = r.a * s.b - r.b * s.a;
    if (sgn(det) == 0) return std::nullopt;
    return RatPoint{(r.c * s.b - r.b * s.c) / det, (r.a * s.c - r.c * s.a) / det};
}

bool dir_feasible(const std::vector<Row>& rows, const Rat& dx, const Rat& dy) {
    for (const auto& r : rows)
        if (sgn(r.a * dx + r.b * dy) > 0) return false;
    return true;
}

}  // namespace

std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts) { return monotone_chain(std::move(pts)); }
std::vector<Point2> convex_hull(std::vector<Point2> pts) { return monotone_chain(std::move(pts)); }

// ---------------------------------------------------------------- Polyhedron2

Polyhedron2 Polyhedron2::box(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
    Polyhedron2 p;
    p.add(1, 0, x1).add(-1, 0, -x0).add(0, 1, y1).add(0, -1, -y0);
    return p;
}

Polyhedron2 Polyhedron2::from_points(const std::vector<RatPoint>& pts) {
    auto h = convex_hull(pts);
    Polyhedron2 p;
    if (h.empty()) {
        p.add(0, 0, -1);
        return p;
    }
    if (h.size() == 1) return box(h[0].x, h[0].x, h[0].y, h[0].y);
    if (h.size() == 2) {
        Rat dx = h[1].x - h[0].x, dy = h[1].y - h[0].y;
        // normal (dy, -dx): equality; direction bounds at both ends
        Rat c = dy * h[0].x - dx * h[0].y;
        p.add(dy, -dx, c).add(-dy, dx, -c);
        p.add(dx, dy, dx * h[1].x + dy * h[1].y).add(-dx, -dy, -(dx * h[0].x + dy * h[0].y));
        return p;
    }
    for (size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        // counterclockwise: interior on the left of a->b
        Rat na = b.y - a.y, nb = a.x - b.x;
        p.add(na, nb, na * a.x + nb * a.y);
    }
    return p;
}

Polyhedron2& Polyhedron2::add(const Rat& a, const Rat& b, const Rat& c) {
    rows_.push_back({a, b, c});
    return *this;
}

Polyhedron2 Polyhedron2::intersect(const Polyhedron2& o) const {
    Polyhedron2 out = *this;
    out.rows_.insert(out.rows_.end(), o.rows_.begin(), o.rows_.end());
    return out;
}

bool Polyhedron2::contains(const Rat& x, const Rat& y) const {
    for (const auto& r : rows_)
        if (r.a * x + r.b * y > r.c) return false;
    return true;
}

bool Polyhedron2::is_empty() const { return vrep(*this).empty; }

bool Polyhedron2::is_bounded() const {
    VRep v = vrep(*this);
    return v.empty || (v.rays.empty() && !v.lineality);
}

std::vector<RatPoint> Polyhedron2::vertices() const {
    VRep v = vrep(*this);
    if (v.empty) return {};
    if (!v.rays.empty() || v.lineality) throw Error(Errc::UnboundedRegion, "vertices of an unbounded polyhedron");
    return v.vertices;
}

std::optional<std::pair<std::optional<Rat>, std::optional<Rat>>> Polyhedron2::column(const Rat& x) const {
    std::optional<Rat> lo, hi;
    for (const auto& r : rows_) {
        int sb = sgn(r.b);
        if (sb == 0) {
            if (r.a * x > r.c) return std::nullopt;
            continue;
        }
        Rat v = (r.c - r.a * x) / r.b;
        if (sb > 0) {
            if (!hi || v < *hi) hi = v;
        } else {
            if (!lo || v > *lo) lo = v;
        }
    }
    if (lo && hi && *lo > *hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::string Polyhedron2::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << "; ";
        os << rows_[i].a.get_str() << "*x + " << rows_[i].b.get_str() << "*y <= " << rows_[i].c.get_str();
    }
    return os.str();
}

VRep vrep(const Polyhedron2& p) {
    VRep out;
    std::vector<Row> rows;
    for (const auto& r : p.rows()) {
        if (row_trivial(r)) {
            if (sgn(r.c) < 0) {
                out.empty = true;
                return out;
            }
            continue;
        }
        rows.push_back(r);
    }
    if (rows.empty()) {
        out.vertices.push_back({Rat(0), Rat(0)});
        out.rays = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
        out.lineality = RatPoint{Rat(1), Rat(0)};
        return out;
    }
    // cone generators: directions along each boundary line and inward normals
    std::vector<RatPoint> cand;
    for (const auto& r : rows) {
        cand.push_back({r.b, -r.a});
        cand.push_back({-r.b, r.a});
        cand.push_back({-r.a, -r.b});
    }
    for (const auto& d : cand) {
        if (!dir_feasible(rows, d.x, d.y)) continue;
        if (!out.lineality && dir_feasible(rows, -d.x, -d.y)) out.lineality = d;
        bool dup = false;
        for (const auto& e : out.rays)
            if (sgn(e.x * d.y - e.y * d.x) == 0 && sgn(e.x * d.x + e.y * d.y) > 0) dup = true;
        if (!dup) out.rays.push_back(d);
    }
    std::vector<Row> pointed = rows;
    if (out.lineality) {
        // the slice orthogonal to the lineality direction
        const auto& l = *out.lineality;
        pointed.push_back({l.x, l.y, Rat(0)});
        pointed.push_back({-l.x, -l.y, Rat(0)});
    }
    std::vector<RatPoint> pts;
    for (size_t i = 0; i < pointed.size(); ++i)
        for (size_t j = i + 1; j < pointed.size(); ++j) {
            auto m = meet(pointed[i], pointed[j]);
            if (!m) continue;
            bool ok = true;
            for (const auto& r : pointed)
                if (r.a * m->x + r.b * m->y > r.c) {
                    ok = false;
                    break;
                }
            if (ok) pts.push_back(*m);
        }
    if (pts.empty()) {
        out.empty = true;
        out.rays.clear();
        out.lineality.reset();
        return out;
    }
    out.vertices = convex_hull(pts);
    return out;
}

Point2 primitive_direction(const RatPoint& d) {
    if (sgn(d.x) == 0 && sgn(d.y) == 0) throw Error(Errc::Internal, "zero direction");
    Int l;
    mpz_lcm(l.get_mpz_t(), d.x.get_den_mpz_t(), d.y.get_den_mpz_t());
    Int a = Rat(d.x * Rat(l)).get_num(), b = Rat(d.y * Rat(l)).get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {a / g, b / g};
}

// ---------------------------------------------------------------- LatticeLine

LatticeLine LatticeLine::make(const Rat& a, const Rat& b, const Rat& c) {
    if (sgn(a) == 0 && sgn(b) == 0) throw Error(Errc::DegenerateShape, "line with zero normal");
    Int l = 1;
    for (const Rat* v : {&a, &b, &c}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v->get_den_mpz_t());
    Int ia = Rat(a * Rat(l)).get_num(), ib = Rat(b * Rat(l)).get_num(), ic = Rat(c * Rat(l)).get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
    ia /= g;
    ib /= g;
    ic /= g;
    if (sgn(ia) < 0 || (sgn(ia) == 0 && sgn(ib) < 0)) {
        ia = -ia;
        ib = -ib;
        ic = -ic;
    }
    return {ia, ib, ic};
}

LatticeLine LatticeLine::through(const Point2& p, const Point2& q) {
    if (p == q) throw Error(Errc::DegenerateShape, "line through one point");
    Int a = q.y - p.y, b = p.x - q.x;
    return make(Rat(a), Rat(b), Rat(a * p.x + b * p.y));
}

int LatticeLine::side(const Rat& x, const Rat& y) const { return sgn(Rat(a) * x + Rat(b) * y - Rat(c)); }

std::string LatticeLine::to_string() const {
    return a.get_str() + "*x + " + b.get_str() + "*y = " + c.get_str();
}

// ---------------------------------------------------------------- outcomes

const char* status_name(Status s) {
    switch (s) {
    case Status::Infeasible: return "infeasible";
    case Status::Optimal: return "optimal";
    case Status::Unbounded: return "unbounded";
    }
    return "?";
}

SolveOutcome better(const SolveOutcome& a, const SolveOutcome& b) {
    if (a.status == Status::Unbounded) return a;
    if (b.status == Status::Unbounded) return b;
    if (a.status == Status::Infeasible) return b;
    if (b.status == Status::Infeasible) return a;
    if (a.value != b.value) return a.value < b.value ? a : b;
    return b.point < a.point ? b : a;
}

// ---------------------------------------------------------------- integer hull

namespace {

// Integer y-range of column x, as rows restricted to that column.
std::optional<std::pair<Int, Int>> int_column(const std::vector<Row>& rows, const Int& x) {
    std::optional<Rat> lo, hi;
    Rat rx(x);
    for (const auto& r : rows) {
        int sb = sgn(r.b);
        if (sb == 0) {
            if (r.a * rx > r.c) return std::nullopt;
            continue;
        }
        Rat v = (r.c - r.a * rx) / r.b;
        if (sb > 0) {
            if (!hi || v < *hi) hi = v;
        } else {
            if (!lo || v > *lo) lo = v;
        }
    }
    if (!lo || !hi) throw Error(Errc::UnboundedRegion, "unbounded column");
    Int a = ceil_rat(*lo), b = floor_rat(*hi);
    if (a > b) return std::nullopt;
    return std::make_pair(a, b);
}

std::vector<Row> swapped(const std::vector<Row>& rows) {
    std::vector<Row> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back({r.b, r.a, r.c});
    return out;
}

}  // namespace

std::vector<Point2> integer_hull(const Polyhedron2& p, const Polyhedron2& box) {
    Polyhedron2 q = p.intersect(box);
    VRep v = vrep(q);
    if (v.empty) return {};
    if (!v.rays.empty() || v.lineality) throw Error(Errc::UnboundedRegion, "integer_hull of an unbounded set");
    Rat x0 = v.vertices[0].x, x1 = x0, y0 = v.vertices[0].y, y1 = y0;
    for (const auto& w : v.vertices) {
        x0 = std::min<Rat>(x0, w.x);
        x1 = std::max<Rat>(x1, w.x);
        y0 = std::min<Rat>(y0, w.y);
        y1 = std::max<Rat>(y1, w.y);
    }
    bool swap = (x1 - x0) > (y1 - y0);
    std::vector<Row> rows;
    for (const auto& r : q.rows())
        if (!row_trivial(r)) rows.push_back(r);
    if (swap) {
        rows = swapped(rows);
        std::swap(x0, y0);
        std::swap(x1, y1);
    }
    std::vector<Point2> pts;
    for (Int x = ceil_rat(x0), e = floor_rat(x1); x <= e; ++x) {
        auto c = int_column(rows, x);
        if (!c) continue;
        pts.push_back({x, c->first});
        if (c->second != c->first) pts.push_back({x, c->second});
    }
    if (swap)
        for (auto& pt : pts) std::swap(pt.x, pt.y);
    return convex_hull(std::move(pts));
}

std::vector<Point2> integer_hull(const Polyhedron2& p) { return integer_hull(p, Polyhedron2()); }

namespace {

// Bounded subsets of P; the last one contains, for every lattice point of P, a translate of it
// by an integer combination of recession rays (and the lineality direction). The first one
// hugs the vertices so that returned points stay close to them.
std::vector<Polyhedron2> truncate_for_lattice(const Polyhedron2& p) {
    VRep v = vrep(p);
    if (v.empty) return {};
    Polyhedron2 q = p;
    if (v.lineality) {
        Point2 l = primitive_direction(*v.lineality);
        Rat la(l.x), lb(l.y);
        q.add(-la, -lb, Rat(0)).add(la, lb, Rat(l.x * l.x + l.y * l.y - 1));
        v = vrep(q);
        if (v.empty) return {};
        if (v.lineality) return {Polyhedron2::box(0, 0, 0, 0)};  // whole plane
    }
    if (v.rays.empty()) return {q};
    Rat rad(0);
    for (const auto& w : v.vertices) rad = std::max<Rat>(rad, std::max<Rat>(abs_rat(w.x), abs_rat(w.y)));
    Rat near = Rat(ceil_rat(rad));
    for (const auto& r : v.rays) {
        Point2 d = primitive_direction(r);
        rad += Rat(abs(d.x) + abs(d.y));
    }
    Rat far = Rat(ceil_rat(rad) + 1);
    return {q.intersect(Polyhedron2::square(near)), q.intersect(Polyhedron2::square(far))};
}

}  // namespace

std::optional<Point2> ilp_point(const Polyhedron2& p) {
    for (const auto& q : truncate_for_lattice(p)) {
        auto h = integer_hull(q);
        if (!h.empty()) return *std::min_element(h.begin(), h.end());
    }
    return std::nullopt;
}

SolveOutcome ilp_min_linear(const Polyhedron2& p, const Rat& cx, const Rat& cy) {
    auto qs = truncate_for_lattice(p);
    if (qs.empty()) return SolveOutcome::infeasible();
    auto h = integer_hull(qs.back());
    if (h.empty()) return SolveOutcome::infeasible();
    VRep v = vrep(p);
    for (const auto& r : v.rays) {
        if (sgn(cx * r.x + cy * r.y) < 0) return SolveOutcome::unbounded(*ilp_point(p), primitive_direction(r));
    }
    std::optional<Point2> best;
    Rat bv;
    for (const auto& w : h) {
        Rat val = cx * Rat(w.x) + cy * Rat(w.y);
        if (!best || val < bv || (val == bv && w < *best)) {
            best = w;
            bv = val;
        }
    }
    return SolveOutcome::optimal(*best, bv);
}

// ---------------------------------------------------------------- thin polytope

Rat polygon_area(const std::vector<RatPoint>& pts) {
    auto h = convex_hull(pts);
    if (h.size() < 3) return Rat(0);
    Rat s(0);
    for (size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return abs_rat(s) / 2;
}

LatticeLine line_in_thin_polytope(const std::vector<RatPoint>& k) {
    if (!(polygon_area(k) < rat(1, 2))) throw Error(Errc::TooFat, "polytope area is at least 1/2");
    Polyhedron2 poly = Polyhedron2::from_points(k);
    auto first = ilp_point(poly);
    if (!first) return LatticeLine{0, 1, 0};
    Rat fx(first->x);
    auto left = ilp_point(Polyhedron2(poly).add(1, 0, fx - 1));
    if (left) return LatticeLine::through(*left, *first);
    auto right = ilp_point(Polyhedron2(poly).add(-1, 0, -(fx + 1)));
    if (right) return LatticeLine::through(*first, *right);
    return LatticeLine{1, 0, first->x};
}

// ---------------------------------------------------------------- arrangements

namespace {

// Part of a convex polygon with a*x + b*y <= c.
std::vector<RatPoint> clip_polygon(const std::vector<RatPoint>& poly, const Row& r) {
    std::vector<RatPoint> out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const auto &p = poly[i], &q = poly[(i + 1) % n];
        Rat sp = r.a * p.x + r.b * p.y - r.c, sq = r.a * q.x + r.b * q.y - r.c;
        if (sgn(sp) <= 0) out.push_back(p);
        if ((sgn(sp) < 0 && sgn(sq) > 0) || (sgn(sp) > 0 && sgn(sq) < 0)) {
            Rat t = sp / (sp - sq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

}  // namespace

std::vector<Cell> arrangement_cells(const std::vector<LatticeLine>& lines, const Polyhedron2& box) {
    auto bv = box.vertices();
    if (bv.size() < 3) return {};
    std::vector<Row> lrows;
    for (const auto& l : lines) lrows.push_back({Rat(l.a), Rat(l.b), Rat(l.c)});
    std::vector<Row> brows;
    for (const auto& r : box.rows())
        if (!row_trivial(r)) brows.push_back(r);

    Rat xmin = bv[0].x, xmax = bv[0].x;
    for (const auto& w : bv) {
        xmin = std::min<Rat>(xmin, w.x);
        xmax = std::max<Rat>(xmax, w.x);
    }
    std::set<Rat> xs;
    for (const auto& w : bv) xs.insert(w.x);
    auto add_x = [&](const Rat& x) {
        if (x > xmin && x < xmax) xs.insert(x);
    };
    for (size_t i = 0; i < lrows.size(); ++i) {
        if (sgn(lrows[i].b) == 0) add_x(lrows[i].c / lrows[i].a);
        for (size_t j = i + 1; j < lrows.size(); ++j)
            if (auto m = meet(lrows[i], lrows[j])) add_x(m->x);
        for (const auto& br : brows)
            if (auto m = meet(lrows[i], br)) add_x(m->x);
    }
    std::vector<Rat> xv(xs.begin(), xs.end());
    std::map<std::vector<int>, RatPoint> seen;
    std::vector<std::vector<int>> order;
    for (size_t k = 0; k + 1 < xv.size(); ++k) {
        Rat xm = (xv[k] + xv[k + 1]) / 2;
        auto col = box.column(xm);
        if (!col || !col->first || !col->second) continue;
        Rat ylo = *col->first, yhi = *col->second;
        if (!(ylo < yhi)) continue;
        std::vector<Rat> ys{ylo, yhi};
        for (const auto& r : lrows) {
            if (sgn(r.b) == 0) continue;
            Rat y = (r.c - r.a * xm) / r.b;
            if (y > ylo && y < yhi) ys.push_back(y);
        }
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (size_t t = 0; t + 1 < ys.size(); ++t) {
            Rat ym = (ys[t] + ys[t + 1]) / 2;
            std::vector<int> sv;
            sv.reserve(lines.size());
            for (const auto& l : lines) sv.push_back(l.side(xm, ym));
            if (seen.emplace(sv, RatPoint{xm, ym}).second) order.push_back(sv);
        }
    }
    std::vector<Cell> cells;
    for (const auto& sv : order) {
        // clip the box polygon by each halfplane, then rebuild without redundant rows
        std::vector<RatPoint> poly = bv;
        for (size_t i = 0; i < lines.size() && poly.size() >= 3; ++i) {
            Row r = lrows[i];
            if (sv[i] > 0) r = {-r.a, -r.b, -r.c};
            poly = clip_polygon(poly, r);
        }
        cells.push_back({sv, seen[sv], Polyhedron2::from_points(poly)});
    }
    return cells;
}

}  // namespace zpoly
