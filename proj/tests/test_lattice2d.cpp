#include "doctest.h"
#include "zpoly/lattice2d.hpp"

#include <random>
#include <set>

using namespace zpoly;

namespace {

std::vector<Point2> enumerate(const Polyhedron2& p, long r) {
    std::vector<Point2> out;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
            if (p.contains(Rat(x), Rat(y))) out.push_back({Int(x), Int(y)});
    return out;
}

std::set<std::pair<long, long>> as_set(const std::vector<Point2>& v) {
    std::set<std::pair<long, long>> s;
    for (const auto& p : v) s.insert({p.x.get_si(), p.y.get_si()});
    return s;
}

Polyhedron2 random_polygon(std::mt19937_64& gen, long r) {
    std::uniform_int_distribution<long> c(-r * 4, r * 4), n(3, 6);
    std::vector<RatPoint> pts;
    long k = n(gen);
    for (long i = 0; i < k; ++i) pts.push_back({rat(c(gen), 4), rat(c(gen), 4)});
    return Polyhedron2::from_points(pts);
}

}  // namespace

TEST_CASE("integer_hull examples") {
    auto h = integer_hull(Polyhedron2::box(rat(1, 2), rat(5, 2), rat(1, 2), rat(5, 2)));
    CHECK(as_set(h) == std::set<std::pair<long, long>>{{1, 1}, {2, 1}, {2, 2}, {1, 2}});
    auto t = integer_hull(Polyhedron2::from_points({{0, 0}, {rat(7, 2), 0}, {0, rat(7, 2)}}));
    CHECK(as_set(t) == std::set<std::pair<long, long>>{{0, 0}, {3, 0}, {0, 3}});
    CHECK(integer_hull(Polyhedron2::box(rat(2, 5), rat(3, 5), 0, 1)).empty());
    Polyhedron2 half;
    half.add(1, 0, 0);
    CHECK_THROWS_AS(integer_hull(half), Error);
}

TEST_CASE("integer_hull is counterclockwise") {
    auto h = integer_hull(Polyhedron2::square(3));
    REQUIRE(h.size() == 4);
    for (size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % 4];
        const auto& c = h[(i + 2) % 4];
        CHECK((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0);
    }
}

TEST_CASE("integer_hull matches brute force") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 200; ++trial) {
        Polyhedron2 p = random_polygon(gen, 30);
        auto h = integer_hull(p);
        auto pts = enumerate(p, 30);
        CHECK(as_set(h) == as_set(convex_hull(pts)));
    }
}

TEST_CASE("ilp_point") {
    Polyhedron2 p;
    p.add(-1, 0, -10).add(0, -1, 3).add(1, 1, 100);
    auto pt = ilp_point(p);
    REQUIRE(pt);
    CHECK(p.contains(*pt));

    Polyhedron2 parity;
    parity.add(2, 0, 1).add(-2, 0, -1).add(0, 1, 1).add(0, -1, 0);
    CHECK_FALSE(ilp_point(parity));

    Polyhedron2 seg;
    seg.add(3, -2, 0).add(-3, 2, 0).add(-1, 0, -1).add(1, 0, 9);
    auto s = ilp_point(seg);
    REQUIRE(s);
    CHECK(seg.contains(*s));
    CHECK(s->x % 2 == 0);

    // unbounded sets with and without lattice points
    Polyhedron2 strip;
    strip.add(0, 1, rat(3, 10)).add(0, -1, rat(-1, 10));
    CHECK_FALSE(ilp_point(strip));
    Polyhedron2 slanted;
    slanted.add(1, -1, rat(1, 3)).add(-1, 1, rat(1, 3));
    auto sl = ilp_point(slanted);
    REQUIRE(sl);
    CHECK(sl->x == sl->y);
    Polyhedron2 cone;
    cone.add(-1, 0, -rat(1000, 7)).add(3, -7, -rat(1, 2));
    auto cp = ilp_point(cone);
    REQUIRE(cp);
    CHECK(cone.contains(*cp));
    CHECK(ilp_point(Polyhedron2()));
}

TEST_CASE("ilp_point agrees with enumeration on bounded sets") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        Polyhedron2 p = random_polygon(gen, 3);
        auto pt = ilp_point(p);
        auto pts = enumerate(p, 3);
        CHECK(pt.has_value() == !pts.empty());
        if (pt) CHECK(p.contains(*pt));
    }
}

TEST_CASE("ilp_min_linear") {
    auto o = ilp_min_linear(Polyhedron2::box(rat(1, 2), rat(5, 2), rat(1, 2), rat(5, 2)), 1, 0);
    CHECK(o.status == Status::Optimal);
    CHECK(o.point.x == 1);
    CHECK(o.value == 1);

    Polyhedron2 ray;
    ray.add(1, 0, 0).add(0, 1, 0).add(0, -1, 0);
    auto u = ilp_min_linear(ray, 1, 0);
    CHECK(u.status == Status::Unbounded);
    CHECK(u.ray == Point2{-1, 0});
    CHECK(u.point == Point2{0, 0});

    Polyhedron2 tri;
    tri.add(-1, 0, -rat(1, 5)).add(0, -1, -rat(7, 10)).add(1, 1, rat(7, 5));
    CHECK(ilp_min_linear(tri, 1, 1).status == Status::Infeasible);

    // optimum along an unbounded face direction orthogonal to c
    Polyhedron2 q;
    q.add(0, -1, 2).add(-1, 0, -3);
    auto m = ilp_min_linear(q, 0, 1);
    CHECK(m.status == Status::Optimal);
    CHECK(m.value == -2);
}

TEST_CASE("ilp_min_linear agrees with enumeration") {
    std::mt19937_64 gen(9);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 150; ++trial) {
        Polyhedron2 p = random_polygon(gen, 8);
        Rat cx = c(gen), cy = c(gen);
        auto o = ilp_min_linear(p, cx, cy);
        auto pts = enumerate(p, 8);
        if (pts.empty()) {
            CHECK(o.status == Status::Infeasible);
            continue;
        }
        REQUIRE(o.status == Status::Optimal);
        Point2 best = pts[0];
        Rat bv = cx * Rat(best.x) + cy * Rat(best.y);
        for (const auto& w : pts) {
            Rat v = cx * Rat(w.x) + cy * Rat(w.y);
            if (v < bv || (v == bv && w < best)) {
                best = w;
                bv = v;
            }
        }
        CHECK(o.value == bv);
        CHECK(o.point == best);
    }
}

TEST_CASE("line_in_thin_polytope examples") {
    auto l = line_in_thin_polytope({{0, 0}, {2, 0}, {2, rat(1, 5)}, {0, rat(1, 5)}});
    CHECK(l.contains({0, 0}));
    CHECK(l.contains({1, 0}));
    CHECK(l.contains({2, 0}));
    auto l2 = line_in_thin_polytope({{-1, -rat(1, 10)}, {1, -rat(1, 10)}, {1, rat(1, 10)}, {-1, rat(1, 10)}});
    CHECK(l2 == LatticeLine{0, 1, 0});
    CHECK_NOTHROW(line_in_thin_polytope({{rat(3, 10), rat(3, 10)}, {rat(7, 10), rat(3, 10)},
                                         {rat(7, 10), rat(7, 10)}, {rat(3, 10), rat(7, 10)}}));
    CHECK_THROWS_AS(line_in_thin_polytope({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), Error);
    auto single = line_in_thin_polytope({{rat(9, 10), rat(9, 10)}, {rat(11, 10), rat(9, 10)}, {1, rat(11, 10)}});
    CHECK(single.contains({1, 1}));
}

TEST_CASE("arrangement_cells examples") {
    Polyhedron2 b = Polyhedron2::square(2);
    auto c = arrangement_cells({{1, 0, 0}, {0, 1, 0}}, b);
    CHECK(c.size() == 4);
    std::set<std::vector<int>> svs;
    for (const auto& cell : c) svs.insert(cell.sign_vector);
    CHECK(svs == std::set<std::vector<int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(arrangement_cells({{1, 0, 0}}, Polyhedron2::square(1)).size() == 2);
    CHECK(arrangement_cells({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}}, b).size() == 6);
}

TEST_CASE("arrangement cells tile the box") {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<LatticeLine> lines;
        for (int i = 0; i < 4; ++i) {
            long a = c(gen), b = c(gen);
            if (a == 0 && b == 0) continue;
            auto l = LatticeLine::make(a, b, c(gen));
            if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
        }
        Polyhedron2 box = Polyhedron2::square(5);
        auto cells = arrangement_cells(lines, box);
        Rat total(0);
        for (const auto& cell : cells) {
            total += polygon_area(cell.region.vertices());
            for (size_t i = 0; i < lines.size(); ++i)
                CHECK(lines[i].side(cell.interior.x, cell.interior.y) == cell.sign_vector[i]);
        }
        CHECK(total == 100);
    }
}
