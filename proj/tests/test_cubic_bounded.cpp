#include "doctest.h"
#include "zpoly/cubic_bounded.hpp"
#include "support.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace zpoly;
using zpoly::testing::brute_min;

namespace {

BiPoly xy(long c, int i, int j) { return BiPoly::monomial(Rat(c), i, j); }

BiPoly random_cubic(std::mt19937_64& gen, long bound = 9) {
    std::uniform_int_distribution<long> c(-bound, bound), keep(0, 2);
    BiPoly f;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            if (keep(gen) != 0) f.add_term(i, j, Rat(c(gen)));
    return f;
}

void check_division(const BiPoly& f, const Rat& omega, long r) {
    auto msg = testing::division_problem(dd_cubic(f, omega, Int(r)), f, omega, r);
    CHECK_MESSAGE(msg.empty(), f.to_string() << " w=" << to_string(omega) << ": " << msg);
}

}  // namespace

TEST_CASE("slice_and_orient") {
    auto s = slice_and_orient(xy(1, 0, 3) + xy(1, 1, 0));
    CHECK(s.swapped);
    CHECK(s.deg_y == 1);
    CHECK(s[0] == UniPoly({0, 0, 0, 1}));
    CHECK(s[1] == UniPoly({1}));
    auto c = slice_and_orient(xy(1, 3, 0));
    CHECK(c.deg_y == 0);
    CHECK_FALSE(c.swapped);
    auto q = slice_and_orient(xy(1, 2, 1) + xy(1, 0, 2));
    CHECK(q.deg_y == 2);
    CHECK(q[0].is_zero());
    CHECK(q[1] == UniPoly({0, 0, 1}));
    CHECK(q[2] == UniPoly({1}));
    CHECK_THROWS_AS(slice_and_orient(xy(1, 4, 0)), Error);
}

TEST_CASE("solve_degy0") {
    auto o = solve_degy0(slice_and_orient(xy(1, 2, 0)), Polyhedron2::square(3));
    CHECK(o.status == Status::Optimal);
    CHECK(o.point == Point2{0, -3});
    CHECK(o.value == 0);
    auto t = solve_degy0(slice_and_orient(xy(-1, 1, 0)), Polyhedron2::from_points({{0, 0}, {5, 0}, {0, 5}}));
    CHECK(t.point == Point2{5, 0});
    CHECK(t.value == -5);
    auto c = solve_degy0(slice_and_orient(xy(1, 3, 0) + xy(-3, 1, 0)), Polyhedron2::square(2));
    CHECK(c.point == Point2{-2, -2});
    CHECK(c.value == -2);
}

TEST_CASE("branch_analysis examples") {
    // y^2 = -x
    auto rep = branch_analysis(UniPoly({0, 1}), UniPoly(), UniPoly({1}), 0, 10);
    for (const auto& bi : rep.intervals)
        if (bi.hi < 0) {
            CHECK(bi.plus == Curvature::Concave);
            CHECK(bi.minus == Curvature::Convex);
        }
    auto a = branch_analysis(UniPoly({32, -16, -4, 1}), UniPoly({-32}), UniPoly({8, 4}), 0, 20);
    int seen = 0;
    for (const auto& bi : a.intervals)
        if (bi.lo >= 1 && bi.hi <= 4 && bi.sign_delta > 0) {
            ++seen;
            CHECK(bi.minus == Curvature::Convex);
            CHECK(bi.plus == Curvature::Concave);
        }
    CHECK(seen > 0);
    auto b = branch_analysis(UniPoly({336, 82, -8, 3}), UniPoly(), UniPoly({80, -20}), 0, 20);
    seen = 0;
    // f2 < 0 here, so the upper branch is y_-
    for (const auto& bi : b.intervals)
        if (bi.lo <= 10 && bi.hi >= 6 && bi.sign_delta > 0) {
            ++seen;
            CHECK_FALSE(bi.plus_on_top());
            CHECK(bi.minus == Curvature::Convex);
            CHECK(bi.plus == Curvature::Concave);
        }
    CHECK(seen > 0);
    CHECK_THROWS_AS(branch_analysis(UniPoly({1}), UniPoly({1}), UniPoly(), 0, 5), Error);
}

TEST_CASE("branch curvature signs match finite differences") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<long> c(-6, 6);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 150; ++trial) {
        UniPoly f0({c(gen), c(gen), c(gen), c(gen)}), f1({c(gen), c(gen), c(gen)}), f2({c(gen), c(gen)});
        Rat x = rat(c(gen) * 7 + 1, 5);
        Rat d = f1(x) * f1(x) - 4 * f2(x) * f0(x);
        if (f2.is_zero() || sgn(f2(x)) == 0 || sgn(d) <= 0) continue;
        auto y = [&](double t, int branch) {
            double a = f2(Rat(t)).get_d(), b = f1(Rat(t)).get_d(), cc = f0(Rat(t)).get_d();
            double disc = b * b - 4 * a * cc;
            return (-b + branch * std::sqrt(disc)) / (2 * a);
        };
        double xd = x.get_d(), h = 1e-3;
        auto [sp, sm] = branch_curvature_signs(f0, f1, f2, 0, x);
        for (int br : {1, -1}) {
            double second = (y(xd + h, br) - 2 * y(xd, br) + y(xd - h, br)) / (h * h);
            if (std::abs(second) < 1e-2) continue;
            CHECK((second > 0 ? 1 : -1) == (br == 1 ? sp : sm));
        }
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("make_grid covers every integer") {
    auto g = make_grid({rat(-5, 2), rat(1, 3), Rat(3)}, -6, 6);
    std::set<long> seen;
    for (const auto& k : g.columns) seen.insert(k.get_si());
    for (const auto& [l, u] : g.intervals)
        for (long k = l.get_si(); k <= u.get_si(); ++k) seen.insert(k);
    CHECK(seen.size() == 13);
}

TEST_CASE("division examples") {
    check_division(xy(1, 0, 1) + xy(1, 2, 0), rat(1, 2), 8);
    check_division(xy(1, 1, 1) + xy(1, 0, 0), rat(1, 2), 5);
    check_division(xy(1, 0, 1), rat(-1, 2), 5);
    check_division(xy(1, 0, 2) + xy(1, 1, 0), rat(7, 2), 10);
    // Figure 1 style instances
    BiPoly fa = xy(8, 0, 2) + xy(4, 1, 2) - xy(32, 0, 1) + xy(1, 3, 0) - xy(4, 2, 0) - xy(16, 1, 0) + xy(32, 0, 0);
    check_division(fa, rat(1, 2), 12);
    BiPoly fc = xy(4, 1, 2) - xy(1, 0, 2) + xy(32, 0, 1) + xy(2, 2, 0) - xy(16, 1, 0) - xy(32, 0, 0);
    check_division(fc, rat(-1, 2), 12);
    check_division(fc, rat(41, 2), 12);
    BiPoly cube = pow(BiPoly::x() + BiPoly::y(), 3) + BiPoly::x();
    check_division(cube, rat(1, 2), 8);
    check_division(xy(1, 0, 3) + xy(1, 1, 0), rat(-3, 2), 8);
}

TEST_CASE("random cubic divisions are lattice-valid") {
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<long> w(-60, 60), rr(3, 9);
    for (int trial = 0; trial < 120; ++trial) {
        BiPoly f = random_cubic(gen);
        if (f.degree() < 1) continue;
        check_division(f, Rat(w(gen)) + rat(1, 2), rr(gen));
    }
}

TEST_CASE("shear error bound") {
    BiPoly f = xy(2, 3, 0) + xy(1, 0, 3);
    ShearData sd = shear_for(f, 10);
    CHECK_FALSE(sd.abar_exact);
    Rat worst(0);
    for (long x = -10; x <= 10; ++x)
        for (long y = -10; y <= 10; ++y) worst = std::max<Rat>(worst, abs_rat(f(x, y) - sd.f_eps(x, y)));
    CHECK(worst <= rat(1, 4));
    ShearData ex = shear_for(pow(BiPoly::x() + BiPoly::y(), 3) + BiPoly::x(), 8);
    REQUIRE(ex.abar_exact);
    CHECK(*ex.abar_exact == -1);
    ShearData zero = shear_for(xy(1, 0, 3) + xy(1, 1, 0), 8);
    REQUIRE(zero.abar_exact);
    CHECK(*zero.abar_exact == 0);
    CHECK(zero.f_eps == xy(1, 0, 3) + xy(1, 1, 0));
}

TEST_CASE("solve_cubic_bounded examples") {
    auto a = solve_cubic_bounded(xy(1, 3, 0) + xy(1, 0, 3), Polyhedron2::square(3));
    CHECK(a.point == Point2{-3, -3});
    CHECK(a.value == -54);
    auto b = solve_cubic_bounded(xy(1, 1, 1), Polyhedron2::square(4));
    CHECK(b.point == Point2{-4, 4});
    CHECK(b.value == -16);
    BiPoly f = xy(1, 3, 0) - xy(3, 1, 2) - xy(2, 0, 3) + xy(1, 1, 0) + xy(1, 0, 1);
    auto c = solve_cubic_bounded(f, Polyhedron2::square(6));
    auto bc = brute_min(f, Polyhedron2::square(6), 6);
    CHECK(c.value == bc.value);
    CHECK(c.point == bc.point);
    Polyhedron2 empty;
    empty.add(2, 0, 1).add(-2, 0, -1).add(0, 1, 1).add(0, -1, 1);
    CHECK(solve_cubic_bounded(f, empty).status == Status::Infeasible);
    CHECK_THROWS_AS(solve_cubic_bounded(xy(1, 2, 2), Polyhedron2::square(2)), Error);
}

TEST_CASE("solve_cubic_bounded agrees with brute force") {
    std::mt19937_64 gen(77);
    std::uniform_int_distribution<long> c(-24, 24);
    for (int trial = 0; trial < 60; ++trial) {
        BiPoly f = random_cubic(gen);
        std::vector<RatPoint> pts;
        for (int i = 0; i < 4; ++i) pts.push_back({rat(c(gen), 3), rat(c(gen), 3)});
        Polyhedron2 p = Polyhedron2::from_points(pts);
        auto o = solve_cubic_bounded(f, p);
        auto b = brute_min(f, p, 9);
        REQUIRE_MESSAGE(o.status == b.status, f.to_string() << " on " << p.to_string());
        if (b.status == Status::Optimal) {
            CHECK_MESSAGE(o.value == b.value, f.to_string());
            CHECK_MESSAGE(o.point == b.point, f.to_string());
        }
    }
}
