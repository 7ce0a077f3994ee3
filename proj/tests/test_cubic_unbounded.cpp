#include "doctest.h"
#include "support.hpp"
#include "zpoly/cubic_unbounded.hpp"

#include <random>

using namespace zpoly;
using zpoly::testing::brute_min;

namespace {

BiPoly mono(long c, int i, int j) { return BiPoly::monomial(Rat(c), i, j); }

BiPoly random_cubic(std::mt19937_64& gen, long bound = 4) {
    std::uniform_int_distribution<long> c(-bound, bound);
    BiPoly f;
    while (f.degree() != 3)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) f.add_term(i, j, Rat(c(gen)));
    return f;
}

int real_roots(const UniPoly& p) { return SturmChain(squarefree_part(p)).count_all(); }

void check_certificate(const BiPoly& f, const Polyhedron2& p, const SolveOutcome& o) {
    REQUIRE(o.status == Status::Unbounded);
    CHECK(verify_unbounded(f, p, o.point, o.ray));
    CHECK(p.contains(Point2{o.point.x + o.ray.x, o.point.y + o.ray.y}));
    Rat prev;
    Int step(1);
    for (int k = 0; k <= 4; ++k, step *= 10) {
        Rat v = f(Rat(o.point.x + step * o.ray.x), Rat(o.point.y + step * o.ray.y));
        if (k > 0) CHECK_MESSAGE(v < prev, f.to_string());
        prev = v;
    }
}

}  // namespace

TEST_CASE("classify_cubic_form examples") {
    auto t = classify_cubic_form(mono(1, 3, 0) + mono(-1, 1, 2));
    CHECK(t.kind == CubicFormKind::ThreeLines);

    t = classify_cubic_form(mono(1, 3, 0) + mono(-3, 1, 2) + mono(-2, 0, 3));
    REQUIRE(t.kind == CubicFormKind::DoubleLine);
    CHECK(t.a1 == 1);
    CHECK(t.b1 == 1);
    CHECK(t.a2 == 1);
    CHECK(t.b2 == -2);
    CHECK(t.d == 1);

    t = classify_cubic_form(pow(BiPoly::x() + BiPoly::y(), 3));
    REQUIRE(t.kind == CubicFormKind::TripleLine);
    CHECK(t.a1 == 1);
    CHECK(t.b1 == 1);
    CHECK(t.d == 1);

    CHECK(classify_cubic_form(mono(1, 3, 0) + mono(1, 1, 2)).kind == CubicFormKind::LineTimesIrreducible);
    CHECK(classify_cubic_form(mono(5, 3, 0)).kind == CubicFormKind::TripleLine);
    CHECK(classify_cubic_form(mono(2, 2, 1)).kind == CubicFormKind::DoubleLine);
    CHECK(classify_cubic_form(mono(1, 0, 3) + mono(-1, 2, 1)).kind == CubicFormKind::ThreeLines);

    CHECK_THROWS_AS(classify_cubic_form(BiPoly()), Error);
    CHECK_THROWS_AS(classify_cubic_form(mono(1, 2, 0)), Error);
    CHECK_THROWS_AS(classify_cubic_form(mono(1, 3, 0) + BiPoly::x()), Error);
}

TEST_CASE("classify_cubic_form on random forms") {
    std::mt19937_64 gen(41);
    std::uniform_int_distribution<long> c(-5, 5);
    auto lin = [&] {
        Rat a, b;
        while (sgn(a) == 0 && sgn(b) == 0) {
            a = c(gen);
            b = c(gen);
        }
        return BiPoly::linear(a, b, 0);
    };
    for (int k = 0; k < 120; ++k) {
        BiPoly h;
        switch (k % 3) {
            case 0: h = Rat(c(gen) | 1) * lin() * lin() * lin(); break;
            case 1: {
                BiPoly l = lin();
                h = Rat(c(gen) | 1) * l * l * lin();
                break;
            }
            default:
                while (h.degree() != 3 || !h.is_homogeneous())
                    h = mono(c(gen), 3, 0) + mono(c(gen), 2, 1) + mono(c(gen), 1, 2) + mono(c(gen), 0, 3);
        }
        auto t = classify_cubic_form(h);
        BiPoly l1 = BiPoly::linear(t.a1, t.b1, 0), l2 = BiPoly::linear(t.a2, t.b2, 0);
        if (t.kind == CubicFormKind::DoubleLine) {
            CHECK(t.d * (l1 * l1 * l2) == h);
            CHECK(l1 != l2);
        } else if (t.kind == CubicFormKind::TripleLine) {
            CHECK(t.d * pow(l1, 3) == h);
        } else {
            // distinct real roots of the dehomogenized form, counting x = 0 when y^3 vanishes
            UniPoly p({h.coeff(3, 0), h.coeff(2, 1), h.coeff(1, 2), h.coeff(0, 3)});
            int n = real_roots(p) + (sgn(h.coeff(0, 3)) == 0 ? 1 : 0);
            CHECK_MESSAGE(n == (t.kind == CubicFormKind::ThreeLines ? 3 : 1), h.to_string());
        }
    }
}

TEST_CASE("ray_decompose examples") {
    auto d = ray_decompose(mono(1, 3, 0) + BiPoly::x(), {1, 0});
    CHECK(d.h_of_r == 1);
    CHECK(d.g2 == mono(3, 1, 0));
    CHECK(d.g1 == mono(3, 2, 0) + BiPoly::constant(1));

    d = ray_decompose(mono(1, 2, 1), {1, 0});
    CHECK(d.h_of_r == 0);
    CHECK(d.g2 == BiPoly::y());
    CHECK(d.g1 == mono(2, 1, 1));

    d = ray_decompose(mono(1, 0, 3), {1, 0});
    CHECK(d.h_of_r == 0);
    CHECK(d.g2.is_zero());
    CHECK(d.g1.is_zero());
}

TEST_CASE("ray_decompose identity") {
    std::mt19937_64 gen(43);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int k = 0; k < 100; ++k) {
        BiPoly f = random_cubic(gen, 7);
        Point2 r{c(gen), c(gen)};
        if (r.x == 0 && r.y == 0) r.x = 1;
        auto d = ray_decompose(f, r);
        CHECK(d.base == f);
        // check in x, y at several lambda: both sides are polynomials of degree 3 in lambda
        for (long lam = -2; lam <= 2; ++lam) {
            Rat l(lam);
            BiPoly lhs = substitute_affine(f, 1, 0, 0, 1, l * Rat(r.x), l * Rat(r.y));
            BiPoly rhs = BiPoly::constant(d.h_of_r * l * l * l) + (l * l) * d.g2 + l * d.g1 + f;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("positive_floor_on_segment") {
    Rat m = positive_floor_on_segment(UniPoly{1, 0, 1});
    CHECK(m > 0);
    CHECK(m <= 1);
    m = positive_floor_on_segment(UniPoly{3, -1});
    CHECK(m > 0);
    CHECK(m <= 2);
    m = positive_floor_on_segment(UniPoly({rat(1, 2), Rat(-1), Rat(1)}));
    CHECK(m > 0);
    CHECK(m <= rat(1, 4));
    CHECK_THROWS_AS(positive_floor_on_segment(UniPoly{-1, 2}), Error);
    CHECK_THROWS_AS(positive_floor_on_segment(UniPoly({rat(1, 100), Rat(-1), Rat(1)})), Error);

    std::mt19937_64 gen(47);
    std::uniform_int_distribution<long> c(-9, 9);
    int done = 0;
    while (done < 200) {
        UniPoly p{c(gen), c(gen), c(gen), c(gen)};
        if (p.is_zero() || sgn(p(Rat(0))) <= 0 || sgn(p(Rat(1))) <= 0) continue;
        if (p.degree() >= 1 && SturmChain(squarefree_part(p)).count(Rat(0), Rat(1)) > 0) continue;
        ++done;
        Rat fl = positive_floor_on_segment(p);
        CHECK(fl > 0);
        for (int i = 0; i <= 256; ++i) CHECK_MESSAGE(fl <= p(rat(i, 256)), p.to_string());
    }
}

TEST_CASE("solve_cubic examples") {
    Polyhedron2 strip;
    strip.add(-1, 0, 0).add(0, 1, 1).add(0, -1, 0);
    auto o = solve_cubic(mono(-1, 3, 0), strip);
    REQUIRE(o.status == Status::Unbounded);
    CHECK(o.point == Point2{0, 0});
    CHECK(o.ray == Point2{1, 0});
    check_certificate(mono(-1, 3, 0), strip, o);

    Polyhedron2 quad;
    quad.add(-1, 0, 0).add(0, -1, 0);
    SolveStats st;
    o = solve_cubic(mono(1, 3, 0) + mono(1, 0, 3), quad, &st);
    REQUIRE(o.status == Status::Optimal);
    CHECK(o.point == Point2{0, 0});
    CHECK(o.value == 0);
    CHECK(st.certified_radius);

    Polyhedron2 low;
    low.add(-1, 0, 0).add(0, 1, 0).add(0, -1, 1);
    o = solve_cubic(mono(1, 2, 1), low);
    REQUIRE(o.status == Status::Unbounded);
    CHECK(o.point == Point2{0, -1});
    CHECK(o.ray == Point2{1, 0});

    o = solve_cubic(mono(1, 0, 3), quad);
    REQUIRE(o.status == Status::Optimal);
    CHECK(o.value == 0);
    CHECK(o.point == Point2{0, 0});

    CHECK_THROWS_AS(solve_cubic(mono(1, 2, 0), quad), Error);
    CHECK_THROWS_AS(solve_cubic(mono(1, 4, 0), quad), Error);
    Polyhedron2 none = quad;
    none.add(1, 1, -1);
    CHECK(solve_cubic(mono(1, 3, 0), none).status == Status::Infeasible);
}

TEST_CASE("solve_cubic on the whole plane and half planes") {
    Polyhedron2 plane;
    auto o = solve_cubic(mono(1, 3, 0) + mono(1, 0, 3), plane);
    check_certificate(mono(1, 3, 0) + mono(1, 0, 3), plane, o);

    Polyhedron2 half;
    half.add(0, -1, 0);
    BiPoly f = mono(1, 0, 3) + mono(1, 2, 1) + mono(-3, 0, 1);  // y^3 + x^2 y - 3y >= min over y >= 0
    o = solve_cubic(f, half);
    auto b = brute_min(f, half, 30);
    REQUIRE(o.status == Status::Optimal);
    CHECK(o.value == b.value);
    CHECK(o.point == b.point);
}

TEST_CASE("solve_cubic on random unbounded polyhedra") {
    std::mt19937_64 gen(53);
    std::uniform_int_distribution<long> c(-4, 4), rhs(-3, 6);
    int optimal = 0, unbounded = 0, checked = 0;
    for (int k = 0; k < 160; ++k) {
        BiPoly f = random_cubic(gen, 3);
        Polyhedron2 p;
        int rows = 1 + k % 3;
        for (int j = 0; j < rows; ++j) p.add(Rat(c(gen)), Rat(c(gen)), Rat(rhs(gen)));
        if (p.is_empty() || p.is_bounded() || !ilp_point(p)) continue;
        SolveStats st;
        auto o = solve_cubic(f, p, &st);
        INFO(f.to_string(), " on ", p.to_string());
        if (o.status == Status::Unbounded) {
            ++unbounded;
            check_certificate(f, p, o);
            continue;
        }
        REQUIRE(o.status == Status::Optimal);
        ++optimal;
        REQUIRE(st.certified_radius);
        Int R = ceil_rat(*st.certified_radius);
        CHECK(p.contains(o.point));
        CHECK(f(Rat(o.point.x), Rat(o.point.y)) == o.value);
        if (R > 40) continue;
        ++checked;
        long r4 = 4 * std::max<long>(R.get_si(), 1);
        auto b = brute_min(f, p, r4);
        CHECK(o.value == b.value);
        CHECK(o.point == b.point);
    }
    MESSAGE("optimal ", optimal, " unbounded ", unbounded, " brute-checked ", checked);
    CHECK(optimal > 5);
    CHECK(unbounded > 5);
}

TEST_CASE("solve_cubic with a nonnegative cubic part on the cone") {
    std::mt19937_64 gen(59);
    std::uniform_int_distribution<long> hc(0, 2), lc(-4, 4), rhs(-2, 3), sh(-1, 1);
    int checked = 0, big = 0;
    for (int k = 0; k < 80; ++k) {
        BiPoly h;
        while (h.is_zero())
            for (int i = 0; i <= 3; ++i) h.add_term(i, 3 - i, Rat(hc(gen) * hc(gen)));
        BiPoly f = h;
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j) f.add_term(i, j, Rat(lc(gen)));
        // first quadrant moved and cut by one extra row
        Polyhedron2 p;
        p.add(-1, 0, Rat(rhs(gen))).add(0, -1, Rat(rhs(gen)));
        if (k % 2) p.add(Rat(sh(gen)), Rat(sh(gen)), Rat(4 + rhs(gen)));
        if (p.is_empty() || p.is_bounded() || !ilp_point(p)) continue;
        SolveStats st;
        auto o = solve_cubic(f, p, &st);
        INFO(f.to_string(), " on ", p.to_string());
        if (o.status == Status::Unbounded) {
            check_certificate(f, p, o);
            continue;
        }
        REQUIRE(o.status == Status::Optimal);
        Int R = ceil_rat(*st.certified_radius);
        if (R > 30) {
            ++big;
            continue;
        }
        ++checked;
        auto b = brute_min(f, p, 4 * std::max<long>(R.get_si(), 1));
        CHECK(o.value == b.value);
        CHECK(o.point == b.point);
    }
    MESSAGE("brute-checked ", checked, " skipped for size ", big);
    CHECK(checked > 20);
}
