#include "doctest.h"
#include "zpoly/cubic_bounded.hpp"
#include "zpoly/oracle.hpp"

using namespace zpoly;

namespace {

BiPoly mono(long c, int i, int j) { return BiPoly::monomial(Rat(c), i, j); }

}  // namespace

TEST_CASE("splitmix64 reference values") {
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFULL);
    CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
    SplitMix64 h(1234567);
    CHECK(h.next() == 6457827717110365317ULL);
    for (int k = 0; k < 1000; ++k) {
        long v = h.range(-3, 5);
        CHECK(v >= -3);
        CHECK(v <= 5);
    }
}

TEST_CASE("brute_force_min examples") {
    auto o = brute_force_min(mono(1, 2, 0) + mono(1, 0, 2), Polyhedron2::square(3), Polyhedron2::square(3));
    REQUIRE(o.status == Status::Optimal);
    CHECK(o.point == Point2{0, 0});
    CHECK(o.value == 0);

    BiPoly pell = pow(mono(1, 2, 0) + mono(-5, 0, 2), 2);
    Polyhedron2 b = Polyhedron2::box(1, 30, 1, 30);
    o = brute_force_min(pell, b, b);
    REQUIRE(o.status == Status::Optimal);
    CHECK(o.value == 1);
    CHECK(o.point == Point2{2, 1});

    Polyhedron2 right;
    right.add(-1, 0, -10);
    CHECK(brute_force_min(BiPoly::x(), right, Polyhedron2::box(0, 5, 0, 5)).status == Status::Infeasible);

    CHECK_THROWS_AS(brute_force_min(BiPoly::x(), right, Polyhedron2::square(5000)), Error);
    Polyhedron2 skew;
    skew.add(1, 1, 3);
    CHECK_THROWS_AS(brute_force_min(BiPoly::x(), skew, skew), Error);

    // ties go to the smallest point
    o = brute_force_min(mono(1, 0, 2), Polyhedron2::square(2), Polyhedron2::square(2));
    CHECK(o.point == Point2{-2, 0});
}

TEST_CASE("gen_instance contracts") {
    InstanceSpec s;
    s.seed = 77;
    auto a = gen_instance(s), b = gen_instance(s);
    CHECK(a.f == b.f);
    CHECK(a.p.to_string() == b.p.to_string());

    for (uint64_t seed = 0; seed < 50; ++seed) {
        s.seed = seed;
        auto in = gen_instance(s);
        CHECK(in.f.degree() == 3);
        for (const auto& [k, c] : in.f.terms()) CHECK(abs_rat(c) <= 9);
        CHECK(in.p.is_bounded());
        CHECK(ilp_point(in.p));
    }

    InstanceSpec h;
    h.kind = InstanceKind::Homogeneous;
    h.degree = 4;
    h.max_denominator = 1;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        h.seed = seed;
        auto in = gen_instance(h);
        CHECK(in.f.degree() == 4);
        CHECK(in.f.has_integer_coeffs());
    }
    // untranslated forms are homogeneous
    h.box_radius = 1;
    int homog = 0;
    for (uint64_t seed = 0; seed < 40; ++seed) {
        h.seed = seed;
        auto in = gen_instance(h);
        if (in.f.coeff(0, 0) == 0 && in.f.is_homogeneous()) {
            ++homog;
            for (const auto& [k, c] : in.f.terms()) CHECK(k.first + k.second == 4);
        }
    }
    CHECK(homog > 0);

    InstanceSpec u;
    u.unbounded = true;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        u.seed = seed;
        auto in = gen_instance(u);
        CHECK_FALSE(in.p.is_bounded());
        CHECK(ilp_point(in.p));
    }
}

TEST_CASE("differential_run") {
    CHECK(differential_run({}).records.empty());

    std::vector<InstanceSpec> specs;
    for (uint64_t seed = 0; seed < 12; ++seed) {
        InstanceSpec s;
        s.seed = seed;
        s.box_radius = 5;
        specs.push_back(s);
    }
    auto rep = differential_run(specs);
    CHECK(rep.records.size() == specs.size());
    CHECK(rep.mismatches() == 0);
    CHECK(rep.to_text() == differential_run(specs, default_instance_solver, 1).to_text());
    CHECK(rep.to_text().find("\"seed\":0,") != std::string::npos);

    // planted bug: concave pieces dropped, so part of the box is never searched
    InstanceSolver broken = [](const Instance& in, const InstanceSpec&, Int*) {
        Int r = box_radius(in.p);
        return minimize_by_bisection(in.p, in.f, [&](const Rat& w) {
            auto dd = dd_cubic(in.f, w, r);
            dd.concave_side.clear();
            return dd;
        });
    };
    auto bad = differential_run(specs, broken);
    CHECK(bad.mismatches() >= 1);

    std::vector<InstanceSpec> unb;
    for (uint64_t seed = 0; seed < 10; ++seed) {
        InstanceSpec s;
        s.seed = seed;
        s.unbounded = true;
        s.coeff_bound = 4;
        unb.push_back(s);
    }
    auto ur = differential_run(unb);
    CHECK_MESSAGE(ur.mismatches() == 0, ur.to_text());
}
