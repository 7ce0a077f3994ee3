#pragma once

#include "zpoly/cubic_bounded.hpp"

namespace zpoly {

// f(x + lambda r) = h_of_r lambda^3 + g2(x) lambda^2 + g1(x) lambda + f(x)
struct RayDecomposition {
    Rat h_of_r;
    BiPoly g2;
    BiPoly g1;
    BiPoly base;
};

RayDecomposition ray_decompose(const BiPoly& f, const Point2& r);

enum class CubicFormKind { ThreeLines, DoubleLine, TripleLine, LineTimesIrreducible };

// DoubleLine: h = d (a1 x + b1 y)^2 (a2 x + b2 y).  TripleLine: h = d (a1 x + b1 y)^3.
// Linear factors are primitive integer vectors with the first nonzero entry positive.
struct CubicFormType {
    CubicFormKind kind = CubicFormKind::ThreeLines;
    Rat a1, b1, a2, b2, d;
};

const char* cubic_form_name(CubicFormKind k);

CubicFormType classify_cubic_form(const BiPoly& h);

// Some m with 0 < m <= min of p on [0, 1]; p has degree at most 3.
Rat positive_floor_on_segment(const UniPoly& p);

// Exact check of an unboundedness certificate: point in P, ray in rec(P), f falling along the ray.
bool verify_unbounded(const BiPoly& f, const Polyhedron2& p, const Point2& point, const Point2& ray);

SolveOutcome solve_cubic(const BiPoly& f, const Polyhedron2& p, SolveStats* stats = nullptr);

}  // namespace zpoly
