#pragma once

#include "zpoly/regions.hpp"

#include <optional>

namespace zpoly {

struct TranslationWitness {
    Rat tx, ty;
    BiPoly homogeneous_image;  // f(x + tx, y + ty)
};

struct SignPartition {
    std::vector<Polyhedron2> positive;
    std::vector<Polyhedron2> negative;
    std::vector<LatticeLine> lines;
    Polyhedron2 box;
    Int construction_radius;  // R after any boundary bumps
};

// -f_x^2 f_yy + 2 f_x f_y f_xy - f_y^2 f_xx
BiPoly bordered_hessian_det(const BiPoly& f);

bool euler_identity_check(const BiPoly& h);

std::optional<TranslationWitness> detect_translatable(const BiPoly& f);

SignPartition sign_partition(const BiPoly& F, const Int& r, const std::optional<TranslationWitness>& hint = std::nullopt);

// Division description on [-r, r]^2 that serves every omega.
DivisionDescription quasi_division(const BiPoly& f, const Int& r);

SolveOutcome solve_homogeneous_bounded(const BiPoly& f, const Polyhedron2& p, SolveStats* stats = nullptr);

}  // namespace zpoly
