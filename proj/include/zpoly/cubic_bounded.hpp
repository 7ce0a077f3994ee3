#pragma once

#include "zpoly/regions.hpp"

#include <vector>

namespace zpoly {

struct YSlices {
    std::vector<UniPoly> f;  // f[i] multiplies y^i, size 4
    int deg_y = -1;
    int deg_x = -1;
    bool swapped = false;  // true when x and y were exchanged
    BiPoly oriented;       // the polynomial the slices describe

    const UniPoly& operator[](int i) const { return f[i]; }
};

YSlices slice_and_orient(const BiPoly& f);
// Slices without reorientation; degree limit 3 in y.
YSlices slice_as_is(const BiPoly& f);

enum class Curvature { Convex, Concave, Both };

struct BranchInterval {
    Int lo, hi;  // integer interval [lo, hi]
    int sign_f2 = 0;
    int sign_delta = 0;
    Curvature plus = Curvature::Both;   // y_+ = (-f1 + sqrt(delta)) / (2 f2)
    Curvature minus = Curvature::Both;  // y_- = (-f1 - sqrt(delta)) / (2 f2)
    bool plus_on_top() const { return sign_f2 > 0; }
};

struct BranchReport {
    std::vector<Rat> breakpoints;
    std::vector<Int> columns;  // the X_A columns inside [-R, R]
    std::vector<BranchInterval> intervals;
};

// Grid helpers: X_A columns and I_A intervals from approximate breakpoints, clipped to [lo, hi].
struct Grid {
    std::vector<Int> columns;
    std::vector<std::pair<Int, Int>> intervals;
};
Grid make_grid(std::vector<Rat> approx, const Int& lo, const Int& hi);

// Midpoints of eps-isolating intervals of the real roots of p (empty when p is zero or constant).
std::vector<Rat> approx_roots(const UniPoly& p, const Rat& eps);
// Same, restricted to roots in [lo, hi].
std::vector<Rat> approx_roots(const UniPoly& p, const Rat& eps, const Int& lo, const Int& hi);

BranchReport branch_analysis(const UniPoly& f0, const UniPoly& f1, const UniPoly& f2, const Rat& omega, const Int& r);

// Signs of y_+'' and y_-'' at x, with delta(x) > 0 and f2(x) != 0.
std::pair<int, int> branch_curvature_signs(const UniPoly& f0, const UniPoly& f1, const UniPoly& f2, const Rat& omega,
                                           const Rat& x);

// Box is [-r, r]^2 in the slices' coordinates unless stated.
DivisionDescription dd_degy0(const YSlices& s, const Rat& omega, const Int& r);
DivisionDescription dd_degy1(const YSlices& s, const Rat& omega, const Int& r);
DivisionDescription dd_degy2(const YSlices& s, const Rat& omega, const Int& r);
// Rectangular variants: x in [-rx, rx], y in [-ry, ry].
DivisionDescription dd_degy0(const YSlices& s, const Rat& omega, const Int& rx, const Int& ry);
DivisionDescription dd_degy1(const YSlices& s, const Rat& omega, const Int& rx, const Int& ry);
DivisionDescription dd_degy2(const YSlices& s, const Rat& omega, const Int& rx, const Int& ry);

// Shear data for deg_y = 3.
struct ShearData {
    Rat abar_lo, abar_hi;    // isolating interval of the chosen root of the direction cubic
    std::optional<Rat> abar_exact;
    Rat rbar;                // bound with |abar| + 1 <= rbar
    Rat eps;
    Rat a_eps;               // p/q with |abar - a_eps| < eps
    BiPoly f_eps;            // w(x, y - a_eps x)
};
ShearData shear_for(const BiPoly& f, const Int& r);
DivisionDescription dd_degy3(const YSlices& s, const Rat& omega, const Int& r);
// Same with the omega-independent shear computed once by the caller.
DivisionDescription dd_degy3(const YSlices& s, const Rat& omega, const Int& r, const ShearData& sd);

// Division builder for any cubic in the orientation of f itself.
DivisionDescription dd_cubic(const BiPoly& f, const Rat& omega, const Int& r);

SolveOutcome solve_degy0(const YSlices& s, const Polyhedron2& p);

SolveOutcome solve_cubic_bounded(const BiPoly& f, const Polyhedron2& p, SolveStats* stats = nullptr);

// Exchange the roles of x and y in a division description.
DivisionDescription swap_xy(const DivisionDescription& dd);

}  // namespace zpoly
