#pragma once

#include "zpoly/lattice2d.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace zpoly {

enum class SolveMode { Auto, Cubic, Homogeneous };

struct Problem {
    BiPoly f;
    Polyhedron2 p;
    SolveMode mode = SolveMode::Auto;
};

// JSON problem file; throws Error(ParseError) on malformed input.
Problem parse_problem(const std::string& text);

struct RunOptions {
    std::optional<SolveMode> mode;  // overrides the file
    std::optional<Int> box_radius;  // intersect P with [-R, R]^2
    std::optional<Rat> omega;       // regions only
    bool oracle = false;
};

// Output object as a JSON string. Throws Error for unsupported input.
std::string run_problem(const Problem& prob, const RunOptions& opt);
std::string emit_regions(const Problem& prob, const RunOptions& opt);

// Process exit code for an error category: 2 parse, 3 unsupported, 1 otherwise.
int exit_code_for(Errc e);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zpoly
