#pragma once

#include "zpoly/lattice2d.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zpoly {

// SplitMix64: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply rounds with
// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. Ranges use plain modulo reduction.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    // Uniform-ish integer in [lo, hi].
    long range(long lo, long hi);

private:
    uint64_t state_;
};

enum class InstanceKind { Cubic, Homogeneous };

struct InstanceSpec {
    uint64_t seed = 0;
    InstanceKind kind = InstanceKind::Cubic;
    int degree = 3;  // total degree; exact degree of the form for Homogeneous
    long coeff_bound = 9;
    long box_radius = 10;
    int constraint_count = 2;
    bool unbounded = false;  // drop the box rows
    int max_denominator = 4;  // of the translation, Homogeneous only
};

struct Instance {
    BiPoly f;
    Polyhedron2 p;
};

Instance gen_instance(const InstanceSpec& spec);

inline constexpr long kBruteForceCap = 10'000'000;

// Exhaustive minimum over P and an axis-parallel box. Smallest point wins ties.
SolveOutcome brute_force_min(const BiPoly& f, const Polyhedron2& p, const Polyhedron2& box);

struct DiffRecord {
    uint64_t seed = 0;
    std::string kind;
    bool ok = false;
    std::string expected;
    std::string got;

    std::string to_line() const;
};

struct DiffReport {
    std::vector<DiffRecord> records;
    size_t mismatches() const;
    std::string to_text() const;
};

using InstanceSolver = std::function<SolveOutcome(const Instance&, const InstanceSpec&, Int* certified_radius)>;

// Default dispatch: homogeneous solver for Homogeneous specs, cubic driver otherwise.
SolveOutcome default_instance_solver(const Instance& inst, const InstanceSpec& spec, Int* certified_radius);

DiffReport differential_run(const std::vector<InstanceSpec>& specs, const InstanceSolver& solver = default_instance_solver,
                            unsigned threads = 0);

std::string outcome_json(const SolveOutcome& o);

}  // namespace zpoly
