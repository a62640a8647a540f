#pragma once

#include <cstdint>
#include <vector>

#include "sftlab/matrix.hpp"
#include "sftlab/relations.hpp"

namespace sft {

// Verification families are finite and described by three bounds:
// pair disagreement support lies in [-radius, radius], tails have period
// <= tail_period, and the point family holds all periodic points of period
// <= period_bound.
struct FamilyDescriptor {
    Index radius = 6;
    Index tail_period = 4;
    Index period_bound = 6;
};

struct SideFamily {
    std::vector<Point> points;          // all periodic <= period_bound, plus samples
    std::vector<AsymptoticPair> pairs;  // support within [-radius, radius]
};

// Deterministic generation.  Pairs come in two layers: an exhaustive sweep
// of all center perturbations at the given sweep radius over all periodic
// environments of period <= tail_period (skipped when the count would
// exceed `sweep_cap`), and a seeded pseudorandom sample at the full radius.
struct FamilyOptions {
    std::uint64_t seed = 0x5f7ab91dull;
    int sampled_points = 80;
    int sampled_pairs = 300;
    long long sweep_cap = 60000;
};

SideFamily make_side_family(const TransitionMatrix& A, const FamilyDescriptor& fd,
                            Index sweep_radius, const FamilyOptions& opt = {});

// Exhaustive pair count the sweep would produce (to decide feasibility).
long long sweep_size(const TransitionMatrix& A, const FamilyDescriptor& fd, Index sweep_radius);

}  // namespace sft
