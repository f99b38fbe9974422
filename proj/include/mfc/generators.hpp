#pragma once

#include <cstdint>
#include <optional>

#include "mfc/graph.hpp"

namespace mfc {

/// Random DAG from the transitive closure of a path: each arc is removed with
/// probability 1-pa (removals that break weak connectivity are rejected), then
/// each survivor becomes mandatory with probability pac.
Instance gen_set_a(int n, double pa, double pac, uint64_t seed);

/// Interval-overlap DAG on a 30-day minute horizon: arc (i,j) iff interval i
/// ends before j starts. Interval durations are tuned by bisection until the
/// realized density is within 10% of the target; mandatory arcs are the ones
/// spanning the largest gaps, enough of them to reach the sparsity target.
Instance gen_set_c(int n, double density_target, double sparsity_target, uint64_t seed);

struct InstanceStats {
    double density = 0.0;                  // percent
    std::optional<double> sparsity;        // percent, undefined when |A| = 0
};

InstanceStats stats(const Instance& inst);

} // namespace mfc
