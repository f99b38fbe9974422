#pragma once

#include <optional>

#include "mfc/graph.hpp"

namespace mfc {

/// Minimum path cover of a DAG (singletons allowed) via maximum bipartite
/// matching on the split graph; cover size = n - matching.
std::vector<Path> min_path_cover(const Dag& g);

/// One element of a 3-dimensional matching instance over 1..q per coordinate.
struct Triple {
    int x = 0, y = 0, z = 0;
};

/// Closed-form solve of MPC-ARC on the transitive closure of a path v1..vn.
/// mandatory holds pairs (i, j), i < j <= n. Returns the covering paths
/// (1 or 2 of them) or nullopt when no full cover exists.
std::optional<std::vector<Path>> solve_transitive_path(int n, const std::vector<Arc>& mandatory);

/// Hardness gadget: one 7-node widget per triple sharing the 3q external
/// nodes; FPC-ARC on the result is equivalent to the 3-DM instance.
Instance build_3dm_gadget(int q, const std::vector<Triple>& triples);

} // namespace mfc
