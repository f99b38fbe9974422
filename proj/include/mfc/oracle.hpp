#pragma once

#include "mfc/graph.hpp"

namespace mfc {

inline constexpr int kOracleMaxN = 12;   // exhaustive enumeration guard
inline constexpr int kFpcMaxN = 40;      // backtracking cover-search guard

/// Lexicographically best solution: max covered nodes, then min path count.
struct OracleResult {
    int covered = 0;
    int paths = 0;
    long long cost = 0;               // paths - n * covered
    std::vector<Path> witness;        // internal, node-disjoint, all feasible
};

/// Exhaustive search over collections of node-disjoint feasible paths (n <= 12).
OracleResult enumerate_best(const Instance& inst);

/// Can every node be covered by node-disjoint feasible paths? (n <= 40)
bool check_fpc(const Instance& inst);

/// All source-sink paths of the augmented graph, ascending-neighbor DFS order
/// (n <= 12). With feasible_only, keeps paths traversing a mandatory arc.
std::vector<Path> enumerate_paths(const AugmentedGraph& g, bool feasible_only);

/// All simple internal paths (>= 1 node), for brute-force referees (n <= 12).
std::vector<Path> enumerate_internal_paths(const Dag& g);

/// Minimum number of paths covering all nodes, singletons allowed (n <= 12).
int brute_min_path_cover(const Dag& g);

} // namespace mfc
