#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mfc/cuts.hpp"
#include "mfc/families.hpp"
#include "mfc/graph.hpp"
#include "mfc/lp.hpp"

namespace mfc {

/// Arcs carrying fractional mass above eps, optionally with mandatory arcs removed.
struct SupportGraph {
    SupportGraph(const AugmentedGraph& g, const std::vector<double>& y, bool drop_mandatory,
                 double eps = kEps);

    const AugmentedGraph* graph;
    std::vector<std::vector<int>> out;   // kept arc indices per node 0..n+1
    std::vector<char> kept;              // per arc of the augmented graph
};

/// Maximum-weight source-sink path; ties prefer the lowest predecessor node.
std::optional<std::pair<Path, double>> longest_path_dag(const SupportGraph& sg,
                                                        const std::vector<double>& weight);

/// Undirected conflict structure over internal nodes: edge iff NOT conflicting.
struct ConflictGraph {
    int n = 0;
    std::vector<Bitset> adj;   // neighbor sets, indices 1..n
    std::vector<double> w;     // node weights, index 0 unused
};

ConflictGraph build_conflict_graph(const AugmentedGraph& g, std::vector<double> w);

/// Greedy independent set: argmax w/(deg+1) among positive-weight nodes,
/// remove winner and neighbors, repeat. Ties go to the lowest index.
std::vector<int> gwmin(const ConflictGraph& cg);

/// Exact maximum-weight independent set (positive weights drive the search).
std::vector<int> exact_mwis(const ConflictGraph& cg);

enum class MwisMode { Greedy, Exact };

std::vector<Cut> separate_ipc_tc(const AugmentedGraph& g, const std::vector<double>& y);
std::optional<Cut> separate_tic(const AugmentedGraph& g, const std::vector<double>& y);
std::optional<Cut> separate_agrc(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                 const std::vector<double>& y, MwisMode mode);

/// Bookkeeping for the reachability-cut separation, kept for auditing the
/// combined-set argument (crossing mass of the union equals each side's own).
struct RcSeparationDetail {
    std::vector<int> t, s1, s2, s;
    double flow_in = 0.0, flow_out = 0.0;
    double cross_in_s1 = 0.0, cross_in_s = 0.0;
    double cross_out_s2 = 0.0, cross_out_s = 0.0;
    double rhs = 0.0;   // sum of z* over T
};

std::optional<Cut> separate_rcpm(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                 const std::vector<double>& y, MwisMode mode,
                                 RcSeparationDetail* detail = nullptr);
std::optional<Cut> separate_rcminus(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                    const std::vector<double>& y, MwisMode mode,
                                    RcSeparationDetail* detail = nullptr);
std::optional<Cut> separate_rcplus(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                   const std::vector<double>& y, MwisMode mode,
                                   RcSeparationDetail* detail = nullptr);

} // namespace mfc
