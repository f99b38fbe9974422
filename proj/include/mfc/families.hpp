#pragma once

#include "mfc/graph.hpp"

namespace mfc {

/// Per-node arc families over the augmented arc index space:
///   mand_in[i]    mandatory arcs lying on some path into i
///   mand_out[i]   mandatory arcs lying on some path out of i
///   reach_in[i]   arcs of all feasible paths (0,...,i)
///   reach_out[i]  arcs of all feasible paths (i,...,n+1)
///   partial_in[i] arcs of prefixes (0,...,i) of feasible source-sink paths
///   partial_out[i] symmetric suffix family
struct ArcSetFamilies {
    int n = 0;
    std::vector<Bitset> mand_in, mand_out;
    std::vector<Bitset> reach_in, reach_out;
    std::vector<Bitset> partial_in, partial_out;

    Bitset union_mand(const std::vector<int>& nodes) const;       // mand_in U mand_out over set
    Bitset union_of(const std::vector<Bitset>& fam, const std::vector<int>& nodes) const;
};

ArcSetFamilies compute_arc_set_families(const AugmentedGraph& g);
ArcSetFamilies compute_arc_set_families(const Instance& inst);

/// True iff some feasible source-sink path visits i and later j.
bool gamma(const AugmentedGraph& g, int i, int j);
bool gamma(const Instance& inst, int i, int j);

} // namespace mfc
