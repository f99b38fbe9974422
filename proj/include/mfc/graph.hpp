#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfc/bitset.hpp"

namespace mfc {

using Arc = std::pair<int, int>;

/// Directed acyclic graph on nodes 1..n. Arcs keep their construction order;
/// self-loops, duplicates and cycles are rejected at construction.
class Dag {
public:
    Dag() = default;
    Dag(int n, std::vector<Arc> arcs);

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int num_arcs() const { return int(arcs_.size()); }
    const std::vector<int>& topo_order() const { return topo_; }
    const std::vector<int>& out_arcs(int v) const { return out_[v]; }
    const std::vector<int>& in_arcs(int v) const { return in_[v]; }
    /// Arc index of (u,v), or -1.
    int arc_index(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;   // arc indices, per node 1..n
    std::vector<int> topo_;
};

/// A DAG together with the set of mandatory arcs (indices into dag.arcs()).
struct Instance {
    Dag dag;
    std::vector<int> mandatory;   // sorted, unique arc indices

    Instance() = default;
    Instance(Dag d, std::vector<int> mand);

    int n() const { return dag.n(); }
    bool is_mandatory(int arc) const;
};

enum class PathKind { Internal, Augmented };

/// Node sequence; Internal paths live on 1..n, Augmented ones run 0 -> n+1.
struct Path {
    std::vector<int> nodes;
    PathKind kind = PathKind::Internal;
};

/// The augmented graph: source 0 and sink n+1 added, arcs
/// [original | (0,i) for i=1..n | (i,n+1) for i=1..n], costs attached.
class AugmentedGraph {
public:
    explicit AugmentedGraph(Instance inst);

    const Instance& base() const { return inst_; }
    int n() const { return inst_.n(); }
    int sink() const { return inst_.n() + 1; }
    int num_arcs() const { return int(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<double>& costs() const { return costs_; }

    int num_base_arcs() const { return inst_.dag.num_arcs(); }
    int source_arc(int i) const { return num_base_arcs() + (i - 1); }
    int sink_arc(int i) const { return num_base_arcs() + n() + (i - 1); }
    bool is_source_arc(int a) const { return a >= num_base_arcs() && a < num_base_arcs() + n(); }
    bool is_sink_arc(int a) const { return a >= num_base_arcs() + n(); }
    bool is_mandatory_arc(int a) const { return a < num_base_arcs() && inst_.is_mandatory(a); }

    int arc_index(int u, int v) const;              // over 0..n+1, -1 if absent
    const std::vector<int>& out_arcs(int v) const { return out_[v]; }
    const std::vector<int>& in_arcs(int v) const { return in_[v]; }

    /// Reachability over internal nodes (reflexive); row i covers 1..n.
    bool reach(int i, int j) const { return closure_[i].test(j); }
    const Bitset& reach_row(int i) const { return closure_[i]; }

private:
    Instance inst_;
    std::vector<Arc> arcs_;
    std::vector<double> costs_;
    std::vector<std::vector<int>> out_, in_;        // per node 0..n+1
    std::vector<int> arc_lookup_;                   // dense (n+2)^2 -> arc idx
    std::vector<Bitset> closure_;                   // internal reachability
};

AugmentedGraph augment(const Instance& inst);

/// Path existence i -> j (reflexive true) on the plain DAG.
bool reaches(const Dag& g, int i, int j);
/// Same on the augmented graph, nodes 0..n+1.
bool reaches(const AugmentedGraph& g, int i, int j);

/// True iff the path traverses at least one mandatory arc. Throws if the node
/// sequence is not a path of the instance (resp. its augmented graph).
bool is_feasible_path(const Instance& inst, const Path& p);
bool is_feasible_path(const AugmentedGraph& g, const Path& p);

/// True iff no path connects i and j in either direction (i,j internal, i!=j).
bool conflicting(const AugmentedGraph& g, int i, int j);

/// Validates that p is a path of g (consecutive arcs exist, endpoints match kind).
bool is_path_of(const AugmentedGraph& g, const Path& p);
bool is_path_of(const Dag& g, const Path& p);

/// Internal path -> augmented path (prepend source, append sink) and back.
Path to_augmented(const Path& p, int n);
Path to_internal(const Path& p, int n);

} // namespace mfc
