#pragma once

#include <vector>

namespace mfc {

/// Capacitated digraph for min-cut computations. Arcs with zero capacity still
/// count for the isolated-node test, so callers may add whole arc families.
class FlowNetwork {
public:
    explicit FlowNetwork(int num_nodes);

    void add_arc(int u, int v, double cap);
    int num_nodes() const { return int(isolated_.size()); }
    bool isolated(int v) const { return isolated_[v]; }

private:
    friend class DinicSolver;
    struct Edge {
        int to;
        double cap;
        int rev;
    };
    std::vector<std::vector<Edge>> adj_;
    std::vector<char> isolated_;
};

enum class CutSide { Source, Sink };

struct MinCutResult {
    double value = 0.0;
    std::vector<int> side;   // requested side, excluding the terminal and isolated nodes
};

MinCutResult min_cut_side(const FlowNetwork& net, int source, int sink, CutSide side);

} // namespace mfc
