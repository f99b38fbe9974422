#include "mfc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfc {

Dag::Dag(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 1) throw std::invalid_argument("dag: n must be >= 1");
    out_.assign(n_ + 1, {});
    in_.assign(n_ + 1, {});
    std::vector<std::vector<char>> seen(n_ + 1, std::vector<char>(n_ + 1, 0));
    for (int a = 0; a < int(arcs_.size()); ++a) {
        auto [u, v] = arcs_[a];
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw std::invalid_argument("dag: arc endpoint out of range");
        if (u == v) throw std::invalid_argument("dag: self-loop");
        if (seen[u][v]) throw std::invalid_argument("dag: duplicate arc");
        seen[u][v] = 1;
        out_[u].push_back(a);
        in_[v].push_back(a);
    }
    // Kahn's algorithm; leftover nodes mean a cycle.
    std::vector<int> indeg(n_ + 1, 0);
    for (auto& [u, v] : arcs_) indeg[v]++;
    std::vector<int> stack;
    for (int v = 1; v <= n_; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        topo_.push_back(v);
        for (int a : out_[v])
            if (--indeg[arcs_[a].second] == 0) stack.push_back(arcs_[a].second);
    }
    if (int(topo_.size()) != n_) throw std::invalid_argument("dag: cycle detected");
}

int Dag::arc_index(int u, int v) const {
    for (int a : out_[u])
        if (arcs_[a].second == v) return a;
    return -1;
}

Instance::Instance(Dag d, std::vector<int> mand) : dag(std::move(d)), mandatory(std::move(mand)) {
    std::sort(mandatory.begin(), mandatory.end());
    mandatory.erase(std::unique(mandatory.begin(), mandatory.end()), mandatory.end());
    for (int a : mandatory)
        if (a < 0 || a >= dag.num_arcs())
            throw std::invalid_argument("instance: mandatory arc index out of range");
}

bool Instance::is_mandatory(int arc) const {
    return std::binary_search(mandatory.begin(), mandatory.end(), arc);
}

AugmentedGraph::AugmentedGraph(Instance inst) : inst_(std::move(inst)) {
    int n = inst_.n();
    int nbar = n + 1;
    arcs_ = inst_.dag.arcs();
    for (int i = 1; i <= n; ++i) arcs_.emplace_back(0, i);
    for (int i = 1; i <= n; ++i) arcs_.emplace_back(i, nbar);

    // cost: 1 on source arcs, -n everywhere else, so a path covering h nodes
    // costs exactly 1 - h*n
    costs_.assign(arcs_.size(), double(-n));
    for (int i = 1; i <= n; ++i) costs_[source_arc(i)] = 1.0;

    out_.assign(nbar + 1, {});
    in_.assign(nbar + 1, {});
    arc_lookup_.assign((nbar + 1) * (nbar + 1), -1);
    for (int a = 0; a < int(arcs_.size()); ++a) {
        auto [u, v] = arcs_[a];
        out_[u].push_back(a);
        in_[v].push_back(a);
        arc_lookup_[u * (nbar + 1) + v] = a;
    }

    // reflexive transitive closure over internal nodes, reverse topo order
    closure_.assign(n + 1, Bitset(n + 1));
    const auto& topo = inst_.dag.topo_order();
    for (int t = n - 1; t >= 0; --t) {
        int v = topo[t];
        closure_[v].set(v);
        for (int a : inst_.dag.out_arcs(v))
            closure_[v].or_with(closure_[inst_.dag.arcs()[a].second]);
    }
}

int AugmentedGraph::arc_index(int u, int v) const {
    int w = sink() + 1;
    if (u < 0 || u >= w || v < 0 || v >= w) return -1;
    return arc_lookup_[u * w + v];
}

AugmentedGraph augment(const Instance& inst) { return AugmentedGraph(inst); }

bool reaches(const Dag& g, int i, int j) {
    if (i == j) return true;
    std::vector<char> vis(g.n() + 1, 0);
    std::vector<int> stack{i};
    vis[i] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : g.out_arcs(v)) {
            int w = g.arcs()[a].second;
            if (w == j) return true;
            if (!vis[w]) { vis[w] = 1; stack.push_back(w); }
        }
    }
    return false;
}

bool reaches(const AugmentedGraph& g, int i, int j) {
    if (i == j) return true;
    if (i == g.sink()) return false;
    if (j == 0) return false;
    if (i == 0 || j == g.sink()) return true;   // source/sink arcs exist for every node
    return g.reach(i, j);
}

bool is_path_of(const Dag& g, const Path& p) {
    if (p.kind != PathKind::Internal || p.nodes.empty()) return false;
    std::vector<char> seen(g.n() + 1, 0);
    for (int v : p.nodes) {
        if (v < 1 || v > g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t k = 0; k + 1 < p.nodes.size(); ++k)
        if (g.arc_index(p.nodes[k], p.nodes[k + 1]) < 0) return false;
    return true;
}

bool is_path_of(const AugmentedGraph& g, const Path& p) {
    if (p.kind != PathKind::Augmented) return false;
    if (p.nodes.size() < 3 || p.nodes.front() != 0 || p.nodes.back() != g.sink()) return false;
    std::vector<char> seen(g.sink() + 1, 0);
    for (int v : p.nodes) {
        if (v < 0 || v > g.sink() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t k = 0; k + 1 < p.nodes.size(); ++k)
        if (g.arc_index(p.nodes[k], p.nodes[k + 1]) < 0) return false;
    return true;
}

bool is_feasible_path(const AugmentedGraph& g, const Path& p) {
    const Path* q = &p;
    Path tmp;
    if (p.kind == PathKind::Internal) {
        tmp = to_augmented(p, g.n());
        q = &tmp;
    }
    if (!is_path_of(g, *q)) throw std::invalid_argument("is_feasible_path: not a path");
    for (size_t k = 0; k + 1 < q->nodes.size(); ++k) {
        int a = g.arc_index(q->nodes[k], q->nodes[k + 1]);
        if (g.is_mandatory_arc(a)) return true;
    }
    return false;
}

bool is_feasible_path(const Instance& inst, const Path& p) {
    return is_feasible_path(AugmentedGraph(inst), p);
}

bool conflicting(const AugmentedGraph& g, int i, int j) {
    if (i < 1 || i > g.n() || j < 1 || j > g.n() || i == j)
        throw std::invalid_argument("conflicting: need distinct internal nodes");
    return !g.reach(i, j) && !g.reach(j, i);
}

Path to_augmented(const Path& p, int n) {
    if (p.kind != PathKind::Internal) throw std::invalid_argument("to_augmented: internal path expected");
    Path q;
    q.kind = PathKind::Augmented;
    q.nodes.reserve(p.nodes.size() + 2);
    q.nodes.push_back(0);
    q.nodes.insert(q.nodes.end(), p.nodes.begin(), p.nodes.end());
    q.nodes.push_back(n + 1);
    return q;
}

Path to_internal(const Path& p, int n) {
    if (p.kind != PathKind::Augmented || p.nodes.size() < 3 || p.nodes.front() != 0 ||
        p.nodes.back() != n + 1)
        throw std::invalid_argument("to_internal: augmented 0..n+1 path expected");
    Path q;
    q.kind = PathKind::Internal;
    q.nodes.assign(p.nodes.begin() + 1, p.nodes.end() - 1);
    return q;
}

} // namespace mfc
