#include "mfc/maxflow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mfc {

namespace {
constexpr double kCapEps = 1e-11;
}

FlowNetwork::FlowNetwork(int num_nodes) : adj_(num_nodes), isolated_(num_nodes, 1) {}

void FlowNetwork::add_arc(int u, int v, double cap) {
    if (u < 0 || u >= num_nodes() || v < 0 || v >= num_nodes() || u == v || cap < 0.0)
        throw std::invalid_argument("flow network: bad arc");
    adj_[u].push_back(Edge{v, cap, int(adj_[v].size())});
    adj_[v].push_back(Edge{u, 0.0, int(adj_[u].size()) - 1});
    isolated_[u] = isolated_[v] = 0;
}

class DinicSolver {
public:
    explicit DinicSolver(const FlowNetwork& net) : adj_(net.adj_) {}

    double run(int s, int t) {
        double total = 0.0;
        while (bfs(s, t)) {
            iter_.assign(adj_.size(), 0);
            for (;;) {
                double pushed = dfs(s, t, 1e300);
                if (pushed <= kCapEps) break;
                total += pushed;
            }
        }
        return total;
    }

    std::vector<char> source_reachable(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& e : adj_[u])
                if (e.cap > kCapEps && !seen[e.to]) {
                    seen[e.to] = 1;
                    q.push(e.to);
                }
        }
        return seen;
    }

private:
    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& e : adj_[u])
                if (e.cap > kCapEps && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    q.push(e.to);
                }
        }
        return level_[t] >= 0;
    }

    double dfs(int u, int t, double limit) {
        if (u == t) return limit;
        for (int& i = iter_[u]; i < int(adj_[u].size()); ++i) {
            auto& e = adj_[u][i];
            if (e.cap <= kCapEps || level_[e.to] != level_[u] + 1) continue;
            double pushed = dfs(e.to, t, std::min(limit, e.cap));
            if (pushed > kCapEps) {
                e.cap -= pushed;
                adj_[e.to][e.rev].cap += pushed;
                return pushed;
            }
        }
        return 0.0;
    }

    std::vector<std::vector<FlowNetwork::Edge>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

MinCutResult min_cut_side(const FlowNetwork& net, int source, int sink, CutSide side) {
    if (source == sink) throw std::invalid_argument("min cut: source equals sink");
    DinicSolver solver(net);
    MinCutResult res;
    res.value = solver.run(source, sink);
    std::vector<char> reach = solver.source_reachable(source);
    for (int v = 0; v < net.num_nodes(); ++v) {
        if (net.isolated(v)) continue;
        if (side == CutSide::Source && reach[v] && v != source) res.side.push_back(v);
        if (side == CutSide::Sink && !reach[v] && v != sink) res.side.push_back(v);
    }
    return res;
}

} // namespace mfc
