#include "mfc/special.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <stdexcept>

namespace mfc {

namespace {

/// Hopcroft-Karp on the split graph: left copy = arc tails, right copy = heads.
struct SplitMatching {
    const Dag& g;
    std::vector<int> match_l, match_r, dist;
    static constexpr int INF = INT_MAX;

    explicit SplitMatching(const Dag& dag)
        : g(dag), match_l(dag.n() + 1, 0), match_r(dag.n() + 1, 0), dist(dag.n() + 1, 0) {}

    bool bfs() {
        std::queue<int> q;
        for (int u = 1; u <= g.n(); ++u) {
            if (match_l[u] == 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = INF;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : g.out_arcs(u)) {
                int v = g.arcs()[a].second;
                int w = match_r[v];
                if (w == 0) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(int u) {
        for (int a : g.out_arcs(u)) {
            int v = g.arcs()[a].second;
            int w = match_r[v];
            if (w == 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    }

    void run() {
        while (bfs())
            for (int u = 1; u <= g.n(); ++u)
                if (match_l[u] == 0) dfs(u);
    }
};

} // namespace

std::vector<Path> min_path_cover(const Dag& g) {
    SplitMatching m(g);
    m.run();
    std::vector<Path> cover;
    for (int v = 1; v <= g.n(); ++v) {
        if (m.match_r[v] != 0) continue;   // not a chain head
        Path p;
        p.kind = PathKind::Internal;
        for (int w = v; w != 0; w = m.match_l[w]) p.nodes.push_back(w);
        cover.push_back(std::move(p));
    }
    return cover;
}

std::optional<std::vector<Path>> solve_transitive_path(int n, const std::vector<Arc>& mandatory) {
    if (n < 1) throw std::invalid_argument("solve_transitive_path: n must be >= 1");
    for (auto [i, j] : mandatory)
        if (i < 1 || j <= i || j > n)
            throw std::invalid_argument("solve_transitive_path: pair outside the closure");

    auto run = [](int a, int b) {   // consecutive nodes a..b, may be empty
        std::vector<int> v;
        for (int x = a; x <= b; ++x) v.push_back(x);
        return v;
    };

    if (mandatory.empty()) return std::nullopt;

    for (auto [i, j] : mandatory)
        if (j == i + 1) {
            Path p;
            p.kind = PathKind::Internal;
            p.nodes = run(1, n);
            return std::vector<Path>{p};
        }

    // all gaps >= 2: a full cover needs two arcs in one of the two workable
    // layouts (disjoint with a gap, or head meeting the second tail + 1)
    auto sorted = mandatory;
    std::sort(sorted.begin(), sorted.end());
    for (auto [i, ik] : sorted)
        for (auto [j, jk] : sorted) {
            if (j <= i) continue;
            Path p1, p2;
            p1.kind = p2.kind = PathKind::Internal;
            if (ik < j) {
                // (v1..vi, v_{i+k}, v_{j+1}..v_{j+k'-1}) and
                // (v_{i+1}..v_{i+k-1}, v_{i+k+1}..v_j, v_{j+k'}..v_n)
                p1.nodes = run(1, i);
                p1.nodes.push_back(ik);
                auto t = run(j + 1, jk - 1);
                p1.nodes.insert(p1.nodes.end(), t.begin(), t.end());
                p2.nodes = run(i + 1, ik - 1);
                t = run(ik + 1, j);
                p2.nodes.insert(p2.nodes.end(), t.begin(), t.end());
                t = run(jk, n);
                p2.nodes.insert(p2.nodes.end(), t.begin(), t.end());
                return std::vector<Path>{p1, p2};
            }
            if (ik == j + 1) {
                // (v1..vi, v_{i+k}..v_{j+k'-1}) and (v_{i+1}..v_j, v_{j+k'}..v_n)
                p1.nodes = run(1, i);
                auto t = run(ik, jk - 1);
                p1.nodes.insert(p1.nodes.end(), t.begin(), t.end());
                p2.nodes = run(i + 1, j);
                t = run(jk, n);
                p2.nodes.insert(p2.nodes.end(), t.begin(), t.end());
                return std::vector<Path>{p1, p2};
            }
        }
    return std::nullopt;
}

Instance build_3dm_gadget(int q, const std::vector<Triple>& triples) {
    if (q < 1) throw std::invalid_argument("build_3dm_gadget: q must be >= 1");
    for (auto& t : triples)
        if (t.x < 1 || t.x > q || t.y < 1 || t.y > q || t.z < 1 || t.z > q)
            throw std::invalid_argument("build_3dm_gadget: triple element out of range");

    // nodes: x_i = i, y_j = q+j, z_k = 2q+k, then a1,a2,b1,b2 per triple
    const int mcount = int(triples.size());
    const int n = 3 * q + 4 * mcount;
    std::vector<Arc> arcs;
    std::vector<int> mand;
    for (int m = 0; m < mcount; ++m) {
        const auto& t = triples[m];
        int x = t.x, y = q + t.y, z = 2 * q + t.z;
        int a1 = 3 * q + 4 * m + 1, a2 = a1 + 1, b1 = a1 + 2, b2 = a1 + 3;
        int base = int(arcs.size());
        arcs.emplace_back(x, a1);
        arcs.emplace_back(a1, y);
        arcs.emplace_back(y, b1);
        arcs.emplace_back(b1, z);
        arcs.emplace_back(z, a2);
        arcs.emplace_back(a2, b2);
        arcs.emplace_back(a1, a2);
        arcs.emplace_back(b1, b2);
        mand.push_back(base);       // (x, a1)
        mand.push_back(base + 6);   // (a1, a2)
        mand.push_back(base + 7);   // (b1, b2)
    }
    return Instance(Dag(n, std::move(arcs)), std::move(mand));
}

} // namespace mfc
