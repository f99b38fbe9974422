#include "mfc/oracle.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_set>

namespace mfc {

namespace {

void extend_paths(const Dag& g, std::vector<int>& cur, std::vector<Path>& out) {
    out.push_back(Path{cur, PathKind::Internal});
    int v = cur.back();
    for (int a : g.out_arcs(v)) {
        cur.push_back(g.arcs()[a].second);
        extend_paths(g, cur, out);
        cur.pop_back();
    }
}

uint64_t node_mask(const std::vector<int>& nodes) {
    uint64_t m = 0;
    for (int v : nodes) m |= uint64_t{1} << (v - 1);
    return m;
}

bool has_mandatory(const Instance& inst, const std::vector<int>& nodes) {
    for (size_t k = 0; k + 1 < nodes.size(); ++k) {
        int a = inst.dag.arc_index(nodes[k], nodes[k + 1]);
        if (inst.is_mandatory(a)) return true;
    }
    return false;
}

} // namespace

std::vector<Path> enumerate_internal_paths(const Dag& g) {
    if (g.n() > kOracleMaxN) throw std::runtime_error("oracle: n exceeds guard");
    std::vector<Path> out;
    std::vector<int> cur;
    for (int v = 1; v <= g.n(); ++v) {
        cur.assign(1, v);
        extend_paths(g, cur, out);
    }
    return out;
}

OracleResult enumerate_best(const Instance& inst) {
    const int n = inst.n();
    if (n > kOracleMaxN) throw std::runtime_error("oracle: n exceeds guard");

    std::vector<uint64_t> masks;
    std::vector<Path> feas;
    for (auto& p : enumerate_internal_paths(inst.dag)) {
        if (p.nodes.size() < 2 || !has_mandatory(inst, p.nodes)) continue;
        masks.push_back(node_mask(p.nodes));
        feas.push_back(std::move(p));
    }
    std::vector<std::vector<int>> by_node(n + 1);
    for (int pi = 0; pi < int(feas.size()); ++pi)
        for (int v : feas[pi].nodes) by_node[v].push_back(pi);

    // best[avail] = min cost over collections of disjoint feasible paths within
    // avail; cost of a path on h nodes is 1 - h*n, so min cost maximizes the
    // covered count first and minimizes the path count second
    const uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    const long long unset = LLONG_MAX;
    std::vector<long long> best(full + 1, unset);
    std::vector<int> choice(full + 1, -2);   // path index, or -1 = leave lowest node uncovered

    auto solve = [&](auto&& self, uint64_t avail) -> long long {
        if (avail == 0) return 0;
        if (best[avail] != unset) return best[avail];
        int v = __builtin_ctzll(avail) + 1;
        long long b = self(self, avail & (avail - 1));   // v stays uncovered
        int pick = -1;
        for (int pi : by_node[v]) {
            if ((masks[pi] & avail) != masks[pi]) continue;
            long long c = 1 - (long long)feas[pi].nodes.size() * n + self(self, avail & ~masks[pi]);
            if (c < b) { b = c; pick = pi; }
        }
        best[avail] = b;
        choice[avail] = pick;
        return b;
    };
    long long w = solve(solve, full);

    OracleResult res;
    res.cost = w;
    uint64_t avail = full;
    while (avail) {
        int pick = choice[avail];
        if (pick < 0) {
            avail &= avail - 1;
        } else {
            res.witness.push_back(feas[pick]);
            res.covered += int(feas[pick].nodes.size());
            res.paths += 1;
            avail &= ~masks[pick];
        }
    }
    return res;
}

bool check_fpc(const Instance& inst) {
    const int n = inst.n();
    if (n > kFpcMaxN) throw std::runtime_error("oracle: n exceeds guard");

    // enumerate feasible paths as node masks, grouped by lowest node
    std::vector<uint64_t> masks;
    {
        std::vector<int> cur;
        std::vector<Path> all;
        for (int v = 1; v <= n; ++v) {
            cur.assign(1, v);
            extend_paths(inst.dag, cur, all);
            if (all.size() > 2'000'000) throw std::runtime_error("oracle: path count exceeds guard");
        }
        for (auto& p : all)
            if (p.nodes.size() >= 2 && has_mandatory(inst, p.nodes))
                masks.push_back(node_mask(p.nodes));
    }
    std::vector<std::vector<uint64_t>> by_node(n + 1);
    for (uint64_t m : masks)
        for (int v = 1; v <= n; ++v)
            if (m & (uint64_t{1} << (v - 1))) by_node[v].push_back(m);
    for (int v = 1; v <= n; ++v)
        if (by_node[v].empty()) return false;

    const uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    std::unordered_set<uint64_t> dead;
    auto cover = [&](auto&& self, uint64_t covered) -> bool {
        if (covered == full) return true;
        if (dead.count(covered)) return false;
        int v = __builtin_ctzll(~covered) + 1;
        for (uint64_t m : by_node[v])
            if (!(m & covered) && self(self, covered | m)) return true;
        dead.insert(covered);
        return false;
    };
    return cover(cover, 0);
}

std::vector<Path> enumerate_paths(const AugmentedGraph& g, bool feasible_only) {
    if (g.n() > kOracleMaxN) throw std::runtime_error("oracle: n exceeds guard");
    std::vector<Path> out;
    std::vector<int> cur{0};
    auto dfs = [&](auto&& self, int v, bool feas) -> void {
        if (v == g.sink()) {
            if (!feasible_only || feas) out.push_back(Path{cur, PathKind::Augmented});
            return;
        }
        for (int a : g.out_arcs(v)) {
            int w = g.arcs()[a].second;
            cur.push_back(w);
            self(self, w, feas || g.is_mandatory_arc(a));
            cur.pop_back();
        }
    };
    dfs(dfs, 0, false);
    return out;
}

int brute_min_path_cover(const Dag& g) {
    const int n = g.n();
    if (n > kOracleMaxN) throw std::runtime_error("oracle: n exceeds guard");
    std::vector<uint64_t> masks;
    for (auto& p : enumerate_internal_paths(g)) masks.push_back(node_mask(p.nodes));
    std::vector<std::vector<uint64_t>> by_node(n + 1);
    for (uint64_t m : masks)
        for (int v = 1; v <= n; ++v)
            if (m & (uint64_t{1} << (v - 1))) by_node[v].push_back(m);

    const uint64_t full = (uint64_t{1} << n) - 1;
    std::vector<int> best(full + 1, -1);
    auto solve = [&](auto&& self, uint64_t avail) -> int {
        if (avail == 0) return 0;
        if (best[avail] >= 0) return best[avail];
        int v = __builtin_ctzll(avail) + 1;
        int b = INT_MAX;
        for (uint64_t m : by_node[v]) {
            if ((m & avail) != m) continue;
            b = std::min(b, 1 + self(self, avail & ~m));
        }
        return best[avail] = b;
    };
    return solve(solve, full);
}

} // namespace mfc
