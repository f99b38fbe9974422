#include "mfc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace mfc {

namespace {

// True when dropping arc `skip` keeps the arc set weakly connected over 1..n.
bool weakly_connected_without(int n, const std::vector<Arc>& arcs,
                              const std::vector<char>& alive, int skip) {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n + 1);
    for (int a = 0; a < (int)arcs.size(); ++a) {
        if (!alive[a] || a == skip) continue;
        adj[arcs[a].first].push_back(arcs[a].second);
        adj[arcs[a].second].push_back(arcs[a].first);
    }
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

} // namespace

Instance gen_set_a(int n, double pa, double pac, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_set_a: n must be positive");
    if (!(pa > 0.0 && pa <= 1.0)) throw std::invalid_argument("gen_set_a: pa must be in (0,1]");
    if (!(pac >= 0.0 && pac <= 1.0)) throw std::invalid_argument("gen_set_a: pac must be in [0,1]");

    std::vector<Arc> closure;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) closure.emplace_back(i, j);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<char> alive(closure.size(), 1);
    for (int a = 0; a < (int)closure.size(); ++a) {
        if (unif(rng) < 1.0 - pa) {
            if (weakly_connected_without(n, closure, alive, a)) alive[a] = 0;
        }
    }

    std::vector<Arc> arcs;
    for (int a = 0; a < (int)closure.size(); ++a)
        if (alive[a]) arcs.push_back(closure[a]);

    std::vector<int> mandatory;
    for (int a = 0; a < (int)arcs.size(); ++a)
        if (unif(rng) < pac) mandatory.push_back(a);

    return Instance(Dag(n, arcs), mandatory);
}

Instance gen_set_c(int n, double density_target, double sparsity_target, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_set_c: n must be at least 2");
    if (!(density_target > 0.0 && density_target <= 1.0))
        throw std::invalid_argument("gen_set_c: density target must be in (0,1]");
    if (!(sparsity_target > 0.0 && sparsity_target <= 1.0))
        throw std::invalid_argument("gen_set_c: sparsity target must be in (0,1]");

    constexpr double kHorizon = 43200.0; // minutes in 30 days

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> start_frac(n), dur_frac(n);
    for (int i = 0; i < n; ++i) start_frac[i] = unif(rng);
    for (int i = 0; i < n; ++i) dur_frac[i] = unif(rng);

    // Intervals ordered by start time so every arc goes forward.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (start_frac[a] != start_frac[b]) return start_frac[a] < start_frac[b];
        return a < b;
    });
    std::vector<double> start(n);
    for (int i = 0; i < n; ++i) start[i] = start_frac[order[i]] * kHorizon;

    const double max_arcs = double(n) * (n - 1) / 2.0;
    auto build_arcs = [&](double scale) {
        std::vector<Arc> arcs;
        std::vector<double> gaps;
        for (int i = 0; i < n; ++i) {
            double fin = start[i] + dur_frac[order[i]] * scale;
            for (int j = i + 1; j < n; ++j) {
                if (fin < start[j]) {
                    arcs.emplace_back(i + 1, j + 1);
                    gaps.push_back(start[j] - fin);
                }
            }
        }
        return std::make_pair(arcs, gaps);
    };

    // Density falls as durations grow; bisect the duration scale, first
    // widening the bracket until the upper end undershoots the target.
    double lo = 0.0, hi = kHorizon;
    for (int it = 0; it < 60; ++it) {
        auto [a, g] = build_arcs(hi);
        if (a.size() / max_arcs <= density_target) break;
        hi *= 2.0;
    }
    std::vector<Arc> arcs;
    std::vector<double> gaps;
    bool tuned = false;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        auto [a, g] = build_arcs(mid);
        double density = a.size() / max_arcs;
        if (std::abs(density - density_target) <= 0.1 * density_target) {
            arcs = std::move(a);
            gaps = std::move(g);
            tuned = true;
            break;
        }
        if (density > density_target)
            lo = mid;
        else
            hi = mid;
    }
    if (!tuned) throw std::runtime_error("gen_set_c: density tuning failed");
    if (arcs.empty()) throw std::runtime_error("gen_set_c: tuned instance has no arcs");

    // Mandatory arcs are the widest gaps; ties may push sparsity above target.
    int m = (int)arcs.size();
    int want = (int)std::ceil(sparsity_target * m);
    want = std::max(1, std::min(want, m));
    std::vector<double> sorted_gaps = gaps;
    std::nth_element(sorted_gaps.begin(), sorted_gaps.begin() + (want - 1), sorted_gaps.end(),
                     std::greater<double>());
    double threshold = sorted_gaps[want - 1];
    std::vector<int> mandatory;
    for (int a = 0; a < m; ++a)
        if (gaps[a] >= threshold) mandatory.push_back(a);

    return Instance(Dag(n, arcs), mandatory);
}

InstanceStats stats(const Instance& inst) {
    InstanceStats s;
    int n = inst.dag.n();
    double denom = double(n) * (n - 1) / 2.0;
    s.density = denom > 0.0 ? 100.0 * inst.dag.arcs().size() / denom : 0.0;
    if (!inst.dag.arcs().empty())
        s.sparsity = 100.0 * double(inst.mandatory.size()) / double(inst.dag.arcs().size());
    return s;
}

} // namespace mfc
