#include "mfc/separation.hpp"

#include <algorithm>
#include <cmath>

#include "mfc/maxflow.hpp"

namespace mfc {

SupportGraph::SupportGraph(const AugmentedGraph& g, const std::vector<double>& y,
                           bool drop_mandatory, double eps)
    : graph(&g), out(g.n() + 2), kept(g.num_arcs(), 0) {
    for (int a = 0; a < g.num_arcs(); ++a) {
        if (y[a] <= eps) continue;
        if (drop_mandatory && g.is_mandatory_arc(a)) continue;
        kept[a] = 1;
        out[g.arcs()[a].first].push_back(a);
    }
}

std::optional<std::pair<Path, double>> longest_path_dag(const SupportGraph& sg,
                                                        const std::vector<double>& weight) {
    const AugmentedGraph& g = *sg.graph;
    const double kNone = -1e300;
    std::vector<double> dist(g.n() + 2, kNone);
    std::vector<int> pred(g.n() + 2, -1);
    dist[0] = 0.0;

    std::vector<int> order;
    order.reserve(g.n() + 2);
    order.push_back(0);
    for (int v : g.base().dag.topo_order()) order.push_back(v);
    order.push_back(g.sink());

    for (int u : order) {
        if (dist[u] <= kNone / 2) continue;
        for (int a : sg.out[u]) {
            int v = g.arcs()[a].second;
            double cand = dist[u] + weight[a];
            if (cand > dist[v] + 1e-12 || (cand > dist[v] - 1e-12 && (pred[v] < 0 || u < pred[v]))) {
                dist[v] = std::max(cand, dist[v]);
                pred[v] = u;
            }
        }
    }
    if (dist[g.sink()] <= kNone / 2) return std::nullopt;

    Path p;
    p.kind = PathKind::Augmented;
    for (int v = g.sink(); v >= 0; v = pred[v]) {
        p.nodes.push_back(v);
        if (v == 0) break;
    }
    std::reverse(p.nodes.begin(), p.nodes.end());
    return std::make_pair(std::move(p), dist[g.sink()]);
}

std::vector<Cut> separate_ipc_tc(const AugmentedGraph& g, const std::vector<double>& y) {
    std::vector<Cut> cuts;
    SupportGraph sg(g, y, /*drop_mandatory=*/true);
    std::vector<double> u(g.num_arcs(), 0.0);
    for (int a = 0; a < g.num_arcs(); ++a)
        if (sg.kept[a]) u[a] = y[a] - 1.0;
    auto found = longest_path_dag(sg, u);
    if (!found) return cuts;
    const auto& [p, alpha] = *found;
    if (alpha + 1.0 <= kEps) return cuts;

    cuts.push_back(make_tc1(g, p));
    const auto& v = p.nodes;
    const int h = int(v.size()) - 2;
    double sum_p = alpha + double(h + 1);   // mass on the path arcs
    std::vector<char> on_path(g.n() + 2, 0);
    for (int w : v) on_path[w] = 1;
    for (int l = 1; l <= h - 1; ++l) {
        int mid = g.arc_index(v[l], v[l + 1]);
        for (int k = 1; k <= g.n(); ++k) {
            if (on_path[k]) continue;
            int in_arc = g.arc_index(v[l], k);
            int out_arc = g.arc_index(k, v[l + 1]);
            if (in_arc < 0 || out_arc < 0) continue;
            if (g.is_mandatory_arc(in_arc) || g.is_mandatory_arc(out_arc)) continue;
            double lifted_mass = sum_p - y[mid] + y[in_arc] + y[out_arc];
            if (lifted_mass <= double(h + 1) + kEps) continue;   // lifted path's own violation
            cuts.push_back(make_tc2(g, p, l, k));
            Path lifted;
            lifted.kind = PathKind::Augmented;
            lifted.nodes.assign(v.begin(), v.begin() + l + 1);
            lifted.nodes.push_back(k);
            lifted.nodes.insert(lifted.nodes.end(), v.begin() + l + 1, v.end());
            cuts.push_back(make_tc1(g, lifted));
        }
    }
    return cuts;
}

std::optional<Cut> separate_tic(const AugmentedGraph& g, const std::vector<double>& y) {
    double mand = 0.0, source = 0.0;
    for (int a : g.base().mandatory) mand += y[a];
    for (int i = 1; i <= g.n(); ++i) source += y[g.source_arc(i)];
    if (mand < source - kEps) return make_tic(g);
    return std::nullopt;
}

ConflictGraph build_conflict_graph(const AugmentedGraph& g, std::vector<double> w) {
    ConflictGraph cg;
    cg.n = g.n();
    cg.w = std::move(w);
    cg.adj.assign(g.n() + 1, Bitset(g.n() + 1));
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            if (!conflicting(g, i, j)) {
                cg.adj[i].set(j);
                cg.adj[j].set(i);
            }
    return cg;
}

std::vector<int> gwmin(const ConflictGraph& cg) {
    std::vector<char> alive(cg.n + 1, 1);
    std::vector<int> picked;
    for (;;) {
        int best = -1;
        double best_ratio = 0.0;
        for (int i = 1; i <= cg.n; ++i) {
            if (!alive[i] || cg.w[i] <= kEps) continue;
            int deg = 0;
            cg.adj[i].for_each([&](int j) { deg += alive[j]; });
            double ratio = cg.w[i] / double(deg + 1);
            if (best < 0 || ratio > best_ratio + 1e-12) {
                best = i;
                best_ratio = ratio;
            }
        }
        if (best < 0) break;
        picked.push_back(best);
        alive[best] = 0;
        cg.adj[best].for_each([&](int j) { alive[j] = 0; });
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

namespace {

struct MwisSearch {
    const ConflictGraph* cg;
    std::vector<int> cand;         // candidate nodes, heaviest first
    std::vector<double> suffix;    // suffix weight sums over cand
    std::vector<int> cur, best;
    double cur_w = 0.0, best_w = 0.0;

    void run(size_t idx, const Bitset& blocked) {
        if (idx == cand.size()) {
            if (cur_w > best_w + 1e-12) {
                best_w = cur_w;
                best = cur;
            }
            return;
        }
        if (cur_w + suffix[idx] <= best_w + 1e-12) return;
        int v = cand[idx];
        if (!blocked.test(v)) {
            Bitset next = blocked;
            next.set(v);
            next.or_with(cg->adj[v]);
            cur.push_back(v);
            cur_w += cg->w[v];
            run(idx + 1, next);
            cur_w -= cg->w[v];
            cur.pop_back();
        }
        run(idx + 1, blocked);
    }
};

} // namespace

std::vector<int> exact_mwis(const ConflictGraph& cg) {
    MwisSearch s;
    s.cg = &cg;
    for (int i = 1; i <= cg.n; ++i)
        if (cg.w[i] > kEps) s.cand.push_back(i);
    std::stable_sort(s.cand.begin(), s.cand.end(),
                     [&](int a, int b) { return cg.w[a] > cg.w[b] + 1e-12; });
    s.suffix.assign(s.cand.size() + 1, 0.0);
    for (size_t i = s.cand.size(); i-- > 0;) s.suffix[i] = s.suffix[i + 1] + cg.w[s.cand[i]];
    s.run(0, Bitset(cg.n + 1));
    std::sort(s.best.begin(), s.best.end());
    return s.best;
}

namespace {

double family_mass(const Bitset& fam, const std::vector<double>& y) {
    double m = 0.0;
    fam.for_each([&](int a) { m += y[a]; });
    return m;
}

// Branch and bound maximizing sum z(T) - y(union of families over T) over
// independent sets; the plain z sum bounds the remainder from above.
struct AgrcSearch {
    const ConflictGraph* cg;
    const ArcSetFamilies* fam;
    const std::vector<double>* y;
    const std::vector<double>* z;
    std::vector<int> cand;
    std::vector<double> suffix_z;
    std::vector<int> cur, best;
    double cur_f = 0.0, best_f = 0.0;
    Bitset used;

    void run(size_t idx, const Bitset& blocked) {
        if (cur_f > best_f + 1e-12) {
            best_f = cur_f;
            best = cur;
        }
        if (idx == cand.size()) return;
        if (cur_f + suffix_z[idx] <= best_f + 1e-12) return;
        int v = cand[idx];
        if (!blocked.test(v)) {
            double gain = (*z)[v];
            std::vector<int> newly;
            fam->mand_in[v].for_each([&](int a) {
                if (!used.test(a)) {
                    used.set(a);
                    newly.push_back(a);
                    gain -= (*y)[a];
                }
            });
            fam->mand_out[v].for_each([&](int a) {
                if (!used.test(a)) {
                    used.set(a);
                    newly.push_back(a);
                    gain -= (*y)[a];
                }
            });
            Bitset next = blocked;
            next.set(v);
            next.or_with(cg->adj[v]);
            cur.push_back(v);
            cur_f += gain;
            run(idx + 1, next);
            cur_f -= gain;
            cur.pop_back();
            for (int a : newly) used.reset(a);
        }
        run(idx + 1, blocked);
    }
};

} // namespace

std::optional<Cut> separate_agrc(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                 const std::vector<double>& y, MwisMode mode) {
    std::vector<double> z = compute_z(g, y);
    std::vector<int> t;
    double total = 0.0;

    if (mode == MwisMode::Greedy) {
        std::vector<double> w(g.n() + 1, 0.0);
        for (int i = 1; i <= g.n(); ++i)
            w[i] = z[i] - family_mass(fam.mand_in[i], y) - family_mass(fam.mand_out[i], y);
        ConflictGraph cg = build_conflict_graph(g, w);
        std::vector<char> alive(g.n() + 1, 1);
        Bitset used(g.num_arcs());
        for (;;) {
            int best = -1;
            double best_ratio = 0.0;
            for (int i = 1; i <= g.n(); ++i) {
                if (!alive[i] || cg.w[i] <= kEps) continue;
                int deg = 0;
                cg.adj[i].for_each([&](int j) { deg += alive[j]; });
                double ratio = cg.w[i] / double(deg + 1);
                if (best < 0 || ratio > best_ratio + 1e-12) {
                    best = i;
                    best_ratio = ratio;
                }
            }
            if (best < 0) break;
            t.push_back(best);
            total += cg.w[best];
            alive[best] = 0;
            cg.adj[best].for_each([&](int j) { alive[j] = 0; });
            used.or_with(fam.mand_in[best]);
            used.or_with(fam.mand_out[best]);
            // remaining weights drop the arcs already charged to the set
            for (int j = 1; j <= g.n(); ++j) {
                if (!alive[j]) continue;
                double m = 0.0;
                fam.mand_in[j].for_each([&](int a) {
                    if (!used.test(a)) m += y[a];
                });
                fam.mand_out[j].for_each([&](int a) {
                    if (!used.test(a)) m += y[a];
                });
                cg.w[j] = z[j] - m;
            }
        }
        std::sort(t.begin(), t.end());
    } else {
        ConflictGraph cg = build_conflict_graph(g, z);
        AgrcSearch s;
        s.cg = &cg;
        s.fam = &fam;
        s.y = &y;
        s.z = &z;
        s.used = Bitset(g.num_arcs());
        for (int i = 1; i <= g.n(); ++i)
            if (z[i] > kEps) s.cand.push_back(i);
        std::stable_sort(s.cand.begin(), s.cand.end(),
                         [&](int a, int b) { return z[a] > z[b] + 1e-12; });
        s.suffix_z.assign(s.cand.size() + 1, 0.0);
        for (size_t i = s.cand.size(); i-- > 0;) s.suffix_z[i] = s.suffix_z[i + 1] + z[s.cand[i]];
        s.run(0, Bitset(g.n() + 1));
        t = s.best;
        total = s.best_f;
        std::sort(t.begin(), t.end());
    }

    if (t.empty() || total <= kEps) return std::nullopt;
    return make_agrc(g, fam, t);
}

namespace {

std::vector<int> choose_t(const AugmentedGraph& g, const std::vector<double>& z, MwisMode mode) {
    ConflictGraph cg = build_conflict_graph(g, z);
    return mode == MwisMode::Greedy ? gwmin(cg) : exact_mwis(cg);
}

double crossing_in(const AugmentedGraph& g, const std::vector<double>& y, const Bitset& fam,
                   const std::vector<char>& in_s) {
    double m = 0.0;
    for (int a = 0; a < g.num_arcs(); ++a) {
        auto [u, v] = g.arcs()[a];
        if (fam.test(a) && !in_s[u] && in_s[v]) m += y[a];
    }
    return m;
}

double crossing_out(const AugmentedGraph& g, const std::vector<double>& y, const Bitset& fam,
                    const std::vector<char>& in_s) {
    double m = 0.0;
    for (int a = 0; a < g.num_arcs(); ++a) {
        auto [u, v] = g.arcs()[a];
        if (fam.test(a) && in_s[u] && !in_s[v]) m += y[a];
    }
    return m;
}

std::vector<char> member_flags(int n, const std::vector<int>& nodes) {
    std::vector<char> f(n + 2, 0);
    for (int v : nodes) f[v] = 1;
    return f;
}

// Min cut separating T's prefix families from the source: sink side of the
// network over in_fam plus infinite arcs T -> sink.
MinCutResult prefix_cut(const AugmentedGraph& g, const std::vector<double>& y, const Bitset& in_fam,
                        const std::vector<int>& t) {
    FlowNetwork net(g.n() + 2);
    double big = double(g.n() + 3);
    in_fam.for_each([&](int a) { net.add_arc(g.arcs()[a].first, g.arcs()[a].second, y[a]); });
    for (int i : t) net.add_arc(i, g.sink(), big);
    return min_cut_side(net, 0, g.sink(), CutSide::Sink);
}

MinCutResult suffix_cut(const AugmentedGraph& g, const std::vector<double>& y,
                        const Bitset& out_fam, const std::vector<int>& t) {
    FlowNetwork net(g.n() + 2);
    double big = double(g.n() + 3);
    out_fam.for_each([&](int a) { net.add_arc(g.arcs()[a].first, g.arcs()[a].second, y[a]); });
    for (int i : t) net.add_arc(0, i, big);
    return min_cut_side(net, 0, g.sink(), CutSide::Source);
}

double z_sum(const std::vector<double>& z, const std::vector<int>& t) {
    double s = 0.0;
    for (int i : t) s += z[i];
    return s;
}

} // namespace

std::optional<Cut> separate_rcpm(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                 const std::vector<double>& y, MwisMode mode,
                                 RcSeparationDetail* detail) {
    std::vector<double> z = compute_z(g, y);
    std::vector<int> t = choose_t(g, z, mode);
    if (t.empty()) return std::nullopt;

    Bitset in_fam = fam.union_of(fam.reach_in, t);
    Bitset out_fam = fam.union_of(fam.reach_out, t);
    MinCutResult cut1 = prefix_cut(g, y, in_fam, t);
    MinCutResult cut2 = suffix_cut(g, y, out_fam, t);

    std::vector<int> s = cut1.side;
    s.insert(s.end(), cut2.side.begin(), cut2.side.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    double rhs = z_sum(z, t);
    if (detail) {
        std::vector<char> in_s1 = member_flags(g.n(), cut1.side);
        std::vector<char> in_s2 = member_flags(g.n(), cut2.side);
        std::vector<char> in_s = member_flags(g.n(), s);
        detail->t = t;
        detail->s1 = cut1.side;
        detail->s2 = cut2.side;
        detail->s = s;
        detail->flow_in = cut1.value;
        detail->flow_out = cut2.value;
        detail->cross_in_s1 = crossing_in(g, y, in_fam, in_s1);
        detail->cross_in_s = crossing_in(g, y, in_fam, in_s);
        detail->cross_out_s2 = crossing_out(g, y, out_fam, in_s2);
        detail->cross_out_s = crossing_out(g, y, out_fam, in_s);
        detail->rhs = rhs;
    }
    if (cut1.value + cut2.value >= rhs - kEps) return std::nullopt;
    return make_rcpm(g, fam, s, t);
}

std::optional<Cut> separate_rcminus(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                    const std::vector<double>& y, MwisMode mode,
                                    RcSeparationDetail* detail) {
    std::vector<double> z = compute_z(g, y);
    std::vector<int> t = choose_t(g, z, mode);
    if (t.empty()) return std::nullopt;

    Bitset in_fam = fam.union_of(fam.partial_in, t);
    MinCutResult cut1 = prefix_cut(g, y, in_fam, t);
    double rhs = z_sum(z, t);
    if (detail) {
        detail->t = t;
        detail->s1 = cut1.side;
        detail->s = cut1.side;
        detail->flow_in = cut1.value;
        std::vector<char> in_s = member_flags(g.n(), cut1.side);
        detail->cross_in_s1 = detail->cross_in_s = crossing_in(g, y, in_fam, in_s);
        detail->rhs = rhs;
    }
    if (cut1.value >= rhs - kEps) return std::nullopt;
    return make_rcminus(g, fam, cut1.side, t);
}

std::optional<Cut> separate_rcplus(const AugmentedGraph& g, const ArcSetFamilies& fam,
                                   const std::vector<double>& y, MwisMode mode,
                                   RcSeparationDetail* detail) {
    std::vector<double> z = compute_z(g, y);
    std::vector<int> t = choose_t(g, z, mode);
    if (t.empty()) return std::nullopt;

    Bitset out_fam = fam.union_of(fam.partial_out, t);
    MinCutResult cut2 = suffix_cut(g, y, out_fam, t);
    double rhs = z_sum(z, t);
    if (detail) {
        detail->t = t;
        detail->s2 = cut2.side;
        detail->s = cut2.side;
        detail->flow_out = cut2.value;
        std::vector<char> in_s = member_flags(g.n(), cut2.side);
        detail->cross_out_s2 = detail->cross_out_s = crossing_out(g, y, out_fam, in_s);
        detail->rhs = rhs;
    }
    if (cut2.value >= rhs - kEps) return std::nullopt;
    return make_rcplus(g, fam, cut2.side, t);
}

} // namespace mfc
