#include "mfc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "mfc/cuts.hpp"
#include "mfc/families.hpp"
#include "mfc/simplex.hpp"

namespace mfc {

const char* variant_name(CutVariant v) {
    switch (v) {
        case CutVariant::Ipc: return "ipc";
        case CutVariant::AGrc: return "agrc";
        case CutVariant::Rc: return "rc";
    }
    return "?";
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::InfeasibleEmpty: return "infeasible-empty";
        case SolveStatus::Timeout: return "timeout";
    }
    return "?";
}

std::vector<Path> decompose_integral(const AugmentedGraph& g, const std::vector<double>& y) {
    const int n = g.n();
    std::vector<char> on(g.num_arcs(), 0);
    int selected = 0;
    for (int a = 0; a < g.num_arcs(); ++a) {
        if (y[a] > 0.5) {
            if (std::fabs(y[a] - 1.0) > 1e-6)
                throw std::invalid_argument("decompose: fractional value");
            on[a] = 1;
            ++selected;
        } else if (y[a] > 1e-6) {
            throw std::invalid_argument("decompose: fractional value");
        }
    }
    std::vector<char> visited(n + 2, 0);
    std::vector<Path> paths;
    int consumed = 0;
    for (int i = 1; i <= n; ++i) {
        if (!on[g.source_arc(i)]) continue;
        Path p;
        p.kind = PathKind::Internal;
        ++consumed;
        int v = i;
        while (v != g.sink()) {
            if (v == 0 || visited[v]) throw std::invalid_argument("decompose: node reused");
            visited[v] = 1;
            p.nodes.push_back(v);
            int next_arc = -1;
            for (int a : g.out_arcs(v))
                if (on[a]) {
                    if (next_arc >= 0) throw std::invalid_argument("decompose: split flow");
                    next_arc = a;
                }
            if (next_arc < 0) throw std::invalid_argument("decompose: path stops short of sink");
            ++consumed;
            v = g.arcs()[next_arc].second;
        }
        paths.push_back(std::move(p));
    }
    if (consumed != selected) throw std::invalid_argument("decompose: stray flow");
    return paths;
}

std::optional<double> best_gap(long long z_best, long long lb) {
    if (lb == 0) return std::nullopt;
    return std::fabs(double(z_best - lb) / double(lb)) * 100.0;
}

std::optional<double> obj_gap(const std::vector<double>& objs, const std::vector<double>& bests) {
    if (objs.size() != bests.size()) throw std::invalid_argument("obj_gap: length mismatch");
    double so = 0.0, sb = 0.0;
    for (double v : objs) so += v;
    for (double v : bests) sb += v;
    if (so == 0.0) return std::nullopt;
    return std::fabs(so - sb) / std::fabs(so) * 100.0;
}

namespace {

struct Node {
    double bound;
    long long id;
    int depth;
    std::vector<BoundOverride> fixes;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;
        return a.id > b.id;
    }
};

double ceil_bound(double v) { return std::ceil(v - kEps); }

// Greedy warm start: peel off a longest feasible path among unused nodes,
// repeat. Covering h more nodes with one more path changes W by 1 - h*n < 0,
// so every peeled path tightens the incumbent.
std::vector<Path> greedy_paths(const Instance& inst) {
    const int n = inst.n();
    const Dag& dag = inst.dag;
    std::vector<Path> out;
    std::vector<char> used(n + 1, 0);
    for (;;) {
        // len0/len1: longest path ending at v without/with a mandatory arc.
        std::vector<int> len0(n + 1, 1), len1(n + 1, -1);
        std::vector<int> pre0(n + 1, -1), pre1(n + 1, -1);   // prev*2 + prev_state
        int best = -1;
        for (int u : dag.topo_order()) {
            if (used[u]) continue;
            for (int a : dag.out_arcs(u)) {
                int v = dag.arcs()[a].second;
                if (used[v]) continue;
                if (inst.is_mandatory(a)) {
                    int cand = std::max(len0[u], len1[u]) + 1;
                    if (cand > len1[v]) {
                        len1[v] = cand;
                        pre1[v] = 2 * u + (len1[u] >= len0[u] ? 1 : 0);
                    }
                } else {
                    if (len0[u] + 1 > len0[v]) {
                        len0[v] = len0[u] + 1;
                        pre0[v] = 2 * u;
                    }
                    if (len1[u] >= 1 && len1[u] + 1 > len1[v]) {
                        len1[v] = len1[u] + 1;
                        pre1[v] = 2 * u + 1;
                    }
                }
            }
            if (len1[u] >= 2 && (best < 0 || len1[u] > len1[best])) best = u;
        }
        if (best < 0) break;
        Path p;
        int v = best, state = 1;
        for (;;) {
            p.nodes.push_back(v);
            int enc = state ? pre1[v] : pre0[v];
            if (enc < 0) break;
            v = enc / 2;
            state = enc & 1;
        }
        std::reverse(p.nodes.begin(), p.nodes.end());
        for (int w : p.nodes) used[w] = 1;
        out.push_back(std::move(p));
    }
    return out;
}

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

} // namespace

SolveReport solve(const Instance& inst, const SolveConfig& cfg) {
    Clock clock;
    AugmentedGraph g(inst);
    ArcSetFamilies fam = compute_arc_set_families(g);
    LinearProgram lp = build_f2_relaxation(inst);
    SimplexBackend backend;
    SolveReport rep;

    std::unordered_set<uint64_t> pool;
    auto add_cut_row = [&](const Cut& c) {
        if (!pool.insert(c.hash()).second) return false;
        lp.add_row(c.terms, c.sense, c.rhs, cut_class_name(c.klass));
        if (cfg.on_cut) cfg.on_cut(c);
        return true;
    };
    bool tic_added = false;

    long long inc_w = 0;   // the empty cover is always feasible
    std::vector<Path> incumbent;
    if (cfg.warm_start) {
        std::vector<Path> warm = greedy_paths(inst);
        if (!warm.empty()) {
            long long covered = 0;
            for (const Path& p : warm) covered += (long long)p.nodes.size();
            inc_w = (long long)warm.size() - covered * inst.n();
            incumbent = std::move(warm);
        }
    }

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    open.push(Node{-1e300, 0, 0, {}});
    long long next_id = 1;

    bool timed_out = false, node_limited = false;
    double interrupted_bound = 1e300;   // bound of a node cut off mid-processing

    while (!open.empty()) {
        if (clock.elapsed() > cfg.time_limit) {
            timed_out = true;
            break;
        }
        if (cfg.node_limit > 0 && rep.tree_nodes >= cfg.node_limit) {
            node_limited = true;
            break;
        }
        Node nd = open.top();
        open.pop();
        if (ceil_bound(nd.bound) >= double(inc_w)) continue;
        ++rep.tree_nodes;

        double node_obj = 1e300;
        bool branch = false;
        LpSolution sol;
        int rounds = 0;

        for (;;) {
            sol = backend.solve(lp, nd.fixes);
            if (sol.status != LpStatus::Optimal) break;   // branching fixes contradict the rows
            node_obj = sol.objective;
            if (ceil_bound(node_obj) >= double(inc_w)) break;

            double worst = 0.0;
            for (int a = 0; a < lp.num_vars(); ++a)
                worst = std::max(worst, std::fabs(sol.x[a] - std::round(sol.x[a])));
            if (worst <= 1e-6) {
                std::vector<Path> paths = decompose_integral(g, sol.x);
                int added = 0;
                for (const Path& p : paths)
                    if (!is_feasible_path(inst, p)) {
                        if (add_cut_row(make_ipc(g, to_augmented(p, g.n())))) {
                            ++rep.cuts.lazy_ipc;
                            ++added;
                        }
                    }
                if (!tic_added) {
                    if (auto c = separate_tic(g, sol.x)) {
                        if (add_cut_row(*c)) {
                            ++rep.cuts.lazy_tic;
                            ++added;
                            tic_added = true;
                        }
                    }
                }
                if (added) continue;
                long long w = std::llround(node_obj);
                if (w < inc_w) {
                    inc_w = w;
                    incumbent = std::move(paths);
                }
                break;
            }

            if (cfg.on_fractional) cfg.on_fractional(sol.x);
            if (rounds >= cfg.max_rounds) {
                branch = true;
                break;
            }
            if (clock.elapsed() > cfg.time_limit) {
                timed_out = true;
                break;
            }

            Clock sep_clock;
            int added = 0;
            {
                int n_tci = 0, n_tcii = 0;
                for (Cut& c : separate_ipc_tc(g, sol.x)) {
                    int& k = c.klass == CutClass::TcI ? n_tci : n_tcii;
                    if (k >= cfg.max_cuts_per_class) continue;
                    if (add_cut_row(c)) {
                        ++k;
                        ++added;
                        (c.klass == CutClass::TcI ? rep.cuts.tci : rep.cuts.tcii) += 1;
                    }
                }
            }
            if (!added && int(cfg.cuts) >= int(CutVariant::AGrc)) {
                if (auto c = separate_agrc(g, fam, sol.x, cfg.mwis))
                    if (add_cut_row(*c)) {
                        ++added;
                        ++rep.cuts.agrc;
                    }
            }
            if (!added && int(cfg.cuts) >= int(CutVariant::Rc)) {
                RcSeparationDetail d1, d2, d3;
                if (auto c = separate_rcpm(g, fam, sol.x, cfg.mwis, &d1))
                    if (add_cut_row(*c)) {
                        ++added;
                        ++rep.cuts.rcpm;
                    }
                if (auto c = separate_rcminus(g, fam, sol.x, cfg.mwis, &d2))
                    if (add_cut_row(*c)) {
                        ++added;
                        ++rep.cuts.rcminus;
                    }
                if (auto c = separate_rcplus(g, fam, sol.x, cfg.mwis, &d3))
                    if (add_cut_row(*c)) {
                        ++added;
                        ++rep.cuts.rcplus;
                    }
                if (cfg.on_rc_detail) {
                    cfg.on_rc_detail(d1);
                    cfg.on_rc_detail(d2);
                    cfg.on_rc_detail(d3);
                }
            }
            rep.t_sep += sep_clock.elapsed();
            if (!added) {
                branch = true;
                break;
            }
            ++rounds;
        }

        if (nd.id == 0 && sol.status == LpStatus::Optimal) rep.root_lp = node_obj;

        if (timed_out) {
            if (node_obj < 1e299) interrupted_bound = node_obj;
            break;
        }
        if (branch) {
            int arc = -1;
            double best_dist = 1e9;
            for (int a = 0; a < lp.num_vars(); ++a) {
                double dist = std::fabs(sol.x[a] - 0.5);
                if (dist < best_dist - 1e-12) {
                    best_dist = dist;
                    arc = a;
                }
            }
            for (double fix : {0.0, 1.0}) {
                Node child{node_obj, next_id++, nd.depth + 1, nd.fixes};
                child.fixes.push_back(BoundOverride{arc, fix, fix});
                open.push(std::move(child));
            }
        }
    }

    double open_min = open.empty() ? 1e300 : open.top().bound;
    double lb = std::min({double(inc_w), open_min, interrupted_bound});
    // a cover never costs less than one path over all nodes
    double n_d = double(inst.n());
    lb = std::max(lb, std::min(0.0, 1.0 - n_d * n_d));

    rep.objective = inc_w;
    DecodedCost dec = decode_cost(inc_w, inst.n());
    rep.covered = dec.covered;
    rep.paths = dec.paths;
    rep.witness = incumbent;
    if (timed_out) {
        rep.status = SolveStatus::Timeout;
        rep.bound = lb;
    } else if (node_limited) {
        rep.status = SolveStatus::Feasible;
        rep.bound = lb;
    } else {
        rep.status = inc_w == 0 ? SolveStatus::InfeasibleEmpty : SolveStatus::Optimal;
        rep.bound = double(inc_w);
    }
    rep.t = clock.elapsed();
    return rep;
}

std::string SolveReport::to_kv() const {
    std::ostringstream out;
    out << "status=" << status_name(status) << '\n';
    out << "obj=" << objective << '\n';
    out << "nodes=" << covered << '\n';
    out << "paths=" << paths << '\n';
    out << "bound=" << bound << '\n';
    out << "root-lp=" << root_lp << '\n';
    out << "tree-nodes=" << tree_nodes << '\n';
    out << "cuts=" << cuts.total() << '\n';
    out << "cuts-lazy-ipc=" << cuts.lazy_ipc << '\n';
    out << "cuts-lazy-tic=" << cuts.lazy_tic << '\n';
    out << "cuts-tci=" << cuts.tci << '\n';
    out << "cuts-tcii=" << cuts.tcii << '\n';
    out << "cuts-agrc=" << cuts.agrc << '\n';
    out << "cuts-rcpm=" << cuts.rcpm << '\n';
    out << "cuts-rcminus=" << cuts.rcminus << '\n';
    out << "cuts-rcplus=" << cuts.rcplus << '\n';
    out << "t=" << t << '\n';
    out << "t-sep=" << t_sep << '\n';
    return out.str();
}

} // namespace mfc
