#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mfc/graph.hpp"
#include "mfc/lp.hpp"
#include "mfc/separation.hpp"

namespace mfc {

/// Cumulative cut-class variants: Ipc = lazy layer plus IPC/TC user cuts,
/// AGrc adds the generalized reachability class, Rc adds the cut-set classes.
enum class CutVariant { Ipc, AGrc, Rc };

enum class SolveStatus { Optimal, Feasible, InfeasibleEmpty, Timeout };

const char* variant_name(CutVariant v);
const char* status_name(SolveStatus s);

struct SolveConfig {
    CutVariant cuts = CutVariant::Rc;
    MwisMode mwis = MwisMode::Greedy;
    double time_limit = 1e18;        // seconds, wall clock
    long long node_limit = 0;        // 0 = unlimited; 1 = root only
    int max_rounds = 10;             // separation rounds per node
    int max_cuts_per_class = 50;     // per round
    bool warm_start = true;          // seed the incumbent with greedy disjoint paths
    uint64_t seed = 0;               // recorded only; the search is deterministic

    std::function<void(const std::vector<double>&)> on_fractional;
    std::function<void(const RcSeparationDetail&)> on_rc_detail;
    std::function<void(const Cut&)> on_cut;
};

struct CutCounts {
    long long lazy_ipc = 0, lazy_tic = 0;
    long long tci = 0, tcii = 0, agrc = 0, rcpm = 0, rcminus = 0, rcplus = 0;

    long long user_total() const { return tci + tcii + agrc + rcpm + rcminus + rcplus; }
    long long total() const { return user_total() + lazy_ipc + lazy_tic; }
};

struct SolveReport {
    SolveStatus status = SolveStatus::InfeasibleEmpty;
    long long objective = 0;     // incumbent cost W
    int covered = 0;
    int paths = 0;
    std::vector<Path> witness;   // node-disjoint feasible internal paths
    double bound = 0.0;          // proven lower bound
    double root_lp = 0.0;        // root LP value after its cut loop
    CutCounts cuts;
    long long tree_nodes = 0;
    double t = 0.0;
    double t_sep = 0.0;

    std::string to_kv() const;   // key=value, one per line
};

SolveReport solve(const Instance& inst, const SolveConfig& cfg = {});

/// Splits an integral flow into internal paths, following unit out-flows from
/// the source. Throws when the flow is not a node-disjoint path packing.
std::vector<Path> decompose_integral(const AugmentedGraph& g, const std::vector<double>& y);

/// |(z_best - lb) / lb| * 100; undefined when lb = 0.
std::optional<double> best_gap(long long z_best, long long lb);
/// |sum(objs) - sum(bests)| / |sum(objs)| * 100; undefined when sum(objs) = 0.
std::optional<double> obj_gap(const std::vector<double>& objs, const std::vector<double>& bests);

} // namespace mfc
