#include "mfc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mfc/simplex.hpp"

namespace mfc {

int LinearProgram::add_var(double l, double u, double c, bool is_int) {
    lb.push_back(l);
    ub.push_back(u);
    cost.push_back(c);
    integer.push_back(is_int ? 1 : 0);
    return num_vars() - 1;
}

void LinearProgram::add_row(std::vector<std::pair<int, double>> terms, RowSense s, double rhs,
                            std::string tag) {
    rows.push_back(LpRow{std::move(terms), s, rhs, std::move(tag)});
}

std::vector<double> compute_z(const AugmentedGraph& g, const std::vector<double>& y) {
    std::vector<double> z(g.n() + 1, 0.0);
    for (int i = 1; i <= g.n(); ++i)
        for (int a : g.in_arcs(i)) z[i] += y[a];
    return z;
}

double arc_cost(const AugmentedGraph& g, int a) {
    if (a < 0 || a >= g.num_arcs()) throw std::invalid_argument("arc_cost: index out of range");
    return g.costs()[a];
}

LinearProgram build_f2_relaxation(const Instance& inst) {
    AugmentedGraph g(inst);
    LinearProgram lp;
    for (int a = 0; a < g.num_arcs(); ++a) lp.add_var(0.0, 1.0, g.costs()[a], true);
    for (int i = 1; i <= g.n(); ++i) {
        std::vector<std::pair<int, double>> terms;
        for (int a : g.in_arcs(i)) terms.emplace_back(a, 1.0);
        lp.add_row(std::move(terms), RowSense::LE, 1.0, "indeg");
    }
    for (int i = 1; i <= g.n(); ++i) {
        std::vector<std::pair<int, double>> terms;
        for (int a : g.in_arcs(i)) terms.emplace_back(a, 1.0);
        for (int a : g.out_arcs(i)) terms.emplace_back(a, -1.0);
        lp.add_row(std::move(terms), RowSense::EQ, 0.0, "flow");
    }
    return lp;
}

long long evaluate_cover(const std::vector<Path>& paths, int n) {
    std::vector<char> used(n + 1, 0);
    long long covered = 0;
    for (const auto& p : paths) {
        if (p.kind != PathKind::Internal || p.nodes.empty())
            throw std::invalid_argument("evaluate_cover: internal nonempty paths expected");
        for (int v : p.nodes) {
            if (v < 1 || v > n) throw std::invalid_argument("evaluate_cover: node out of range");
            if (used[v]) throw std::invalid_argument("evaluate_cover: overlapping paths");
            used[v] = 1;
            ++covered;
        }
    }
    return (long long)paths.size() - covered * n;
}

DecodedCost decode_cost(long long w, int n) {
    if (n < 1) throw std::invalid_argument("decode_cost: n must be >= 1");
    if (w == 0) return DecodedCost{0, 0};
    if (w > 0) throw std::invalid_argument("decode_cost: positive cost is not a cover cost");
    long long p = (-w + n - 1) / n;   // ceil(-w / n)
    long long q = w + p * n;
    if (q < 1 || q > p || p > n)
        throw std::invalid_argument("decode_cost: not a valid cover cost");
    return DecodedCost{int(p), int(q)};
}

LinearProgram build_f1(const Instance& inst, int m) {
    if (m < 1) throw std::invalid_argument("build_f1: need m >= 1");
    AugmentedGraph g(inst);
    const int na = g.num_arcs();
    const int n = g.n();
    LinearProgram lp;
    for (int k = 0; k < m; ++k)
        for (int a = 0; a < na; ++a) lp.add_var(0.0, 1.0, g.costs()[a], true);
    auto var = [&](int k, int a) { return k * na + a; };

    for (int k = 0; k < m; ++k) {
        std::vector<std::pair<int, double>> terms;
        for (int a : g.out_arcs(0)) terms.emplace_back(var(k, a), 1.0);
        lp.add_row(std::move(terms), RowSense::LE, 1.0, "k-from-0");
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<int, double>> terms;
        for (int k = 0; k < m; ++k)
            for (int a : g.in_arcs(i)) terms.emplace_back(var(k, a), 1.0);
        lp.add_row(std::move(terms), RowSense::LE, 1.0, "joint-indeg");
    }
    for (int k = 0; k < m; ++k)
        for (int i = 1; i <= n; ++i) {
            std::vector<std::pair<int, double>> terms;
            for (int a : g.in_arcs(i)) terms.emplace_back(var(k, a), 1.0);
            for (int a : g.out_arcs(i)) terms.emplace_back(var(k, a), -1.0);
            lp.add_row(std::move(terms), RowSense::EQ, 0.0, "flow");
        }
    for (int k = 0; k < m; ++k) {
        std::vector<std::pair<int, double>> terms;
        for (int a : inst.mandatory) terms.emplace_back(var(k, a), 1.0);
        for (int a : g.out_arcs(0)) terms.emplace_back(var(k, a), -1.0);
        lp.add_row(std::move(terms), RowSense::GE, 0.0, "cons-pc");
    }
    return lp;
}

int upper_bound_m(const Instance& inst) {
    const int m = int(inst.mandatory.size());
    if (m == 0) return 0;
    LinearProgram lp = build_f1(inst, m);
    // maximize total source flow with x >= 0 unbounded above
    AugmentedGraph g(inst);
    const int na = g.num_arcs();
    for (int j = 0; j < lp.num_vars(); ++j) {
        lp.cost[j] = 0.0;
        lp.ub[j] = kLpInf;
    }
    for (int k = 0; k < m; ++k)
        for (int a : g.out_arcs(0)) lp.cost[k * na + a] = -1.0;
    SimplexBackend backend;
    LpSolution sol = backend.solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::runtime_error("upper_bound_m: LP not optimal");
    return int(std::floor(-sol.objective + kEps));
}

namespace {

void f1_bnb_rec(const LinearProgram& lp, SimplexBackend& backend,
                std::vector<BoundOverride>& fixes, long long& best, int depth) {
    LpSolution sol = backend.solve(lp, fixes);
    if (sol.status != LpStatus::Optimal) return;
    if ((long long)std::ceil(sol.objective - kEps) >= best) return;
    int frac = -1;
    double frac_dist = kEps;
    for (int j = 0; j < lp.num_vars(); ++j) {
        double f = std::fabs(sol.x[j] - std::round(sol.x[j]));
        if (f > frac_dist) {
            frac_dist = f;
            frac = j;
            break;   // first fractional var, deterministic
        }
    }
    if (frac < 0) {
        best = std::min(best, (long long)std::llround(sol.objective));
        return;
    }
    if (depth > 200) throw std::runtime_error("solve_f1_bnb: depth limit");
    double down = std::floor(sol.x[frac]);
    // explore the nearer rounding first
    bool up_first = sol.x[frac] - down > 0.5;
    for (int pass = 0; pass < 2; ++pass) {
        bool up = (pass == 0) == up_first;
        fixes.push_back(up ? BoundOverride{frac, 1.0, 1.0} : BoundOverride{frac, 0.0, 0.0});
        f1_bnb_rec(lp, backend, fixes, best, depth + 1);
        fixes.pop_back();
    }
}

} // namespace

long long solve_f1_bnb(const Instance& inst, int m) {
    long long best = 0;   // empty collection
    if (m < 1) return best;
    LinearProgram lp = build_f1(inst, m);
    SimplexBackend backend;
    std::vector<BoundOverride> fixes;
    f1_bnb_rec(lp, backend, fixes, best, 0);
    return best;
}

} // namespace mfc
