#pragma once

#include <string>

#include "mfc/graph.hpp"

namespace mfc {

inline constexpr double kEps = 1e-6;     // feasibility / integrality tolerance
inline constexpr double kLpInf = 1e100;

enum class RowSense { LE, EQ, GE };

struct LpRow {
    std::vector<std::pair<int, double>> terms;   // (var, coef)
    RowSense sense = RowSense::LE;
    double rhs = 0.0;
    std::string tag;
};

struct LinearProgram {
    std::vector<double> lb, ub, cost;
    std::vector<uint8_t> integer;
    std::vector<LpRow> rows;

    int num_vars() const { return int(cost.size()); }
    int add_var(double l, double u, double c, bool is_int = false);
    void add_row(std::vector<std::pair<int, double>> terms, RowSense s, double rhs,
                 std::string tag = "");
};

struct BoundOverride {
    int var;
    double lb, ub;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

/// Minimizing LP solver interface; the bundled backend is a bounded-variable
/// primal simplex (see simplex.hpp) but anything honoring this contract fits.
class LpBackend {
public:
    virtual ~LpBackend() = default;
    virtual LpSolution solve(const LinearProgram& lp,
                             const std::vector<BoundOverride>& overrides = {}) = 0;
};

/// A fractional point of the two-index relaxation over the augmented arcs.
struct FractionalSolution {
    std::vector<double> y;
    double objective = 0.0;
};

/// Coverage indicator per internal node: z_i = sum of y over arcs into i.
std::vector<double> compute_z(const AugmentedGraph& g, const std::vector<double>& y);

/// 1 on source arcs, -n otherwise; a path covering h nodes costs 1 - h*n.
double arc_cost(const AugmentedGraph& g, int a);

/// Two-index relaxation: in-degree <= 1 and flow conservation per node,
/// y in [0,1] per augmented arc, integer-marked.
LinearProgram build_f2_relaxation(const Instance& inst);

/// Cost of a node-disjoint internal path collection: q - n * (covered nodes).
long long evaluate_cover(const std::vector<Path>& paths, int n);

struct DecodedCost {
    int covered = 0;
    int paths = 0;
};

/// Invert a collection cost W = q - covered*n back into (covered, paths).
DecodedCost decode_cost(long long w, int n);

/// Three-index formulation on path slots 1..m (cross-validation only).
LinearProgram build_f1(const Instance& inst, int m);

/// LP bound on how many feasible paths any solution can use: relax the
/// three-index model over |mandatory| slots, maximize total source flow, floor.
int upper_bound_m(const Instance& inst);

/// Plain branch and bound on the three-index model, no cuts. Returns the
/// optimal collection cost.
long long solve_f1_bnb(const Instance& inst, int m);

} // namespace mfc
