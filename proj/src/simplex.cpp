#include "mfc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfc {

namespace {

constexpr double kPivTol = 1e-9;
constexpr double kDjTol = 1e-9;
constexpr double kPh1Tol = 1e-7;

enum class VarState : uint8_t { Basic, AtLb, AtUb };

struct Tableau {
    int nrows = 0, ncols = 0;
    std::vector<std::vector<double>> T;
    std::vector<double> beta;      // values of basic vars, per row
    std::vector<double> lb, ub;    // per column
    std::vector<double> d;         // reduced costs for the current phase
    std::vector<int> basis;        // row -> column
    std::vector<VarState> state;   // per column
    std::vector<double> xn;        // resting value of nonbasic columns

    void compute_reduced(const std::vector<double>& cost) {
        d = cost;
        for (int r = 0; r < nrows; ++r) {
            double cb = cost[basis[r]];
            if (cb == 0.0) continue;
            const auto& row = T[r];
            for (int c = 0; c < ncols; ++c) d[c] -= cb * row[c];
        }
    }

    /// Runs the current phase to optimality. Returns false on unboundedness.
    bool iterate() {
        const long long bland_after = 2000 + 10LL * (nrows + ncols);
        const long long max_iters = 500000 + 200LL * (nrows + ncols);
        for (long long iter = 0;; ++iter) {
            if (iter > max_iters) throw std::runtime_error("simplex: iteration limit");
            const bool bland = iter >= bland_after;

            int q = -1;
            double best = 0.0;
            for (int c = 0; c < ncols; ++c) {
                if (state[c] == VarState::Basic || lb[c] == ub[c]) continue;
                double score;
                if (state[c] == VarState::AtLb && d[c] < -kDjTol) score = -d[c];
                else if (state[c] == VarState::AtUb && d[c] > kDjTol) score = d[c];
                else continue;
                if (bland) { q = c; break; }
                if (score > best) { best = score; q = c; }
            }
            if (q < 0) return true;

            const double dir = (state[q] == VarState::AtLb) ? 1.0 : -1.0;
            double tstar = ub[q] - lb[q];   // bound-flip budget
            int lr = -1;
            int leave_to_ub = 0;
            for (int r = 0; r < nrows; ++r) {
                double alpha = T[r][q];
                if (std::fabs(alpha) <= kPivTol) continue;
                double rho = -dir * alpha;   // movement rate of basis[r]
                int b = basis[r];
                double t;
                int to_ub;
                if (rho > 0) {
                    if (ub[b] >= kLpInf / 2) continue;
                    t = (ub[b] - beta[r]) / rho;
                    to_ub = 1;
                } else {
                    if (lb[b] <= -kLpInf / 2) continue;
                    t = (lb[b] - beta[r]) / rho;
                    to_ub = 0;
                }
                if (t < 0) t = 0;   // slightly out-of-bound basic, degenerate step
                if (t < tstar - 1e-12) {
                    tstar = t;
                    lr = r;
                    leave_to_ub = to_ub;
                } else if (t <= tstar + 1e-12 && (lr == -1 || basis[r] < basis[lr])) {
                    // tie: prefer a pivot over a flip, then the lowest basis index
                    tstar = std::min(t, tstar);
                    lr = r;
                    leave_to_ub = to_ub;
                }
            }

            if (tstar >= kLpInf / 2) return false;   // unbounded direction

            if (lr == -1) {
                // bound flip of q
                for (int r = 0; r < nrows; ++r) beta[r] -= dir * tstar * T[r][q];
                state[q] = (state[q] == VarState::AtLb) ? VarState::AtUb : VarState::AtLb;
                xn[q] = (state[q] == VarState::AtLb) ? lb[q] : ub[q];
                continue;
            }

            double newval = xn[q] + dir * tstar;
            for (int r = 0; r < nrows; ++r)
                if (r != lr) beta[r] -= dir * tstar * T[r][q];

            int leave = basis[lr];
            state[leave] = leave_to_ub ? VarState::AtUb : VarState::AtLb;
            xn[leave] = leave_to_ub ? ub[leave] : lb[leave];

            auto& prow = T[lr];
            const double piv = prow[q];
            const double inv = 1.0 / piv;
            for (int c = 0; c < ncols; ++c) prow[c] *= inv;
            prow[q] = 1.0;
            for (int r = 0; r < nrows; ++r) {
                if (r == lr) continue;
                double f = T[r][q];
                if (std::fabs(f) <= 1e-14) { T[r][q] = 0.0; continue; }
                auto& row = T[r];
                for (int c = 0; c < ncols; ++c) row[c] -= f * prow[c];
                row[q] = 0.0;
            }
            double dq = d[q];
            if (std::fabs(dq) > 0) {
                for (int c = 0; c < ncols; ++c) d[c] -= dq * prow[c];
            }
            d[q] = 0.0;
            basis[lr] = q;
            state[q] = VarState::Basic;
            beta[lr] = newval;
        }
    }
};

} // namespace

LpSolution SimplexBackend::solve(const LinearProgram& lp,
                                 const std::vector<BoundOverride>& overrides) {
    const int ns = lp.num_vars();
    const int nr = int(lp.rows.size());

    std::vector<double> vlb = lp.lb, vub = lp.ub;
    for (const auto& o : overrides) {
        vlb[o.var] = o.lb;
        vub[o.var] = o.ub;
    }
    for (int j = 0; j < ns; ++j)
        if (vlb[j] > vub[j] + 1e-12) return LpSolution{LpStatus::Infeasible, 0.0, {}};

    // resting point of the structural columns
    std::vector<double> start(ns);
    for (int j = 0; j < ns; ++j) start[j] = (vlb[j] > -kLpInf / 2) ? vlb[j] : vub[j];

    // slack value per row at the resting point, and slack bounds by sense
    std::vector<double> beta0(nr), slb(nr), sub(nr);
    for (int r = 0; r < nr; ++r) {
        const auto& row = lp.rows[r];
        double s = row.rhs;
        for (auto [j, a] : row.terms) s -= a * start[j];
        beta0[r] = s;
        switch (row.sense) {
            case RowSense::LE: slb[r] = 0.0; sub[r] = kLpInf; break;
            case RowSense::GE: slb[r] = -kLpInf; sub[r] = 0.0; break;
            case RowSense::EQ: slb[r] = 0.0; sub[r] = 0.0; break;
        }
    }

    std::vector<int> art_row;
    for (int r = 0; r < nr; ++r)
        if (beta0[r] < slb[r] - 1e-12 || beta0[r] > sub[r] + 1e-12) art_row.push_back(r);

    const int na = int(art_row.size());
    Tableau tb;
    tb.nrows = nr;
    tb.ncols = ns + nr + na;
    tb.T.assign(nr, std::vector<double>(tb.ncols, 0.0));
    tb.beta.assign(nr, 0.0);
    tb.lb.assign(tb.ncols, 0.0);
    tb.ub.assign(tb.ncols, 0.0);
    tb.basis.assign(nr, -1);
    tb.state.assign(tb.ncols, VarState::AtLb);
    tb.xn.assign(tb.ncols, 0.0);

    for (int j = 0; j < ns; ++j) {
        tb.lb[j] = vlb[j];
        tb.ub[j] = vub[j];
        tb.state[j] = (vlb[j] > -kLpInf / 2) ? VarState::AtLb : VarState::AtUb;
        tb.xn[j] = start[j];
    }
    for (int r = 0; r < nr; ++r) {
        for (auto [j, a] : lp.rows[r].terms) tb.T[r][j] += a;
        tb.T[r][ns + r] = 1.0;
        tb.lb[ns + r] = slb[r];
        tb.ub[ns + r] = sub[r];
    }

    std::vector<double> ph1(tb.ncols, 0.0);
    for (int k = 0; k < na; ++k) {
        int r = art_row[k];
        int c = ns + nr + k;
        tb.T[r][c] = 1.0;
        double resid = beta0[r] - std::clamp(beta0[r], slb[r], sub[r]);
        if (resid >= 0) {
            tb.lb[c] = 0.0;
            tb.ub[c] = kLpInf;
            ph1[c] = 1.0;
        } else {
            tb.lb[c] = -kLpInf;
            tb.ub[c] = 0.0;
            ph1[c] = -1.0;
        }
        tb.basis[r] = c;
        tb.beta[r] = resid;
        // park the slack at the violated bound
        double sb = std::clamp(beta0[r], slb[r], sub[r]);
        tb.state[ns + r] = (sb == slb[r]) ? VarState::AtLb : VarState::AtUb;
        tb.xn[ns + r] = sb;
    }
    for (int r = 0; r < nr; ++r) {
        if (tb.basis[r] >= 0) continue;
        tb.basis[r] = ns + r;
        tb.state[ns + r] = VarState::Basic;
        tb.beta[r] = beta0[r];
    }

    if (na > 0) {
        tb.compute_reduced(ph1);
        if (!tb.iterate()) throw std::runtime_error("simplex: phase one unbounded");
        double infeas = 0.0;
        for (int r = 0; r < nr; ++r)
            if (ph1[tb.basis[r]] != 0.0) infeas += ph1[tb.basis[r]] * tb.beta[r];
        for (int k = 0; k < na; ++k) {
            int c = ns + nr + k;
            if (tb.state[c] != VarState::Basic) infeas += ph1[c] * tb.xn[c];
        }
        if (infeas > kPh1Tol) return LpSolution{LpStatus::Infeasible, 0.0, {}};
        for (int k = 0; k < na; ++k) {
            int c = ns + nr + k;
            tb.lb[c] = tb.ub[c] = 0.0;
            if (tb.state[c] != VarState::Basic) tb.xn[c] = 0.0;
        }
    }

    std::vector<double> cost(tb.ncols, 0.0);
    for (int j = 0; j < ns; ++j) cost[j] = lp.cost[j];
    tb.compute_reduced(cost);
    if (!tb.iterate()) return LpSolution{LpStatus::Unbounded, 0.0, {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x.assign(ns, 0.0);
    for (int j = 0; j < ns; ++j)
        if (tb.state[j] != VarState::Basic) sol.x[j] = tb.xn[j];
    for (int r = 0; r < nr; ++r)
        if (tb.basis[r] < ns) sol.x[tb.basis[r]] = tb.beta[r];
    for (int j = 0; j < ns; ++j) sol.x[j] = std::clamp(sol.x[j], vlb[j], vub[j]);
    double obj = 0.0;
    for (int j = 0; j < ns; ++j) obj += lp.cost[j] * sol.x[j];
    sol.objective = obj;
    return sol;
}

} // namespace mfc
