#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mfc/generators.hpp"
#include "mfc/graph.hpp"
#include "mfc/instance_io.hpp"
#include "mfc/oracle.hpp"
#include "mfc/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitGuard = 5;

mfc::SolveConfig make_config(const std::string& cuts, const std::string& mwis,
                             double time_limit, uint64_t seed) {
    mfc::SolveConfig cfg;
    if (cuts == "ipc")
        cfg.cuts = mfc::CutVariant::Ipc;
    else if (cuts == "agrc")
        cfg.cuts = mfc::CutVariant::AGrc;
    else
        cfg.cuts = mfc::CutVariant::Rc;
    cfg.mwis = mwis == "exact" ? mfc::MwisMode::Exact : mfc::MwisMode::Greedy;
    if (time_limit > 0.0) cfg.time_limit = time_limit;
    cfg.seed = seed;
    return cfg;
}

int cmd_gen(const std::string& set, int n, double pa, double pac, uint64_t seed,
            const std::string& out) {
    mfc::Instance inst = set == "c" ? mfc::gen_set_c(n, pa, pac, seed)
                                    : mfc::gen_set_a(n, pa, pac, seed);
    if (out.empty())
        std::cout << mfc::write_instance(inst);
    else
        mfc::save_instance(inst, out);
    return kExitOk;
}

int cmd_solve(const std::string& file, const std::string& cuts, const std::string& mwis,
              double time_limit, uint64_t seed) {
    mfc::Instance inst = mfc::load_instance(file);
    mfc::SolveReport rep = mfc::solve(inst, make_config(cuts, mwis, time_limit, seed));
    std::cout << rep.to_kv();
    return kExitOk;
}

int cmd_verify(const std::string& file, bool corrupt) {
    mfc::Instance inst = mfc::load_instance(file);
    if (inst.dag.n() > mfc::kOracleMaxN) {
        std::cerr << "verify: n=" << inst.dag.n() << " exceeds the oracle limit of "
                  << mfc::kOracleMaxN << "\n";
        return kExitGuard;
    }
    mfc::SolveReport rep = mfc::solve(inst);
    mfc::OracleResult best = mfc::enumerate_best(inst);
    int covered = rep.covered + (corrupt ? 1 : 0);
    if (covered == best.covered && rep.paths == best.paths) {
        std::cout << "verify: ok covered=" << best.covered << " paths=" << best.paths << '\n';
        return kExitOk;
    }
    std::cout << "verify: MISMATCH solver=(" << covered << ',' << rep.paths << ") oracle=("
              << best.covered << ',' << best.paths << ")\n";
    return kExitMismatch;
}

// ---- bench ----------------------------------------------------------------

struct Grid {
    std::vector<int> n;
    std::vector<double> pa;
    std::vector<double> pac;
};

Grid parse_grid(const std::string& spec) {
    Grid g;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--grid", "expected key=v1,v2,...");
        std::string key = part.substr(0, eq);
        std::istringstream vals(part.substr(eq + 1));
        std::string tok;
        while (std::getline(vals, tok, ',')) {
            if (key == "n")
                g.n.push_back(std::stoi(tok));
            else if (key == "pa")
                g.pa.push_back(std::stod(tok));
            else if (key == "pac")
                g.pac.push_back(std::stod(tok));
            else
                throw CLI::ValidationError("--grid", "unknown key '" + key + "'");
        }
    }
    if (g.n.empty() || g.pa.empty() || g.pac.empty())
        throw CLI::ValidationError("--grid", "needs n=, pa= and pac= lists");
    return g;
}

std::string fmt(double v, int prec) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(prec);
    out << v;
    return out.str();
}

// One formatting pass feeds both the aligned table and the CSV so the two
// views always carry identical numbers.
const std::vector<std::string> kBenchHeader = {"n",    "pa",   "pac",  "variant",  "t",
                                               "cuts", "best_gap", "opt", "opt0", "nullobj"};

void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(kBenchHeader.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
        for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    };
    widen(kBenchHeader);
    for (const auto& r : rows) widen(r);
    auto emit = [&](const std::vector<std::string>& r) {
        for (size_t c = 0; c < r.size(); ++c) {
            if (c) std::cout << "  ";
            std::cout << std::string(width[c] - r[c].size(), ' ') << r[c];
        }
        std::cout << '\n';
    };
    emit(kBenchHeader);
    for (const auto& r : rows) emit(r);
    std::cout << '\n' << "csv:\n";
    auto emit_csv = [&](const std::vector<std::string>& r) {
        for (size_t c = 0; c < r.size(); ++c) std::cout << (c ? "," : "") << r[c];
        std::cout << '\n';
    };
    emit_csv(kBenchHeader);
    for (const auto& r : rows) emit_csv(r);
}

int cmd_bench(const std::string& grid_spec, int seeds, const std::string& variants_csv,
              double time_limit) {
    Grid grid = parse_grid(grid_spec);
    std::vector<std::string> variants;
    {
        std::istringstream in(variants_csv);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) variants.push_back(tok);
    }
    for (const auto& v : variants)
        if (v != "ipc" && v != "agrc" && v != "rc")
            throw CLI::ValidationError("--variants", "unknown variant '" + v + "'");
    if (variants.empty()) variants = {"ipc", "agrc", "rc"};
    auto rank = [](const std::string& v) { return v == "ipc" ? 0 : v == "agrc" ? 1 : 2; };
    std::string weakest_var = variants.front();
    for (const auto& v : variants)
        if (rank(v) < rank(weakest_var)) weakest_var = v;

    std::vector<std::vector<std::string>> rows;
    for (int n : grid.n)
        for (double pa : grid.pa)
            for (double pac : grid.pac) {
                // Reports per variant per seed; the weakest variant's proven
                // bound is the reference LB for %best-gap.
                std::map<std::string, std::vector<mfc::SolveReport>> reps;
                for (const auto& var : variants) {
                    for (int s = 0; s < seeds; ++s) {
                        mfc::Instance inst = mfc::gen_set_a(n, pa, pac, 1000 + s);
                        reps[var].push_back(
                            mfc::solve(inst, make_config(var, "greedy", time_limit, 1000 + s)));
                    }
                }
                const auto& weakest = reps[weakest_var];
                for (const auto& var : variants) {
                    const auto& rs = reps[var];
                    double sum_t = 0.0, sum_cuts = 0.0, sum_gap = 0.0;
                    int gap_defined = 0, opt = 0, opt_root = 0, null_obj = 0;
                    for (int s = 0; s < seeds; ++s) {
                        sum_t += rs[s].t;
                        sum_cuts += double(rs[s].cuts.total());
                        auto gap = mfc::best_gap(rs[s].objective,
                                                 (long long)std::llround(weakest[s].bound));
                        if (gap) {
                            sum_gap += *gap;
                            ++gap_defined;
                        }
                        bool is_opt = rs[s].status == mfc::SolveStatus::Optimal ||
                                      rs[s].status == mfc::SolveStatus::InfeasibleEmpty;
                        if (is_opt) ++opt;
                        if (is_opt && rs[s].tree_nodes <= 1) ++opt_root;
                        if (rs[s].objective == 0) ++null_obj;
                    }
                    rows.push_back({std::to_string(n), fmt(pa, 2), fmt(pac, 2), var,
                                    fmt(sum_t / seeds, 3), fmt(sum_cuts / seeds, 1),
                                    gap_defined ? fmt(sum_gap / gap_defined, 2) : "-",
                                    std::to_string(opt), std::to_string(opt_root),
                                    std::to_string(null_obj)});
                }
            }
    print_table(rows);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for maximum node cover by disjoint paths with mandatory arcs"};
    app.require_subcommand(1);

    std::string set = "a", out, file, cuts = "rc", mwis = "greedy";
    std::string grid_spec, variants_csv = "ipc,agrc,rc";
    int n = 10, seeds = 5;
    double pa = 0.5, pac = 0.3, time_limit = 0.0;
    uint64_t seed = 0;
    bool corrupt = false;

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--set", set, "Instance family: a (random closure) or c (intervals)")
        ->check(CLI::IsMember({"a", "c"}));
    gen->add_option("--n", n, "Number of nodes")->required()->check(CLI::PositiveNumber);
    gen->add_option("--pa", pa, "Arc keep probability (set a) or density target (set c)")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--pac", pac, "Mandatory probability (set a) or sparsity target (set c)")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", out, "Output file (default: stdout)");

    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("file", file, "Instance file")->required();
    solve->add_option("--cuts", cuts, "Cut variant: ipc, agrc or rc")
        ->check(CLI::IsMember({"ipc", "agrc", "rc"}));
    solve->add_option("--mwis", mwis, "Independent-set method for cut separation")
        ->check(CLI::IsMember({"greedy", "exact"}));
    solve->add_option("--time-limit", time_limit, "Wall-clock limit in seconds (0 = none)");
    solve->add_option("--seed", seed, "Recorded in the report");

    auto* verify = app.add_subcommand("verify", "Solve and compare against the exact oracle");
    verify->add_option("file", file, "Instance file")->required();
    verify->add_flag("--corrupt-test", corrupt, "Perturb the result before comparing (testing)");

    auto* bench = app.add_subcommand("bench", "Run an instance grid and print averaged metrics");
    bench->add_option("--grid", grid_spec, "Grid spec, e.g. n=10,20;pa=0.2,0.5;pac=0.3")
        ->required();
    bench->add_option("--seeds", seeds, "Seeds per grid cell")->check(CLI::PositiveNumber);
    bench->add_option("--variants", variants_csv, "Comma list of cut variants, weakest first");
    bench->add_option("--time-limit", time_limit, "Per-solve wall-clock limit (0 = none)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(set, n, pa, pac, seed, out);
        if (solve->parsed()) return cmd_solve(file, cuts, mwis, time_limit, seed);
        if (verify->parsed()) return cmd_verify(file, corrupt);
        if (bench->parsed()) return cmd_bench(grid_spec, seeds, variants_csv, time_limit);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << '\n';
        if (msg.find("guard") != std::string::npos || msg.find("tuning") != std::string::npos)
            return kExitGuard;
        return kExitIo;
    }
    return kExitUsage;
}
