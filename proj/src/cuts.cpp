#include "mfc/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mfc {

const char* cut_class_name(CutClass c) {
    switch (c) {
        case CutClass::Tic: return "TIC";
        case CutClass::Ipc: return "IPC";
        case CutClass::TcI: return "TCI";
        case CutClass::TcII: return "TCII";
        case CutClass::Arc: return "ARC";
        case CutClass::AGrc: return "AGRC";
        case CutClass::RcPm: return "RCPM";
        case CutClass::RcMinus: return "RCMINUS";
        case CutClass::RcPlus: return "RCPLUS";
        case CutClass::GCut: return "GCUT";
    }
    return "?";
}

void normalize_terms(std::vector<std::pair<int, double>>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, double>> out;
    for (const auto& [a, c] : terms) {
        if (!out.empty() && out.back().first == a)
            out.back().second += c;
        else
            out.emplace_back(a, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return std::fabs(t.second) < 1e-12; }),
              out.end());
    terms = std::move(out);
}

uint64_t Cut::hash() const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(uint64_t(sense));
    mix(uint64_t(int64_t(std::llround(rhs))));
    for (const auto& [a, c] : terms) {
        mix(uint64_t(a));
        mix(uint64_t(int64_t(std::llround(c))));
    }
    return h;
}

double Cut::violation(const std::vector<double>& y) const {
    double lhs = 0.0;
    for (const auto& [a, c] : terms) lhs += c * y[a];
    switch (sense) {
        case RowSense::GE: return rhs - lhs;
        case RowSense::LE: return lhs - rhs;
        case RowSense::EQ: return std::fabs(lhs - rhs);
    }
    return 0.0;
}

std::string Cut::to_string() const {
    std::ostringstream out;
    out << cut_class_name(klass) << ' ';
    out << (sense == RowSense::LE ? "<=" : sense == RowSense::GE ? ">=" : "==");
    out << ' ' << (long long)std::llround(rhs);
    for (const auto& [a, c] : terms) out << " (" << a << ':' << (long long)std::llround(c) << ')';
    return out.str();
}

namespace {

std::string node_list(const std::vector<int>& v) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '}';
    return out.str();
}

// Validates p as an infeasible source-sink path and returns its node sequence.
std::vector<int> infeasible_path_nodes(const AugmentedGraph& g, const Path& p) {
    Path q = p.kind == PathKind::Internal ? to_augmented(p, g.n()) : p;
    if (q.nodes.size() < 3 || q.nodes.front() != 0 || q.nodes.back() != g.sink() ||
        !is_path_of(g, q))
        throw std::invalid_argument("cut: not a source-sink path");
    if (is_feasible_path(g, q)) throw std::invalid_argument("cut: path is feasible");
    return q.nodes;
}

void subtract_indegree(const AugmentedGraph& g, int i,
                       std::vector<std::pair<int, double>>& terms) {
    for (int a : g.in_arcs(i)) terms.emplace_back(a, -1.0);
}

void check_conflicting(const AugmentedGraph& g, const std::vector<int>& t) {
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (!conflicting(g, t[i], t[j]))
                throw std::invalid_argument("cut: node set is not pairwise conflicting");
}

void check_sets(const AugmentedGraph& g, const std::vector<int>& s, const std::vector<int>& t) {
    for (int v : s)
        if (v < 1 || v > g.n()) throw std::invalid_argument("cut: S contains a non-internal node");
    for (int v : t)
        if (std::find(s.begin(), s.end(), v) == s.end())
            throw std::invalid_argument("cut: T is not a subset of S");
    check_conflicting(g, t);
}

Cut crossing_cut(CutClass klass, const AugmentedGraph& g, const std::vector<int>& s,
                 const std::vector<int>& t, const Bitset* in_fam, const Bitset* out_fam,
                 std::string provenance) {
    std::vector<char> in_s(g.n() + 2, 0);
    for (int v : s) in_s[v] = 1;
    Cut cut;
    cut.klass = klass;
    cut.provenance = std::move(provenance);
    for (int a = 0; a < g.num_arcs(); ++a) {
        auto [u, v] = g.arcs()[a];
        if (in_fam && !in_s[u] && in_s[v] && in_fam->test(a)) cut.terms.emplace_back(a, 1.0);
        if (out_fam && in_s[u] && !in_s[v] && out_fam->test(a)) cut.terms.emplace_back(a, 1.0);
    }
    for (int i : t) subtract_indegree(g, i, cut.terms);
    normalize_terms(cut.terms);
    return cut;
}

} // namespace

Cut make_tic(const AugmentedGraph& g) {
    Cut cut;
    cut.klass = CutClass::Tic;
    cut.provenance = "tic";
    for (int a : g.base().mandatory) cut.terms.emplace_back(a, 1.0);
    for (int i = 1; i <= g.n(); ++i) cut.terms.emplace_back(g.source_arc(i), -1.0);
    normalize_terms(cut.terms);
    return cut;
}

Cut make_ipc(const AugmentedGraph& g, const Path& p) {
    std::vector<int> v = infeasible_path_nodes(g, p);
    Cut cut;
    cut.klass = CutClass::Ipc;
    cut.provenance = "P=" + node_list(v);
    for (size_t i = 0; i + 1 < v.size(); ++i)
        cut.terms.emplace_back(g.arc_index(v[i], v[i + 1]), 1.0);
    cut.sense = RowSense::LE;
    cut.rhs = double(v.size() - 2);
    normalize_terms(cut.terms);
    return cut;
}

namespace {

// Mandatory skip arcs are left out of the tournament sum: a solution may pack
// several short feasible paths whose mandatory arcs jump between sequence
// nodes, and counting those would push the lhs past h. Without them each
// solution path spends one hop on its mandatory excursion, so the sum of
// hops inside the sequence stays at most h.
std::vector<std::pair<int, double>> tournament_terms(const AugmentedGraph& g,
                                                     const std::vector<int>& v) {
    std::vector<std::pair<int, double>> terms;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            int a = g.arc_index(v[i], v[j]);
            if (a >= 0 && !g.is_mandatory_arc(a)) terms.emplace_back(a, 1.0);
        }
    return terms;
}

} // namespace

Cut make_tc1(const AugmentedGraph& g, const Path& p) {
    std::vector<int> v = infeasible_path_nodes(g, p);
    Cut cut;
    cut.klass = CutClass::TcI;
    cut.provenance = "P=" + node_list(v);
    cut.terms = tournament_terms(g, v);
    cut.sense = RowSense::LE;
    cut.rhs = double(v.size() - 2);
    normalize_terms(cut.terms);
    return cut;
}

Cut make_tc2(const AugmentedGraph& g, const Path& p, int l, int k) {
    std::vector<int> v = infeasible_path_nodes(g, p);
    const int h = int(v.size()) - 2;
    if (l < 1 || l > h - 1) throw std::invalid_argument("tc2: insertion position out of range");
    if (k < 1 || k > g.n() || std::find(v.begin(), v.end(), k) != v.end())
        throw std::invalid_argument("tc2: inserted node must be a new internal node");
    int in_arc = g.arc_index(v[l], k);
    int out_arc = g.arc_index(k, v[l + 1]);
    if (in_arc < 0 || out_arc < 0)
        throw std::invalid_argument("tc2: insertion does not form a path");
    if (g.is_mandatory_arc(in_arc) || g.is_mandatory_arc(out_arc))
        throw std::invalid_argument("tc2: lifted path is feasible");
    Cut cut;
    cut.klass = CutClass::TcII;
    std::ostringstream tag;
    tag << "P=" << node_list(v) << " l=" << l << " k=" << k;
    cut.provenance = tag.str();
    cut.terms = tournament_terms(g, v);
    cut.terms.emplace_back(in_arc, 1.0);
    cut.terms.emplace_back(out_arc, 1.0);
    cut.terms.emplace_back(g.arc_index(v[l], v[l + 1]), 1.0);
    cut.sense = RowSense::LE;
    cut.rhs = double(h + 1);
    normalize_terms(cut.terms);
    return cut;
}

Cut make_arc_single(const AugmentedGraph& g, const ArcSetFamilies& fam, int i) {
    if (i < 1 || i > g.n()) throw std::invalid_argument("arc cut: node out of range");
    Cut cut;
    cut.klass = CutClass::Arc;
    cut.provenance = "i=" + std::to_string(i);
    fam.mand_in[i].for_each([&](int a) { cut.terms.emplace_back(a, 1.0); });
    fam.mand_out[i].for_each([&](int a) { cut.terms.emplace_back(a, 1.0); });
    subtract_indegree(g, i, cut.terms);
    normalize_terms(cut.terms);
    return cut;
}

Cut make_agrc(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& t) {
    if (t.empty()) throw std::invalid_argument("agrc: empty node set");
    check_conflicting(g, t);
    Cut cut;
    cut.klass = CutClass::AGrc;
    cut.provenance = "T=" + node_list(t);
    fam.union_mand(t).for_each([&](int a) { cut.terms.emplace_back(a, 1.0); });
    for (int i : t) subtract_indegree(g, i, cut.terms);
    normalize_terms(cut.terms);
    return cut;
}

Cut make_rcpm(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& s,
              const std::vector<int>& t) {
    check_sets(g, s, t);
    Bitset in_fam = fam.union_of(fam.reach_in, t);
    Bitset out_fam = fam.union_of(fam.reach_out, t);
    return crossing_cut(CutClass::RcPm, g, s, t, &in_fam, &out_fam,
                        "S=" + node_list(s) + " T=" + node_list(t));
}

Cut make_rcminus(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& s,
                 const std::vector<int>& t) {
    check_sets(g, s, t);
    Bitset in_fam = fam.union_of(fam.partial_in, t);
    return crossing_cut(CutClass::RcMinus, g, s, t, &in_fam, nullptr,
                        "S=" + node_list(s) + " T=" + node_list(t));
}

Cut make_rcplus(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& s,
                const std::vector<int>& t) {
    check_sets(g, s, t);
    Bitset out_fam = fam.union_of(fam.partial_out, t);
    return crossing_cut(CutClass::RcPlus, g, s, t, nullptr, &out_fam,
                        "S=" + node_list(s) + " T=" + node_list(t));
}

Cut make_gcut(const AugmentedGraph& g, const std::vector<int>& s, const std::vector<int>& t) {
    check_sets(g, s, t);
    std::vector<char> in_s(g.n() + 2, 0), in_t(g.n() + 1, 0), pi(g.n() + 1, 0);
    for (int v : s) in_s[v] = 1;
    for (int v : t) in_t[v] = 1;
    for (int i = 1; i <= g.n(); ++i) {
        if (in_t[i]) continue;
        bool never = true;
        for (int j : t)
            if (gamma(g, i, j)) {
                never = false;
                break;
            }
        pi[i] = never;
    }
    Cut cut;
    cut.klass = CutClass::GCut;
    cut.provenance = "S=" + node_list(s) + " T=" + node_list(t);
    for (int a = 0; a < g.num_arcs(); ++a) {
        auto [u, v] = g.arcs()[a];
        if (v < 1 || v > g.n() || !in_s[v] || pi[v]) continue;
        if (in_s[u]) continue;
        if (u >= 1 && u <= g.n() && pi[u]) continue;
        cut.terms.emplace_back(a, 1.0);
    }
    for (int i : t) subtract_indegree(g, i, cut.terms);
    normalize_terms(cut.terms);
    return cut;
}

bool validate_cut(const Cut& cut, const std::vector<Path>& paths, const AugmentedGraph& g) {
    std::vector<double> y(g.num_arcs(), 0.0);
    for (const Path& p : paths) {
        Path q = p.kind == PathKind::Internal ? to_augmented(p, g.n()) : p;
        if (!is_path_of(g, q)) throw std::invalid_argument("validate_cut: not a path");
        for (size_t i = 0; i + 1 < q.nodes.size(); ++i)
            y[g.arc_index(q.nodes[i], q.nodes[i + 1])] = 1.0;
    }
    return cut.violation(y) <= 1e-9;
}

} // namespace mfc
