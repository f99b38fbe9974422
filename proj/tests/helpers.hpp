#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "mfc/graph.hpp"

namespace th {

inline mfc::Instance inst_of(int n, std::vector<mfc::Arc> arcs,
                             const std::vector<mfc::Arc>& mand = {}) {
    mfc::Dag d(n, std::move(arcs));
    std::vector<int> idx;
    for (const auto& a : mand) {
        int k = d.arc_index(a.first, a.second);
        if (k < 0) throw std::logic_error("inst_of: mandatory arc not in A");
        idx.push_back(k);
    }
    return mfc::Instance(std::move(d), std::move(idx));
}

inline std::vector<mfc::Arc> chain_arcs(int n) {
    std::vector<mfc::Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.emplace_back(i, i + 1);
    return arcs;
}

inline std::vector<mfc::Arc> closure_arcs(int n) {
    std::vector<mfc::Arc> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) arcs.emplace_back(i, j);
    return arcs;
}

// Random DAG: keep each forward pair (i,j), i<j, with probability pa, then
// mark surviving arcs mandatory with probability pac. Distinct from the
// shipped generators on purpose, so tests do not referee a module by itself.
inline mfc::Instance random_inst(std::mt19937_64& rng, int n, double pa, double pac) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<mfc::Arc> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (u(rng) < pa) arcs.emplace_back(i, j);
    mfc::Dag d(n, arcs);
    std::vector<int> mand;
    for (int a = 0; a < d.num_arcs(); ++a)
        if (u(rng) < pac) mand.push_back(a);
    return mfc::Instance(std::move(d), std::move(mand));
}

inline mfc::Path ipath(std::vector<int> nodes) {
    mfc::Path p;
    p.nodes = std::move(nodes);
    p.kind = mfc::PathKind::Internal;
    return p;
}

inline mfc::Path apath(std::vector<int> nodes) {
    mfc::Path p;
    p.nodes = std::move(nodes);
    p.kind = mfc::PathKind::Augmented;
    return p;
}

} // namespace th
