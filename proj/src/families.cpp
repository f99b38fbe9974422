#include "mfc/families.hpp"

#include <stdexcept>

namespace mfc {

Bitset ArcSetFamilies::union_of(const std::vector<Bitset>& fam, const std::vector<int>& nodes) const {
    Bitset out = fam.empty() ? Bitset() : Bitset(fam[1].size());
    for (int i : nodes) out.or_with(fam[i]);
    return out;
}

Bitset ArcSetFamilies::union_mand(const std::vector<int>& nodes) const {
    Bitset out(mand_in[1].size());
    for (int i : nodes) {
        out.or_with(mand_in[i]);
        out.or_with(mand_out[i]);
    }
    return out;
}

ArcSetFamilies compute_arc_set_families(const AugmentedGraph& g) {
    const int n = g.n();
    const int m = g.num_arcs();
    const auto& arcs = g.arcs();
    const auto& mand = g.base().mandatory;

    ArcSetFamilies F;
    F.n = n;
    F.mand_in.assign(n + 1, Bitset(m));
    F.mand_out.assign(n + 1, Bitset(m));
    F.reach_in.assign(n + 1, Bitset(m));
    F.reach_out.assign(n + 1, Bitset(m));
    F.partial_in.assign(n + 1, Bitset(m));
    F.partial_out.assign(n + 1, Bitset(m));

    for (int i = 1; i <= n; ++i)
        for (int a : mand) {
            auto [u, v] = arcs[a];
            if (g.reach(v, i)) F.mand_in[i].set(a);
            if (g.reach(i, u)) F.mand_out[i].set(a);
        }

    // between[k] bit i: some mandatory arc (u,v) has k -> u and v -> i
    std::vector<Bitset> heads_or(n + 1, Bitset(n + 1));
    std::vector<char> mand_tail(n + 1, 0);
    for (int a : mand) {
        auto [u, v] = arcs[a];
        heads_or[u].or_with(g.reach_row(v));
        mand_tail[u] = 1;
    }
    std::vector<Bitset> between(n + 1, Bitset(n + 1));
    for (int k = 1; k <= n; ++k)
        g.reach_row(k).for_each([&](int u) {
            if (mand_tail[u]) between[k].or_with(heads_or[u]);
        });

    std::vector<char> mand_before(n + 1, 0), mand_after(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        mand_before[i] = F.mand_in[i].any();
        mand_after[i] = F.mand_out[i].any();
    }

    for (int i = 1; i <= n; ++i) {
        const bool suffix_ok = mand_after[i] != 0;   // a mandatory arc lies after i
        const bool prefix_ok = mand_before[i] != 0;
        for (int a = 0; a < m; ++a) {
            auto [j, k] = arcs[a];
            const bool is_mand = g.is_mandatory_arc(a);
            if (k <= n && g.reach(k, i)) {
                if (suffix_ok) F.partial_in[i].set(a);
                if (is_mand || (j >= 1 && mand_before[j]) || between[k].test(i))
                    F.reach_in[i].set(a);
            }
            if (j >= 1 && g.reach(i, j)) {
                if (prefix_ok) F.partial_out[i].set(a);
                if (is_mand || (k <= n && mand_after[k]) || between[i].test(j))
                    F.reach_out[i].set(a);
            }
        }
        if (!suffix_ok) F.partial_in[i] = F.reach_in[i];
        if (!prefix_ok) F.partial_out[i] = F.reach_out[i];
    }
    return F;
}

ArcSetFamilies compute_arc_set_families(const Instance& inst) {
    return compute_arc_set_families(AugmentedGraph(inst));
}

bool gamma(const AugmentedGraph& g, int i, int j) {
    if (i < 1 || i > g.n() || j < 1 || j > g.n() || i == j)
        throw std::invalid_argument("gamma: need distinct internal nodes");
    if (!g.reach(i, j)) return false;
    for (int a : g.base().mandatory) {
        auto [u, v] = g.arcs()[a];
        if (g.reach(v, i)) return true;               // mandatory before i
        if (g.reach(j, u)) return true;               // mandatory after j
        if (g.reach(i, u) && g.reach(v, j)) return true;
    }
    return false;
}

bool gamma(const Instance& inst, int i, int j) {
    return gamma(AugmentedGraph(inst), i, j);
}

} // namespace mfc
