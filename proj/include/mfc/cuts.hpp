#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfc/families.hpp"
#include "mfc/graph.hpp"
#include "mfc/lp.hpp"

namespace mfc {

enum class CutClass { Tic, Ipc, TcI, TcII, Arc, AGrc, RcPm, RcMinus, RcPlus, GCut };

const char* cut_class_name(CutClass c);

// A valid inequality over the arc variables of the augmented graph.
struct Cut {
    CutClass klass;
    std::vector<std::pair<int, double>> terms;   // sorted by arc index, merged, no zeros
    RowSense sense = RowSense::GE;
    double rhs = 0.0;
    std::string provenance;

    uint64_t hash() const;
    double violation(const std::vector<double>& y) const;
    std::string to_string() const;
};

void normalize_terms(std::vector<std::pair<int, double>>& terms);

Cut make_tic(const AugmentedGraph& g);
Cut make_ipc(const AugmentedGraph& g, const Path& p);
Cut make_tc1(const AugmentedGraph& g, const Path& p);
Cut make_tc2(const AugmentedGraph& g, const Path& p, int l, int k);
Cut make_arc_single(const AugmentedGraph& g, const ArcSetFamilies& fam, int i);
Cut make_agrc(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& t);
Cut make_rcpm(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& s,
              const std::vector<int>& t);
Cut make_rcminus(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& s,
                 const std::vector<int>& t);
Cut make_rcplus(const AugmentedGraph& g, const ArcSetFamilies& fam, const std::vector<int>& s,
                const std::vector<int>& t);
Cut make_gcut(const AugmentedGraph& g, const std::vector<int>& s, const std::vector<int>& t);

// Checks the cut against the arc-incidence vector of a collection of paths.
bool validate_cut(const Cut& cut, const std::vector<Path>& paths, const AugmentedGraph& g);

} // namespace mfc
