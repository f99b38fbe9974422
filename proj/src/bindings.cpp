#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "mfc/generators.hpp"
#include "mfc/instance_io.hpp"
#include "mfc/lp.hpp"
#include "mfc/oracle.hpp"
#include "mfc/solver.hpp"

namespace py = pybind11;
using namespace mfc;

namespace {

CutVariant parse_variant(const std::string& s) {
    if (s == "ipc") return CutVariant::Ipc;
    if (s == "agrc") return CutVariant::AGrc;
    if (s == "rc") return CutVariant::Rc;
    throw std::invalid_argument("unknown cut variant: " + s);
}

MwisMode parse_mwis(const std::string& s) {
    if (s == "greedy") return MwisMode::Greedy;
    if (s == "exact") return MwisMode::Exact;
    throw std::invalid_argument("unknown mwis mode: " + s);
}

std::vector<std::vector<int>> as_lists(const std::vector<Path>& paths) {
    std::vector<std::vector<int>> out;
    for (const Path& p : paths) out.push_back(p.nodes);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solver for covering DAG nodes with node-disjoint paths that "
              "each traverse a mandatory arc";

    py::class_<Instance>(m, "Instance")
        .def(py::init([](int n, const std::vector<Arc>& arcs, const std::vector<Arc>& mandatory) {
                 Dag dag(n, arcs);
                 std::vector<int> idx;
                 for (const Arc& a : mandatory) {
                     int k = dag.arc_index(a.first, a.second);
                     if (k < 0) throw std::invalid_argument("mandatory arc not in arc set");
                     idx.push_back(k);
                 }
                 return Instance(std::move(dag), std::move(idx));
             }),
             py::arg("n"), py::arg("arcs"), py::arg("mandatory") = std::vector<Arc>{})
        .def_property_readonly("n", [](const Instance& i) { return i.n(); })
        .def_property_readonly("arcs", [](const Instance& i) { return i.dag.arcs(); })
        .def_property_readonly("mandatory",
                               [](const Instance& i) {
                                   std::vector<Arc> out;
                                   for (int a : i.mandatory) out.push_back(i.dag.arcs()[a]);
                                   return out;
                               })
        .def("__repr__", [](const Instance& i) {
            return "<Instance n=" + std::to_string(i.n()) + " arcs=" +
                   std::to_string(i.dag.num_arcs()) + " mandatory=" +
                   std::to_string(i.mandatory.size()) + ">";
        });

    py::class_<SolveReport>(m, "SolveReport")
        .def_property_readonly("status",
                               [](const SolveReport& r) { return std::string(status_name(r.status)); })
        .def_readonly("objective", &SolveReport::objective)
        .def_readonly("covered", &SolveReport::covered)
        .def_readonly("paths", &SolveReport::paths)
        .def_readonly("bound", &SolveReport::bound)
        .def_readonly("root_lp", &SolveReport::root_lp)
        .def_readonly("tree_nodes", &SolveReport::tree_nodes)
        .def_readonly("t", &SolveReport::t)
        .def_readonly("t_sep", &SolveReport::t_sep)
        .def_property_readonly("witness",
                               [](const SolveReport& r) { return as_lists(r.witness); })
        .def_property_readonly("cuts", [](const SolveReport& r) { return r.cuts.total(); })
        .def("to_kv", &SolveReport::to_kv)
        .def("__repr__", [](const SolveReport& r) {
            return "<SolveReport " + std::string(status_name(r.status)) + " obj=" +
                   std::to_string(r.objective) + ">";
        });

    m.def("read_instance", &read_instance, py::arg("text"));
    m.def("write_instance", &write_instance, py::arg("instance"));
    m.def("load_instance", &load_instance, py::arg("path"));
    m.def("save_instance", &save_instance, py::arg("instance"), py::arg("path"));

    m.def("gen_set_a", &gen_set_a, py::arg("n"), py::arg("pa"), py::arg("pac"), py::arg("seed"));
    m.def("gen_set_c", &gen_set_c, py::arg("n"), py::arg("density"), py::arg("sparsity"),
          py::arg("seed"));
    m.def(
        "stats",
        [](const Instance& inst) {
            InstanceStats s = stats(inst);
            py::dict d;
            d["density"] = s.density;
            d["sparsity"] = s.sparsity ? py::object(py::float_(*s.sparsity)) : py::none();
            return d;
        },
        py::arg("instance"));

    m.def(
        "solve",
        [](const Instance& inst, const std::string& cuts, const std::string& mwis,
           double time_limit, long long node_limit, int max_rounds, int max_cuts_per_class,
           bool warm_start) {
            SolveConfig cfg;
            cfg.cuts = parse_variant(cuts);
            cfg.mwis = parse_mwis(mwis);
            cfg.time_limit = time_limit;
            cfg.node_limit = node_limit;
            cfg.max_rounds = max_rounds;
            cfg.max_cuts_per_class = max_cuts_per_class;
            cfg.warm_start = warm_start;
            return solve(inst, cfg);
        },
        py::arg("instance"), py::arg("cuts") = "rc", py::arg("mwis") = "greedy",
        py::arg("time_limit") = 1e18, py::arg("node_limit") = 0, py::arg("max_rounds") = 10,
        py::arg("max_cuts_per_class") = 50, py::arg("warm_start") = true);

    m.def(
        "enumerate_best",
        [](const Instance& inst) {
            OracleResult r = enumerate_best(inst);
            py::dict d;
            d["covered"] = r.covered;
            d["paths"] = r.paths;
            d["cost"] = r.cost;
            d["witness"] = as_lists(r.witness);
            return d;
        },
        py::arg("instance"));

    m.def(
        "evaluate_cover",
        [](const std::vector<std::vector<int>>& paths, int n) {
            std::vector<Path> ps;
            for (const auto& nodes : paths) ps.push_back(Path{nodes});
            return evaluate_cover(ps, n);
        },
        py::arg("paths"), py::arg("n"));
    m.def(
        "decode_cost",
        [](long long w, int n) {
            DecodedCost d = decode_cost(w, n);
            return py::make_tuple(d.covered, d.paths);
        },
        py::arg("w"), py::arg("n"));

    m.def("best_gap", &best_gap, py::arg("z_best"), py::arg("lb"));
    m.def("obj_gap", &obj_gap, py::arg("objs"), py::arg("bests"));
}
