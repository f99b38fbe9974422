#include "mfc/instance_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mfc {

namespace {

// Content lines with comments and blanks stripped.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

bool parse_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    std::istringstream in(line);
    long long v;
    while (in >> v) out.push_back(v);
    std::string rest;
    return !(in >> rest) || rest.empty();
}

} // namespace

Instance read_instance(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw std::runtime_error("malformed-header: empty input");

    std::vector<long long> vals;
    if (!parse_ints(lines[0], vals) || vals.size() != 3)
        throw std::runtime_error("malformed-header: expected 'n m k'");
    long long n = vals[0], m = vals[1], k = vals[2];
    if (n < 1 || m < 0 || k < 0)
        throw std::runtime_error("malformed-header: counts out of range");
    if ((long long)lines.size() != 1 + m + k)
        throw std::runtime_error("malformed-header: line count does not match 'n m k'");

    std::vector<Arc> arcs;
    std::map<Arc, int> index;
    for (long long i = 0; i < m; ++i) {
        if (!parse_ints(lines[1 + i], vals) || vals.size() != 2)
            throw std::runtime_error("malformed-arc-line: expected 'u v'");
        long long u = vals[0], v = vals[1];
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::runtime_error("arc-out-of-range: endpoint outside 1..n");
        if (u == v) throw std::runtime_error("cycle-detected: self-loop");
        Arc arc{(int)u, (int)v};
        if (index.count(arc)) throw std::runtime_error("duplicate-arc: arc listed twice");
        index[arc] = (int)arcs.size();
        arcs.push_back(arc);
    }

    std::vector<int> mandatory;
    for (long long i = 0; i < k; ++i) {
        if (!parse_ints(lines[1 + m + i], vals) || vals.size() != 2)
            throw std::runtime_error("malformed-mandatory-line: expected 'u v'");
        auto it = index.find(Arc{(int)vals[0], (int)vals[1]});
        if (it == index.end())
            throw std::runtime_error("mandatory-not-in-A: mandatory arc is not an arc");
        mandatory.push_back(it->second);
    }

    try {
        return Instance(Dag((int)n, arcs), mandatory);
    } catch (const std::exception&) {
        throw std::runtime_error("cycle-detected: arcs do not form a DAG");
    }
}

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.dag.n() << ' ' << inst.dag.arcs().size() << ' ' << inst.mandatory.size() << '\n';
    for (const auto& [u, v] : inst.dag.arcs()) out << u << ' ' << v << '\n';
    for (int a : inst.mandatory)
        out << inst.dag.arcs()[a].first << ' ' << inst.dag.arcs()[a].second << '\n';
    return out.str();
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot open " + path);
    out << write_instance(inst);
    if (!out) throw std::runtime_error("io: write failed for " + path);
}

} // namespace mfc
