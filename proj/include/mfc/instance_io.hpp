#pragma once

#include <string>

#include "mfc/graph.hpp"

namespace mfc {

/// Parses the plain-text instance format:
///   n m k
///   u v          (m arc lines)
///   u v          (k mandatory-arc lines, each repeating an arc line)
/// Lines starting with '#' and blank lines are ignored. Errors carry one of
/// the codes: malformed-header, arc-out-of-range, duplicate-arc,
/// cycle-detected, mandatory-not-in-A.
Instance read_instance(const std::string& text);

/// Canonical serialization; read_instance(write_instance(x)) round-trips
/// byte-identically for canonical files.
std::string write_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

} // namespace mfc
