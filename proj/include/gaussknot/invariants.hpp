#pragma once

#include <cstddef>
#include <string>

#include "gaussknot/diagram.hpp"
#include "gaussknot/moves.hpp"

namespace gaussknot {

/// Arcs between cyclically consecutive arrow heads that contain at least one
/// arrow tail. With a single head the arc runs from the head all the way
/// around to itself, so a one-chord diagram has one bridge.
int bridge_count(const GaussDiagram& d);

/// Deleting any single chord never raises the bridge count.
bool verify_bridge_deletion_monotone(const GaussDiagram& d);

struct BoundedMinimum {
  int value = 0;
  bool truncated = false;
  std::size_t visited = 0;
};

/// Least bridge count over the bounded move orbit: an upper bound on the
/// virtual bridge number. Zero certifies the unknot.
BoundedMinimum vb_upper_bound(const GaussDiagram& d, const OrbitOptions& opts);

/// Least surface genus over the bounded move orbit.
BoundedMinimum gvc_upper_bound(const GaussDiagram& d, const OrbitOptions& opts);

struct MinimumPair {
  int lhs = 0;  // over every orbit element
  int rhs = 0;  // over realizable orbit elements only
  bool operator==(const MinimumPair&) const = default;
};

/// Virtual versus classical minima of genus and bridge count for one
/// realizable diagram.
struct TheoremReport {
  std::string diagram;
  MinimumPair genus;
  MinimumPair bridges;
  /// Projection never raised genus or bridge count on any orbit element.
  bool projection_consistent = true;
  std::size_t visited = 0;
  std::size_t realizable_visited = 0;
  bool truncated = false;

  bool genus_holds() const { return truncated ? genus.lhs <= genus.rhs : genus.lhs == genus.rhs; }
  bool bridges_holds() const { return truncated ? bridges.lhs <= bridges.rhs : bridges.lhs == bridges.rhs; }
  /// Equality is only claimed on completed searches.
  bool equality_established() const {
    return !truncated && genus.lhs == genus.rhs && bridges.lhs == bridges.rhs;
  }
  bool passed() const { return projection_consistent && genus_holds() && bridges_holds(); }
};

/// Runs the bounded orbit of a realizable diagram and compares the minima
/// over all elements with the minima over signed-realizable elements. Throws
/// std::invalid_argument if `d` is not signed-realizable.
TheoremReport verify_theorems(const GaussDiagram& d, const OrbitOptions& opts);

}  // namespace gaussknot
