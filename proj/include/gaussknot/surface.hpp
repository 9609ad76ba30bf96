#pragma once

#include "gaussknot/diagram.hpp"

namespace gaussknot {

/// Combinatorial invariants of the ribbon surface (annulus plus one band per
/// chord) and of the closed surface obtained by capping its boundary circles.
struct SurfaceSummary {
  int n = 0;
  int trace_cycles = 1;
  int boundary_components = 2;
  int euler_ribbon = 0;
  int euler_closed = 2;
  int genus = 0;

  bool operator==(const SurfaceSummary&) const = default;
};

/// Number of cycles of the jump trace on the 2n circle arcs: follow an arc to
/// its terminal endpoint, jump to the partner endpoint, continue along the arc
/// starting there. The empty diagram has one cycle (the whole circle).
///
/// On a realizable diagram this is the number of Seifert circles.
int trace_cycles(const GaussDiagram& d);

SurfaceSummary surface_summary(const GaussDiagram& d);

inline int surface_genus(const GaussDiagram& d) { return surface_summary(d).genus; }

/// Half the GF(2) rank of the interlacement matrix. Agrees with the trace genus
/// on every diagram the test suite covers; the trace stays authoritative.
int genus_rank_accelerator(const GaussDiagram& d);

enum class DeletionCase { merge, split };

/// How the boundary of the ribbon surface changes when the band of `chord_id`
/// is removed. `merge`: the band's two edges lie on different boundary
/// components, which fuse (genus unchanged). `split`: both edges lie on one
/// component, which falls apart in two (genus drops by one).
DeletionCase deletion_case(const GaussDiagram& d, int chord_id);

const char* to_string(DeletionCase c);

}  // namespace gaussknot
