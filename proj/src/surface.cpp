#include "gaussknot/surface.hpp"

#include <array>
#include <vector>

namespace gaussknot {

int trace_cycles(const GaussDiagram& d) {
  const int m = d.num_positions();
  if (m == 0) return 1;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  int cycles = 0;
  for (int arc = 0; arc < m; ++arc) {
    if (seen[static_cast<std::size_t>(arc)]) continue;
    ++cycles;
    // arc i runs from position i to i+1
    for (int a = arc; !seen[static_cast<std::size_t>(a)]; a = d.partner((a + 1) % m)) seen[static_cast<std::size_t>(a)] = true;
  }
  return cycles;
}

SurfaceSummary surface_summary(const GaussDiagram& d) {
  SurfaceSummary s;
  s.n = static_cast<int>(d.size());
  s.trace_cycles = trace_cycles(d);
  // The inner rim of the annulus never meets a band.
  s.boundary_components = s.trace_cycles + 1;
  s.euler_ribbon = -s.n;
  s.euler_closed = s.euler_ribbon + s.boundary_components;
  s.genus = (2 - s.euler_closed) / 2;
  return s;
}

int genus_rank_accelerator(const GaussDiagram& d) {
  return static_cast<int>(interlacement(d).rank() / 2);
}

DeletionCase deletion_case(const GaussDiagram& d, int chord_id) {
  const std::array<int, 1> ids{chord_id};
  const int before = trace_cycles(d);
  const int after = trace_cycles(delete_chords(d, ids));
  return after < before ? DeletionCase::merge : DeletionCase::split;
}

const char* to_string(DeletionCase c) { return c == DeletionCase::merge ? "merge" : "split"; }

}  // namespace gaussknot
