#include "gaussknot/invariants.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "gaussknot/projection.hpp"
#include "gaussknot/realizability.hpp"
#include "gaussknot/surface.hpp"

namespace gaussknot {

int bridge_count(const GaussDiagram& d) {
  const int m = d.num_positions();
  std::vector<int> heads;
  for (int p = 0; p < m; ++p)
    if (d.chord_at(p).head == p) heads.push_back(p);
  if (heads.empty()) return 0;
  int bridges = 0;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    const int from = heads[i];
    const int to = heads[(i + 1) % heads.size()];
    // open arc from..to going forward; a single head wraps all the way round
    for (int p = (from + 1) % m; p != to; p = (p + 1) % m)
      if (d.chord_at(p).tail == p) {
        ++bridges;
        break;
      }
  }
  return bridges;
}

bool verify_bridge_deletion_monotone(const GaussDiagram& d) {
  const int before = bridge_count(d);
  for (const Chord& c : d.chords()) {
    const std::array<int, 1> ids{c.id};
    if (bridge_count(delete_chords(d, ids)) > before) return false;
  }
  return true;
}

BoundedMinimum vb_upper_bound(const GaussDiagram& d, const OrbitOptions& opts) {
  const OrbitReport r = orbit(d, opts);
  return {r.min_bridges, r.frontier_truncated, r.visited};
}

BoundedMinimum gvc_upper_bound(const GaussDiagram& d, const OrbitOptions& opts) {
  const OrbitReport r = orbit(d, opts);
  return {r.min_genus, r.frontier_truncated, r.visited};
}

TheoremReport verify_theorems(const GaussDiagram& d, const OrbitOptions& opts) {
  if (!is_signed_realizable(d)) throw std::invalid_argument("verify_theorems needs a realizable diagram");
  TheoremReport t;
  const int g0 = surface_genus(d);
  const int b0 = bridge_count(d);
  t.genus = {g0, g0};
  t.bridges = {b0, b0};
  const OrbitReport r = orbit(d, opts, [&](const GaussDiagram& e, const std::string&, int) {
    const int g = surface_genus(e);
    const int b = bridge_count(e);
    t.genus.lhs = std::min(t.genus.lhs, g);
    t.bridges.lhs = std::min(t.bridges.lhs, b);
    if (is_signed_realizable(e)) {
      ++t.realizable_visited;
      t.genus.rhs = std::min(t.genus.rhs, g);
      t.bridges.rhs = std::min(t.bridges.rhs, b);
    }
    const GaussDiagram image = project(e).image;
    if (surface_genus(image) > g || bridge_count(image) > b) t.projection_consistent = false;
  });
  t.diagram = r.start;
  t.visited = r.visited;
  t.truncated = r.frontier_truncated;
  return t;
}

}  // namespace gaussknot
