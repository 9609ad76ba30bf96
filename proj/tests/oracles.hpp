#pragma once

// Independent re-implementations used only as test oracles. None of these
// call into the code paths they check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gaussknot/diagram.hpp"

namespace gaussknot::oracle {

/// Interlacement by definition: restricted to the four endpoints of a and b,
/// the circle reads a b a b (up to rotation).
inline bool interlaced(const GaussDiagram& d, int id_a, int id_b) {
  std::vector<int> seq;
  for (int p = 0; p < d.num_positions(); ++p) {
    const int id = d.chord_at(p).id;
    if (id == id_a || id == id_b) seq.push_back(id);
  }
  return seq.size() == 4 && seq[0] != seq[1] && seq[1] != seq[2] && seq[2] != seq[3];
}

/// Boundary components of the disk-with-bands ribbon graph, traced as the
/// faces of a one-vertex combinatorial map: darts are endpoints, the vertex
/// rotation is p -> p+1, the edge involution is the chord.
inline int disk_band_faces(const GaussDiagram& d) {
  const int m = d.num_positions();
  if (m == 0) return 1;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  int faces = 0;
  for (int s = 0; s < m; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++faces;
    for (int p = s; !seen[static_cast<std::size_t>(p)]; p = (d.partner(p) + 1) % m) seen[static_cast<std::size_t>(p)] = 1;
  }
  return faces;
}

/// Genus of the capped annulus-with-bands surface via Euler characteristic,
/// counting the annulus's inner rim as one extra boundary circle.
inline int genus_by_darts(const GaussDiagram& d) {
  const int n = static_cast<int>(d.size());
  const int boundary = disk_band_faces(d) + 1;
  const int chi = -n + boundary;
  return (2 - chi) / 2;
}

/// Bridges: an arc after a head holds a tail iff the very next endpoint is a
/// tail, so count heads followed by a tail.
inline int bridges_by_runs(const GaussDiagram& d) {
  const int m = d.num_positions();
  int count = 0;
  for (int p = 0; p < m; ++p) {
    const int q = (p + 1) % m;
    if (d.chord_at(p).head == p && d.chord_at(q).tail == q) ++count;
  }
  return count;
}

/// Half-edges of the 4-regular graph stored as (vertex, strand, end):
/// strand 0 = over, 1 = under; end 0 = outgoing, 1 = incoming.
struct HalfEdge {
  int vertex, strand, end;
  bool operator==(const HalfEdge&) const = default;
};

inline int half_edge_index(const HalfEdge& h) { return 4 * h.vertex + 2 * h.strand + h.end; }

/// Clockwise face tracing: arrive through a half-edge, turn to the clockwise
/// neighbour at that vertex, leave along it. Counterclockwise order at a
/// vertex with bit 0 is (over-out, under-out, over-in, under-in).
inline int faces_clockwise(const GaussDiagram& d, std::uint64_t negative_mask) {
  const int m = d.num_positions();
  const int n = static_cast<int>(d.size());
  if (n == 0) return 2;
  // edge endpoints: arc p goes from (p, out) to (p+1, in)
  std::vector<int> other(static_cast<std::size_t>(4 * n));
  const auto at = [&](int pos, int end) {
    const Chord& c = d.chord_at(pos);
    return half_edge_index({d.chord_index_at(pos), c.tail == pos ? 0 : 1, end});
  };
  for (int p = 0; p < m; ++p) {
    const int a = at(p, 0), b = at((p + 1) % m, 1);
    other[static_cast<std::size_t>(a)] = b;
    other[static_cast<std::size_t>(b)] = a;
  }
  const auto ccw_order = [&](int v) -> std::vector<int> {
    const bool neg = (negative_mask >> v) & 1u;
    // over-out, under-out/in, over-in, under-in/out
    return neg ? std::vector<int>{0, 3, 1, 2} : std::vector<int>{0, 2, 1, 3};
  };
  const auto clockwise_next = [&](int h) {
    const int v = h / 4;
    const int local = h % 4;
    const auto order = ccw_order(v);
    const auto it = std::find(order.begin(), order.end(), local);
    const std::size_t i = static_cast<std::size_t>(it - order.begin());
    return 4 * v + order[(i + 3) % 4];
  };
  std::vector<char> seen(static_cast<std::size_t>(4 * n), 0);
  int faces = 0;
  for (int s = 0; s < 4 * n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++faces;
    for (int h = s; !seen[static_cast<std::size_t>(h)]; h = clockwise_next(other[static_cast<std::size_t>(h)]))
      seen[static_cast<std::size_t>(h)] = 1;
  }
  return faces;
}

/// Masks (bit v = chord index v negative) of all planar rotation systems,
/// enumerated in Gray-code order.
inline std::vector<std::uint64_t> planar_masks(const GaussDiagram& d) {
  const std::size_t n = d.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    if (faces_clockwise(d, gray) == static_cast<int>(n) + 2) out.push_back(gray);
  }
  return out;
}

inline bool realizable_unsigned(const GaussDiagram& d) { return d.empty() || !planar_masks(d).empty(); }

/// Literal signed definition: some planar rotation system, or its mirror,
/// matches every chord's sign.
inline bool realizable_signed(const GaussDiagram& d) {
  if (d.empty()) return true;
  std::uint64_t want = 0;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d.chords()[v].sign == Sign::negative) want |= std::uint64_t{1} << v;
  const std::uint64_t all = (std::uint64_t{1} << d.size()) - 1;
  for (std::uint64_t mask : planar_masks(d))
    if (mask == want || (mask ^ all) == want) return true;
  return false;
}

/// Seifert circles by oriented smoothing on the 4-regular graph: leaving a
/// crossing along one strand, arriving at the next crossing, continue out
/// along the other strand.
inline int seifert_circles(const GaussDiagram& d) {
  const int m = d.num_positions();
  if (m == 0) return 1;
  // out-edge of (vertex, strand) is the arc starting at that endpoint
  std::vector<int> arc_out(static_cast<std::size_t>(2 * d.size()));
  for (int p = 0; p < m; ++p) {
    const Chord& c = d.chord_at(p);
    arc_out[static_cast<std::size_t>(2 * d.chord_index_at(p) + (c.tail == p ? 0 : 1))] = p;
  }
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  int circles = 0;
  for (int s = 0; s < m; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++circles;
    int arc = s;
    while (!seen[static_cast<std::size_t>(arc)]) {
      seen[static_cast<std::size_t>(arc)] = 1;
      const int arrive = (arc + 1) % m;
      const Chord& c = d.chord_at(arrive);
      const int strand = c.tail == arrive ? 0 : 1;
      arc = arc_out[static_cast<std::size_t>(2 * d.chord_index_at(arrive) + (1 - strand))];
    }
  }
  return circles;
}

}  // namespace gaussknot::oracle
