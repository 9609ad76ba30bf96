#include "gaussknot/realizability.hpp"

#include <cstdint>
#include <string>

namespace gaussknot {

namespace {

// Half-edge slots at a crossing vertex.
constexpr int kOverOut = 0;
constexpr int kUnderOut = 1;
constexpr int kOverIn = 2;
constexpr int kUnderIn = 3;

// Counterclockwise successor of each slot, for each handedness.
constexpr int kNextPositive[4] = {kUnderOut, kOverIn, kUnderIn, kOverOut};
constexpr int kNextNegative[4] = {kUnderIn, kOverOut, kUnderOut, kOverIn};

/// Dart 4c+slot. `across[h]` is the other end of h's edge.
struct HalfEdgeGraph {
  std::vector<int> across;

  explicit HalfEdgeGraph(const GaussDiagram& d) : across(4 * d.size()) {
    const int m = d.num_positions();
    for (int p = 0; p < m; ++p) {
      // Arc p leaves position p and enters position p+1.
      const int q = (p + 1) % m;
      const Chord& from = d.chord_at(p);
      const Chord& to = d.chord_at(q);
      const int out = 4 * d.chord_index_at(p) + (from.tail == p ? kOverOut : kUnderOut);
      const int in = 4 * d.chord_index_at(q) + (to.tail == q ? kOverIn : kUnderIn);
      across[static_cast<std::size_t>(out)] = in;
      across[static_cast<std::size_t>(in)] = out;
    }
  }

  template <class Handed>
  int faces(Handed&& negative) const {
    const std::size_t darts = across.size();
    std::vector<bool> seen(darts, false);
    int count = 0;
    for (std::size_t start = 0; start < darts; ++start) {
      if (seen[start]) continue;
      ++count;
      std::size_t h = start;
      while (!seen[h]) {
        seen[h] = true;
        const int a = across[h];
        const int v = a / 4;
        const int slot = a % 4;
        const int next = negative(v) ? kNextNegative[slot] : kNextPositive[slot];
        h = static_cast<std::size_t>(4 * v + next);
      }
    }
    return count;
  }
};

void check_bound(const GaussDiagram& d, const RealizabilityOptions& opts) {
  if (d.size() > opts.max_chords)
    throw BoundExceeded("diagram has " + std::to_string(d.size()) + " chords; realizability bound is " +
                        std::to_string(opts.max_chords));
}

}  // namespace

RotationSystem sign_rotation(const GaussDiagram& d) {
  RotationSystem rs;
  rs.handedness.reserve(d.size());
  for (const Chord& c : d.chords()) rs.handedness.push_back(c.sign == Sign::negative);
  return rs;
}

int count_faces(const GaussDiagram& d, const RotationSystem& rs) {
  if (d.empty()) return 2;
  if (rs.handedness.size() != d.size())
    throw std::invalid_argument("rotation system has " + std::to_string(rs.handedness.size()) +
                                " bits for " + std::to_string(d.size()) + " chords");
  return HalfEdgeGraph(d).faces([&](int v) { return rs.handedness[static_cast<std::size_t>(v)]; });
}

bool even_filter(const GaussDiagram& d) {
  const InterlacementMatrix m = interlacement(d);
  for (std::size_t a = 0; a < m.size(); ++a)
    if (m.row_weight(a) % 2 != 0) return false;
  return true;
}

bool is_signed_realizable(const GaussDiagram& d) {
  return d.empty() || is_planar(d, sign_rotation(d));
}

RealizabilityReport is_realizable_unsigned(const GaussDiagram& d, const RealizabilityOptions& opts) {
  check_bound(d, opts);
  RealizabilityReport report;
  report.even_filter_passed = even_filter(d);
  report.signed_consistent = is_signed_realizable(d);
  if (d.empty()) {
    report.realizable = true;
    report.witness = RotationSystem{};
    return report;
  }
  if (!report.even_filter_passed) return report;

  const std::size_t n = d.size();
  if (n >= 64) throw BoundExceeded("exhaustive rotation search supports at most 63 chords");
  const HalfEdgeGraph graph(d);
  const int target = static_cast<int>(n) + 2;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Chord 0 is the most significant bit, so ascending masks are
    // lexicographic in chord order.
    auto negative = [&](int v) { return ((mask >> (n - 1 - static_cast<std::size_t>(v))) & 1u) != 0; };
    if (graph.faces(negative) == target) {
      RotationSystem rs;
      for (std::size_t v = 0; v < n; ++v) rs.handedness.push_back(negative(static_cast<int>(v)));
      report.realizable = true;
      report.witness = std::move(rs);
      return report;
    }
  }
  return report;
}

RealizabilityReport is_realizable_signed(const GaussDiagram& d, const RealizabilityOptions& opts) {
  check_bound(d, opts);
  RealizabilityReport report;
  report.even_filter_passed = even_filter(d);
  if (d.empty()) {
    report.realizable = report.signed_consistent = true;
    report.witness = RotationSystem{};
    return report;
  }
  RotationSystem rs = sign_rotation(d);
  report.signed_consistent = is_planar(d, rs);
  report.realizable = report.signed_consistent;
  if (report.realizable) {
    // The mirror is planar too; report the lexicographically smaller one.
    RotationSystem mirror = rs;
    mirror.handedness.flip();
    report.witness = mirror.handedness < rs.handedness ? std::move(mirror) : std::move(rs);
  }
  return report;
}

}  // namespace gaussknot
