#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gaussknot/diagram.hpp"

namespace gaussknot {

/// Reidemeister moves on Gauss diagrams.
///
///  R1: a chord whose endpoints are adjacent on the circle, any sign, either
///      orientation.
///  R2: two chords of opposite sign whose tails are adjacent and whose heads
///      are adjacent, in either relative order (strands parallel: the chords
///      interlace; antiparallel: they do not).
///  R3: three chords whose six endpoints form three adjacent pairs, one pair
///      per two chords. Name the strands top (both tails), middle (one head,
///      one tail) and bottom (both heads), and call tb/tm/mb the chords
///      between them. With o_x = 1 when the strand's second crossing comes
///      first, the triangle is a genuine R3 configuration iff
///        sign(tm) * sign(tb) = (-1)^(o_middle xor o_bottom) and
///        sign(tb) * sign(mb) = (-1)^(o_top xor o_middle);
///      the move swaps the endpoints inside each of the three pairs. The
///      relation was read off straight-line arrangements of three strands;
///      cyclic triangles (each strand over one, under the other) are rejected.
enum class MoveKind { r1_insert, r1_delete, r2_insert, r2_delete, r3 };

const char* to_string(MoveKind k);

struct Move {
  MoveKind kind;
  /// Insertion sites: gap g sits just before position g (gap 0 is between the
  /// last position and position 0). R2 uses gaps[0] <= gaps[1]; when equal,
  /// the first pair precedes the second inside the gap.
  std::array<int, 2> gaps{0, 0};
  /// Chord ids for deletions and R3.
  std::array<int, 3> chords{0, 0, 0};
  /// R3: first positions of the three adjacent pairs (p, p+1 mod 2n).
  std::array<int, 3> sites{0, 0, 0};
  /// R1: tail before head. R2: the first pair holds the tails.
  bool tail_first = true;
  /// R2: both pairs list the two new chords in the same order.
  bool parallel = false;
  /// Sign of the (first) inserted chord; R2's second chord gets the opposite.
  Sign sign = Sign::positive;
};

/// Every move applicable to `d`; insertions only while the result has at most
/// `max_chords` chords.
std::vector<Move> enumerate_moves(const GaussDiagram& d, std::size_t max_chords);

/// Inserted chords get fresh ids above the largest existing id.
GaussDiagram apply(const GaussDiagram& d, const Move& m);

/// All diagrams one move away, deduplicated by canonical form and sorted by it.
std::vector<GaussDiagram> neighbors(const GaussDiagram& d, std::size_t max_chords);

/// Canonical forms of the neighbors, sorted.
std::vector<std::string> neighbor_forms(const GaussDiagram& d, std::size_t max_chords);

/// Sum of the signs of the odd chords.
int odd_writhe(const GaussDiagram& d);

struct OrbitOptions {
  int depth = 3;
  std::size_t max_chords = 6;
  /// Resource budget on distinct diagrams; hitting it truncates the search.
  std::size_t max_visited = 5'000'000;
  /// Worker threads for frontier expansion; 0 picks the hardware count.
  unsigned threads = 0;
};

struct OrbitReport {
  std::string start;
  int depth = 0;
  std::size_t visited = 0;
  int min_genus = 0;
  int min_bridges = 0;
  bool reached_empty = false;
  bool frontier_truncated = false;
};

/// Called once per distinct diagram, in breadth-first order; `level` is its
/// distance from the start. Visit order is deterministic.
using OrbitVisitor = std::function<void(const GaussDiagram& d, const std::string& canonical, int level)>;

/// Breadth-first closure of `neighbors` up to `opts.depth` moves.
OrbitReport orbit(const GaussDiagram& d, const OrbitOptions& opts, const OrbitVisitor& visit = {});

/// Distance from `from` to `to` if found within the bounds.
std::optional<int> connect(const GaussDiagram& from, const GaussDiagram& to, const OrbitOptions& opts);

}  // namespace gaussknot
