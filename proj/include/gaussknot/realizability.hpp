#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gaussknot/diagram.hpp"

namespace gaussknot {

/// One handedness bit per chord (indexed like GaussDiagram::chords()).
///
/// Every crossing vertex of the underlying 4-regular graph has four half-edge
/// ends: over-out, under-out, over-in, under-in. Bit `false` puts them in
/// counterclockwise order (over-out, under-out, over-in, under-in), which is a
/// positive crossing; bit `true` is the mirror order (over-out, under-in,
/// over-in, under-out), a negative crossing.
struct RotationSystem {
  std::vector<bool> handedness;

  bool operator==(const RotationSystem&) const = default;
};

/// Rotation system whose local handedness matches each chord's sign.
RotationSystem sign_rotation(const GaussDiagram& d);

/// Faces of the cellular embedding given by `rs`, counted by the usual
/// tracing: from a half-edge, cross its edge, then step once
/// counterclockwise around the vertex reached.
int count_faces(const GaussDiagram& d, const RotationSystem& rs);

/// Planar (spherical) embedding: V - E + F = n - 2n + F = 2.
inline bool is_planar(const GaussDiagram& d, const RotationSystem& rs) {
  return count_faces(d, rs) == static_cast<int>(d.size()) + 2;
}

struct RealizabilityReport {
  bool realizable = false;
  std::optional<RotationSystem> witness;
  bool even_filter_passed = false;
  bool signed_consistent = false;
};

struct RealizabilityOptions {
  std::size_t max_chords = 20;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every chord interlaces an even number of chords.
bool even_filter(const GaussDiagram& d);

/// Realizability of the underlying curve. Exhaustive over the 2^n rotation
/// systems after the even filter; the witness is the lexicographically least
/// planar one (chord 1's bit most significant). Throws BoundExceeded.
RealizabilityReport is_realizable_unsigned(const GaussDiagram& d, const RealizabilityOptions& opts = {});

/// Realizability of the full arrowed, signed diagram: some planar rotation
/// system, or its global mirror, agrees with the stored sign at every
/// crossing. Since mirroring preserves face counts, this holds iff the sign
/// rotation itself is planar. Throws BoundExceeded.
RealizabilityReport is_realizable_signed(const GaussDiagram& d, const RealizabilityOptions& opts = {});

/// Same verdict as is_realizable_signed, without the bound or the report.
bool is_signed_realizable(const GaussDiagram& d);

}  // namespace gaussknot
