#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gaussknot/diagram.hpp"

namespace gaussknot {

enum class Parity { even, odd };

/// Gaussian parity: a chord is odd iff it interlaces an odd number of chords.
std::map<int, Parity> gaussian_parity(const GaussDiagram& d);

struct ProjectionRound {
  int round;
  std::vector<int> deleted;  // chord ids, ascending
};

struct ProjectionResult {
  GaussDiagram image;
  std::vector<ProjectionRound> deleted;
  int rounds = 0;
  bool image_realizable = false;
};

/// Deletes every odd chord, recomputes parities, and repeats until all chords
/// are even. The image keeps the input's chord ids. `image_realizable` is the
/// signed realizability verdict on the fixed point; an even but unrealizable
/// fixed point is reported, not thrown.
ProjectionResult project(const GaussDiagram& d);

/// n(project(d).image) <= n(d).
bool chord_count_monotonicity(const GaussDiagram& d);

struct ContractOptions {
  /// Two sample diagrams count as equivalent when one is in the other's orbit
  /// at this depth.
  int move_depth = 2;
  /// Extra chords allowed above the larger diagram during orbit searches.
  int chord_slack = 1;
  /// Depth of the search connecting the two images.
  int image_depth = 2;
  std::size_t max_visited = 200'000;
};

struct ContractViolation {
  std::string code;
  std::string property;
};

/// Machine check of the projection contract on a sample.
struct ContractReport {
  std::size_t diagrams = 0;
  std::size_t idempotence_failures = 0;
  std::size_t subset_failures = 0;
  std::size_t identity_failures = 0;
  std::size_t realizable_inputs = 0;
  /// Fixed points that are even but not signed-realizable.
  std::size_t unrealizable_fixed_points = 0;
  std::size_t equivalent_pairs = 0;
  std::size_t preservation_passed = 0;
  /// Images not connected within the bounded search; never counted as failures.
  std::size_t preservation_inconclusive = 0;
  std::vector<ContractViolation> violations;

  bool passed() const { return idempotence_failures == 0 && subset_failures == 0 && identity_failures == 0; }
  double unrealizable_fraction() const {
    return diagrams == 0 ? 0.0 : static_cast<double>(unrealizable_fixed_points) / static_cast<double>(diagrams);
  }
};

/// Per-diagram checks (idempotence, chord subset, identity on realizable
/// diagrams) and, for every pair of sample diagrams connected by at most
/// `move_depth` moves, whether their images are connected too.
ContractReport check_contract(std::span<const GaussDiagram> sample, const ContractOptions& opts = {});

/// The three per-diagram checks only; adds to `report`.
void check_contract_single(const GaussDiagram& d, ContractReport& report);

}  // namespace gaussknot
