#include "gaussknot/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace gaussknot {

namespace {

// Uniform draw from [0, bound) by rejection.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

void matchings(std::vector<int>& slot, int next_chord, std::vector<std::vector<int>>& out) {
  const auto first = std::find(slot.begin(), slot.end(), -1);
  if (first == slot.end()) {
    out.push_back(slot);
    return;
  }
  *first = next_chord;
  for (auto it = first + 1; it != slot.end(); ++it) {
    if (*it != -1) continue;
    *it = next_chord;
    matchings(slot, next_chord + 1, out);
    *it = -1;
  }
  *first = -1;
}

}  // namespace

std::vector<GaussDiagram> generate(std::uint64_t seed, std::size_t n, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<GaussDiagram> out;
  out.reserve(count);
  std::vector<int> slots(2 * n);
  for (std::size_t k = 0; k < count; ++k) {
    std::iota(slots.begin(), slots.end(), 0);
    for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[draw(rng, i)]);
    std::vector<Chord> chords;
    chords.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      const Sign s = (rng() & 1u) ? Sign::positive : Sign::negative;
      chords.push_back(Chord{static_cast<int>(c) + 1, slots[2 * c], slots[2 * c + 1], s});
    }
    out.push_back(GaussDiagram::from_chords(std::move(chords)).relabeled());
  }
  return out;
}

std::vector<GaussDiagram> all_diagrams(std::size_t n) {
  std::vector<std::vector<int>> pairings;
  std::vector<int> slot(2 * n, -1);
  matchings(slot, 0, pairings);
  std::vector<GaussDiagram> out;
  for (const auto& pairing : pairings) {
    std::vector<std::pair<int, int>> ends(n, {-1, -1});
    for (int p = 0; p < static_cast<int>(pairing.size()); ++p) {
      auto& e = ends[static_cast<std::size_t>(pairing[static_cast<std::size_t>(p)])];
      (e.first == -1 ? e.first : e.second) = p;
    }
    for (std::uint32_t flips = 0; flips < (1u << n); ++flips)
      for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
        std::vector<Chord> chords;
        for (std::size_t c = 0; c < n; ++c) {
          const bool swap = (flips >> c) & 1u;
          chords.push_back(Chord{static_cast<int>(c) + 1, swap ? ends[c].second : ends[c].first,
                                 swap ? ends[c].first : ends[c].second,
                                 ((signs >> c) & 1u) ? Sign::negative : Sign::positive});
        }
        out.push_back(GaussDiagram::from_chords(std::move(chords)));
      }
  }
  return out;
}

}  // namespace gaussknot
