#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gaussknot/diagram.hpp"

namespace gaussknot {

/// Seeded random diagrams with `n` chords each: the 2n endpoint slots are
/// shuffled, consecutive slots pair up as (tail, head), and each chord gets an
/// independent fair sign. Uses mt19937_64 with an in-house Fisher-Yates, so
/// output depends only on the seed.
std::vector<GaussDiagram> generate(std::uint64_t seed, std::size_t n, std::size_t count);

/// Every diagram on n chords: all perfect matchings of 0..2n-1, both
/// orientations and both signs per chord. (2n-1)!! * 4^n diagrams.
std::vector<GaussDiagram> all_diagrams(std::size_t n);

}  // namespace gaussknot
