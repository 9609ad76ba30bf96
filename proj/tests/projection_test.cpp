#include <doctest.h>

#include <algorithm>

#include "gaussknot/invariants.hpp"
#include "gaussknot/moves.hpp"
#include "gaussknot/projection.hpp"
#include "gaussknot/realizability.hpp"
#include "gaussknot/surface.hpp"
#include "samples.hpp"

using namespace gaussknot;

TEST_CASE("gaussian_parity") {
  for (const auto& [id, p] : gaussian_parity(parse(samples::kTrefoil))) CHECK(p == Parity::even);
  const auto v = gaussian_parity(parse(samples::kVirtualTrefoil));
  CHECK(v.size() == 2);
  for (const auto& [id, p] : v) CHECK(p == Parity::odd);
  CHECK(gaussian_parity(GaussDiagram{}).empty());
}

TEST_CASE("project examples") {
  const GaussDiagram t = parse(samples::kTrefoil);
  const ProjectionResult rt = project(t);
  CHECK(rt.image == t);
  CHECK(rt.rounds == 0);
  CHECK(rt.image_realizable);

  const ProjectionResult rv = project(parse(samples::kVirtualTrefoil));
  CHECK(rv.image.empty());
  CHECK(rv.rounds == 1);
  REQUIRE(rv.deleted.size() == 1);
  CHECK(rv.deleted[0].deleted == std::vector<int>{1, 2});
  CHECK(rv.image_realizable);

  const ProjectionResult re = project(GaussDiagram{});
  CHECK(re.image.empty());
  CHECK(re.rounds == 0);
}

TEST_CASE("project can take several rounds") {
  bool found_multi = false;
  for (const GaussDiagram& d : samples::random(41, 3, 9, 300)) {
    const ProjectionResult r = project(d);
    if (r.rounds >= 2) found_multi = true;
    CHECK(r.rounds == static_cast<int>(r.deleted.size()));
    CHECK(r.rounds <= static_cast<int>(d.size()));
    for (const ProjectionRound& round : r.deleted) CHECK_FALSE(round.deleted.empty());
  }
  CHECK(found_multi);
}

TEST_CASE("projection properties") {
  auto sample = samples::exhaustive(3);
  const auto more = samples::random(42, 4, 9, 300);
  sample.insert(sample.end(), more.begin(), more.end());
  for (const GaussDiagram& d : sample) {
    const ProjectionResult r = project(d);
    CHECK(project(r.image).image == r.image);
    CHECK(chord_count_monotonicity(d));
    // deleted sets partition input \ image
    std::vector<int> removed;
    for (const ProjectionRound& round : r.deleted) removed.insert(removed.end(), round.deleted.begin(), round.deleted.end());
    CHECK(removed.size() + r.image.size() == d.size());
    CHECK(delete_chords(d, removed) == r.image);
    if (is_signed_realizable(d)) CHECK(r.image == d);
    CHECK(surface_genus(r.image) <= surface_genus(d));
    CHECK(bridge_count(r.image) <= bridge_count(d));
    for (const auto& [id, p] : gaussian_parity(r.image)) CHECK(p == Parity::even);
  }
}

TEST_CASE("check_contract examples") {
  const std::vector<GaussDiagram> trefoil{parse(samples::kTrefoil)};
  const ContractReport rt = check_contract(trefoil);
  CHECK(rt.passed());
  CHECK(rt.realizable_inputs == 1);
  CHECK(rt.unrealizable_fixed_points == 0);

  // R1-stabilised virtual trefoil: a kink spliced into the middle
  const std::vector<GaussDiagram> pair{parse(samples::kVirtualTrefoil), parse("O1+O2+O3-U3-U1+U2+")};
  const ContractReport rp = check_contract(pair);
  CHECK(rp.passed());
  CHECK(rp.equivalent_pairs == 1);
  CHECK(rp.preservation_passed == 1);
  CHECK(rp.preservation_inconclusive == 0);
  CHECK(project(pair[1]).image == parse("O1-U1-"));

  const std::vector<GaussDiagram> empty{GaussDiagram{}};
  CHECK(check_contract(empty).passed());
}

TEST_CASE("check_contract counts unrealizable fixed points") {
  ContractReport report;
  for (const GaussDiagram& d : samples::exhaustive(4)) check_contract_single(d, report);
  CHECK(report.passed());
  CHECK(report.diagrams == 1 + 4 + 48 + 960 + 26880);
  // the even, non-realizable 3-chord word from the realizability tests is one
  CHECK(report.unrealizable_fixed_points > 0);
  CHECK(report.unrealizable_fraction() < 1.0);
}
