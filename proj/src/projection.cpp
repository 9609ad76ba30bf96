#include "gaussknot/projection.hpp"

#include <algorithm>

#include "gaussknot/moves.hpp"
#include "gaussknot/realizability.hpp"

namespace gaussknot {

std::map<int, Parity> gaussian_parity(const GaussDiagram& d) {
  const InterlacementMatrix m = interlacement(d);
  std::map<int, Parity> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    out.emplace(d.chords()[i].id, m.row_weight(i) % 2 == 0 ? Parity::even : Parity::odd);
  return out;
}

ProjectionResult project(const GaussDiagram& d) {
  ProjectionResult r;
  r.image = d;
  for (;;) {
    std::vector<int> odd;
    for (const auto& [id, parity] : gaussian_parity(r.image))
      if (parity == Parity::odd) odd.push_back(id);
    if (odd.empty()) break;
    ++r.rounds;
    r.image = delete_chords(r.image, odd);
    r.deleted.push_back(ProjectionRound{r.rounds, std::move(odd)});
  }
  r.image_realizable = is_signed_realizable(r.image);
  return r;
}

bool chord_count_monotonicity(const GaussDiagram& d) { return project(d).image.size() <= d.size(); }

namespace {

// Image is a subdiagram of d: deleting the recorded chords from d gives it,
// and every image chord keeps its id, endpoints order and sign.
bool is_subdiagram(const GaussDiagram& d, const ProjectionResult& r) {
  std::vector<int> removed;
  for (const ProjectionRound& round : r.deleted) {
    if (round.deleted.empty()) return false;
    removed.insert(removed.end(), round.deleted.begin(), round.deleted.end());
  }
  std::vector<int> sorted = removed;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.size() + r.image.size() != d.size()) return false;
  for (int id : sorted)
    if (!d.has_chord(id) || r.image.has_chord(id)) return false;
  const GaussDiagram expected = delete_chords(d, removed);
  if (!(expected == r.image)) return false;
  for (const Chord& c : r.image.chords())
    if (expected.chord(c.id).sign != c.sign || expected.index_of(c.id) != r.image.index_of(c.id)) return false;
  return r.rounds == static_cast<int>(r.deleted.size()) && r.rounds <= static_cast<int>(d.size());
}

}  // namespace

void check_contract_single(const GaussDiagram& d, ContractReport& report) {
  ++report.diagrams;
  const ProjectionResult r = project(d);
  const std::string code = serialize(d);
  if (!(project(r.image).image == r.image)) {
    ++report.idempotence_failures;
    report.violations.push_back({code, "idempotence"});
  }
  if (!is_subdiagram(d, r)) {
    ++report.subset_failures;
    report.violations.push_back({code, "subset"});
  }
  if (is_signed_realizable(d)) {
    ++report.realizable_inputs;
    if (!(r.image == d) || r.rounds != 0) {
      ++report.identity_failures;
      report.violations.push_back({code, "identity on realizable"});
    }
  }
  if (!r.image_realizable) ++report.unrealizable_fixed_points;
}

ContractReport check_contract(std::span<const GaussDiagram> sample, const ContractOptions& opts) {
  if (opts.move_depth < 0 || opts.image_depth < 0) throw std::invalid_argument("contract search depths must be nonnegative");
  ContractReport report;
  std::vector<GaussDiagram> images;
  for (const GaussDiagram& d : sample) {
    check_contract_single(d, report);
    images.push_back(project(d).image);
  }
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      const std::size_t cap = std::max(sample[i].size(), sample[j].size()) + static_cast<std::size_t>(opts.chord_slack);
      OrbitOptions pair_opts{opts.move_depth, cap, opts.max_visited, 0};
      if (!connect(sample[i], sample[j], pair_opts)) continue;
      ++report.equivalent_pairs;
      const std::size_t image_cap =
          std::max(images[i].size(), images[j].size()) + static_cast<std::size_t>(opts.chord_slack);
      OrbitOptions image_opts{opts.image_depth, image_cap, opts.max_visited, 0};
      if (connect(images[i], images[j], image_opts))
        ++report.preservation_passed;
      else
        ++report.preservation_inconclusive;
    }
  return report;
}

}  // namespace gaussknot
