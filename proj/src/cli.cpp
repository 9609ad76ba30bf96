#include "gaussknot/cli.hpp"

#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <vector>

#include "gaussknot/diagram.hpp"
#include "gaussknot/generate.hpp"
#include "gaussknot/invariants.hpp"
#include "gaussknot/moves.hpp"
#include "gaussknot/projection.hpp"
#include "gaussknot/realizability.hpp"
#include "gaussknot/surface.hpp"

namespace gaussknot::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<CorpusEntry> load_inputs(const RunConfig& cfg) {
  if (cfg.code && cfg.corpus) throw InputError("give either a code or --corpus, not both");
  if (cfg.corpus) {
    std::ifstream in(*cfg.corpus);
    if (!in) throw InputError("cannot read corpus file " + *cfg.corpus);
    try {
      return read_corpus(in);
    } catch (const ParseError& e) {
      throw InputError(*cfg.corpus + ": " + e.what());
    }
  }
  if (!cfg.code) throw InputError("missing input: pass a Gauss code or --corpus <path>");
  try {
    return {CorpusEntry{"input", parse(*cfg.code), 0}};
  } catch (const ParseError& e) {
    throw InputError(std::string("malformed code: ") + e.what());
  }
}

OrbitOptions orbit_options(const RunConfig& cfg, const GaussDiagram& d) {
  OrbitOptions o;
  o.depth = cfg.depth;
  o.max_chords = cfg.max_chords.value_or(d.size() + 3);
  o.max_visited = cfg.max_visited;
  return o;
}

std::string bits(const RotationSystem& rs) {
  std::string s;
  for (bool b : rs.handedness) s.push_back(b ? '1' : '0');
  return s;
}

json orbit_json(const OrbitReport& r) {
  return {{"start", r.start},
          {"depth", r.depth},
          {"visited", r.visited},
          {"min_genus", r.min_genus},
          {"min_bridges", r.min_bridges},
          {"reached_empty", r.reached_empty},
          {"frontier_truncated", r.frontier_truncated}};
}

json base_record(const RunConfig& cfg, const CorpusEntry& e) {
  const GaussDiagram& d = e.diagram;
  const ProjectionResult pr = project(d);
  json rec{{"name", e.name},
           {"code", serialize(d)},
           {"canonical", canonical_form(d)},
           {"n", d.size()},
           {"genus", surface_genus(d)},
           {"bridges", bridge_count(d)},
           {"realizable", nullptr},
           {"projection", {{"code", serialize(pr.image)}, {"rounds", pr.rounds}, {"realizable", pr.image_realizable}}},
           {"orbit", nullptr}};
  if (d.size() <= cfg.realizability_bound) rec["realizable"] = is_signed_realizable(d);
  return rec;
}

void check_bounds(const RunConfig& cfg) {
  if (cfg.depth <= 0) throw InputError("--depth must be positive");
  if (cfg.max_chords && *cfg.max_chords == 0) throw InputError("--max-chords must be positive");
  if (cfg.realizability_bound == 0) throw InputError("--realizability-bound must be positive");
  if (cfg.max_visited == 0) throw InputError("--max-visited must be positive");
}

int run_gen(const RunConfig& cfg, std::ostream& out) {
  const auto diagrams = generate(cfg.seed, cfg.chords, cfg.count);
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    const std::string name = "gen-" + std::to_string(cfg.seed) + "-" + std::to_string(cfg.chords) + "-" + std::to_string(k);
    if (cfg.output == OutputMode::json)
      out << json{{"name", name}, {"code", serialize(diagrams[k])}, {"canonical", canonical_form(diagrams[k])}}.dump()
          << '\n';
    else
      out << name << '\t' << serialize(diagrams[k]) << '\n';
  }
  return kOk;
}

int run_entries(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<CorpusEntry> entries = load_inputs(cfg);
  const bool as_json = cfg.output == OutputMode::json;
  int status = kOk;
  for (const CorpusEntry& e : entries) {
    const GaussDiagram& d = e.diagram;
    json rec = base_record(cfg, e);
    std::ostringstream text;
    text << e.name;

    if (cfg.command == "parse") {
      text << '\t' << serialize(d) << "\tcanonical=" << canonical_form(d) << " n=" << d.size();
    } else if (cfg.command == "genus") {
      const SurfaceSummary s = surface_summary(d);
      rec["surface"] = {{"trace_cycles", s.trace_cycles},
                        {"boundary_components", s.boundary_components},
                        {"euler_ribbon", s.euler_ribbon},
                        {"euler_closed", s.euler_closed},
                        {"genus", s.genus}};
      text << " genus=" << s.genus << " trace_cycles=" << s.trace_cycles << " boundary=" << s.boundary_components
           << " euler_ribbon=" << s.euler_ribbon << " euler_closed=" << s.euler_closed;
    } else if (cfg.command == "bridges") {
      text << " bridges=" << bridge_count(d);
    } else if (cfg.command == "realizable") {
      const RealizabilityOptions ro{cfg.realizability_bound};
      RealizabilityReport u, s;
      try {
        u = is_realizable_unsigned(d, ro);
        s = is_realizable_signed(d, ro);
      } catch (const BoundExceeded& ex) {
        throw InputError(e.name + ": " + ex.what());
      }
      rec["realizability"] = {{"unsigned", u.realizable},
                              {"signed", s.realizable},
                              {"even_filter", u.even_filter_passed},
                              {"unsigned_witness", u.witness ? json(bits(*u.witness)) : json(nullptr)},
                              {"signed_witness", s.witness ? json(bits(*s.witness)) : json(nullptr)}};
      text << " signed=" << (s.realizable ? "true" : "false") << " unsigned=" << (u.realizable ? "true" : "false")
           << " even=" << (u.even_filter_passed ? "true" : "false");
      if (u.witness) text << " witness=" << bits(*u.witness);
    } else if (cfg.command == "project") {
      const ProjectionResult pr = project(d);
      json rounds = json::array();
      for (const ProjectionRound& r : pr.deleted) rounds.push_back({{"round", r.round}, {"deleted", r.deleted}});
      rec["projection"]["deleted"] = rounds;
      text << " image=\"" << serialize(pr.image) << "\" rounds=" << pr.rounds
           << " realizable=" << (pr.image_realizable ? "true" : "false");
      for (const ProjectionRound& r : pr.deleted) {
        text << "\n  round " << r.round << ": deleted";
        for (int id : r.deleted) text << ' ' << id;
      }
      if (!pr.image_realizable) text << "\n  warning: fixed point is even but not realizable";
    } else if (cfg.command == "orbit") {
      const OrbitReport r = orbit(d, orbit_options(cfg, d));
      rec["orbit"] = orbit_json(r);
      rec["odd_writhe"] = odd_writhe(d);
      text << " visited=" << r.visited << " min_genus=" << r.min_genus << " min_bridges=" << r.min_bridges
           << " reached_empty=" << (r.reached_empty ? "true" : "false")
           << " truncated=" << (r.frontier_truncated ? "true" : "false") << " odd_writhe=" << odd_writhe(d);
      if (r.frontier_truncated) status = std::max(status, static_cast<int>(kTruncated));
    } else if (cfg.command == "verify") {
      if (!is_signed_realizable(d)) throw InputError(e.name + ": verify needs a realizable diagram");
      const OrbitOptions oo = orbit_options(cfg, d);
      const TheoremReport t = verify_theorems(d, oo);
      rec["orbit"] = {{"start", t.diagram}, {"depth", oo.depth}, {"max_chords", oo.max_chords},
                      {"visited", t.visited}, {"frontier_truncated", t.truncated}};
      rec["theorem"] = {{"genus", {{"virtual", t.genus.lhs}, {"classical", t.genus.rhs}}},
                        {"bridges", {{"virtual", t.bridges.lhs}, {"classical", t.bridges.rhs}}},
                        {"projection_consistent", t.projection_consistent},
                        {"realizable_visited", t.realizable_visited},
                        {"equality", t.equality_established()}};
      text << " genus " << t.genus.lhs << (t.genus.lhs == t.genus.rhs ? " = " : " < ") << t.genus.rhs
           << "; bridges " << t.bridges.lhs << (t.bridges.lhs == t.bridges.rhs ? " = " : " < ") << t.bridges.rhs
           << "; projection_consistent=" << (t.projection_consistent ? "true" : "false") << " visited=" << t.visited;
      if (t.truncated) {
        text << " TRUNCATED (equality not established)";
        err << e.name << ": search truncated; only virtual <= classical is checked\n";
        status = std::max(status, static_cast<int>(kTruncated));
      } else if (t.equality_established()) {
        text << " EQUAL";
      }
      if (!t.passed()) status = kCheckFailed;
    } else {
      throw InputError("unknown command '" + cfg.command + "'");
    }
    if (as_json)
      out << rec.dump() << '\n';
    else
      out << text.str() << '\n';
  }
  return status;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_bounds(config);
    if (config.command == "gen") return run_gen(config, out);
    return run_entries(config, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace gaussknot::cli
