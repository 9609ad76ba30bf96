#include <CLI11.hpp>
#include <iostream>
#include <utility>

#include "gaussknot/cli.hpp"

int main(int argc, char** argv) {
  using gaussknot::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Gauss diagrams of classical and virtual knots"};
  app.require_subcommand(1);

  bool json = false;
  std::string code;
  std::string corpus;
  std::size_t max_chords = 0;

  const auto common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input) {
      sub->add_option("code", code, "Gauss code, e.g. O1+U2+O3+U1+O2+U3+");
      sub->add_option("--corpus", corpus, "file of name<TAB>code lines");
    }
    sub->add_option("--depth", cfg.depth, "move depth for orbit searches")->capture_default_str();
    sub->add_option("--max-chords", max_chords, "chord cap during orbit searches (default n+3)");
    sub->add_option("--realizability-bound", cfg.realizability_bound, "largest n for exhaustive realizability")
        ->capture_default_str();
    sub->add_option("--max-visited", cfg.max_visited, "orbit search budget")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_flag("--json", json, "one JSON object per line");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"parse", "normalise and canonicalise"},
      {"genus", "surface genus and trace summary"},
      {"bridges", "bridge count"},
      {"realizable", "unsigned and signed realizability"},
      {"project", "parity projection"},
      {"orbit", "bounded move orbit"},
      {"verify", "orbit minima against realizable minima"},
  };
  for (const auto& [name, help] : commands) common(app.add_subcommand(name, help), true);
  CLI::App* gen = app.add_subcommand("gen", "seeded random diagrams in corpus format");
  common(gen, false);
  gen->add_option("--chords", cfg.chords, "chords per diagram")->capture_default_str();
  gen->add_option("--count", cfg.count, "number of diagrams")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gaussknot::cli::kInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("code") > 0) cfg.code = code;
  if (sub->count("--corpus") > 0) cfg.corpus = corpus;
  if (sub->count("--max-chords") > 0) cfg.max_chords = max_chords;
  cfg.output = json ? gaussknot::cli::OutputMode::json : gaussknot::cli::OutputMode::text;
  return gaussknot::cli::run(cfg, std::cout, std::cerr);
}
