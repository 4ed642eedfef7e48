#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/automata.hpp"
#include "hypca/configuration.hpp"
#include "hypca/engine.hpp"
#include "hypca/rules.hpp"

namespace hypca::cli {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& p);

/// Flat `key = value` file; `#` starts a comment.
struct RunManifest {
  std::string variant = "B12";  // A13 | B12 | C9 | raw-table
  std::vector<std::filesystem::path> rules;  // raw-table only
  std::optional<std::filesystem::path> patch;   // rules replacing built rules with the same key
  std::optional<std::filesystem::path> remove;  // rules whose keys are dropped from the built table
  std::optional<std::filesystem::path> embedded;
  std::optional<std::filesystem::path> init;
  std::optional<std::string> word;  // placed on a freshly grown ray instead of `init`
  std::optional<int> propagation;
  int max_steps = 200;
  int checkpoint_every = 0;
  std::optional<std::filesystem::path> trace_out;
  std::optional<std::filesystem::path> svg_out;
  Matching matching = Matching::Strict;

  static RunManifest parse(const std::string& text, const std::filesystem::path& base_dir);
  static RunManifest load(const std::filesystem::path& path);
};

/// Everything a command needs, loaded from a manifest.
struct Scenario {
  RunManifest manifest;
  OneDAutomaton embedded;
  std::optional<AutomatonSpec> spec;  // empty for raw tables
  RuleTable table;
  Configuration initial;
  std::vector<std::string> warnings;

  static Scenario load(const RunManifest& m);
  RunOptions run_options() const;
};

}  // namespace hypca::cli
