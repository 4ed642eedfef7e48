#pragma once

#include <optional>
#include <string>

#include "hypca/automata.hpp"
#include "hypca/engine.hpp"
#include "hypca/oned.hpp"

namespace hypca {

struct ComparisonReport {
  struct Divergence {
    int time = 0;
    int position = 0;
    std::string expected, actual;
  };
  std::optional<Divergence> first_divergence;
  int compared_steps = 0;
  std::optional<int> track_halted_at;  // hyperbolic run
  std::optional<int> tape_halted_at;   // direct 1D run

  bool ok() const { return !first_divergence; }
  std::string describe() const;
};

/// Checks, for t = 0..horizon, that the track read from the trace equals the
/// direct 1D run started from the track at time 0. Once a run has halted its
/// last configuration stands for every later time.
ComparisonReport compare_runs(const Trace& hyper, const AutomatonSpec& spec, const OneDAutomaton& m,
                              int horizon);

struct BisimulationReport {
  struct Divergence {
    int time = 0;
    CellAddress cell;
    std::string left, right;  // renamed left state, right state
  };
  std::optional<Divergence> first_divergence;
  std::optional<int> left_halted_at, right_halted_at;
  int compared_steps = 0;

  bool ok() const { return !first_divergence && left_halted_at == right_halted_at; }
  std::string describe() const;
};

/// Renaming-equivalence of two traces at every t <= horizon.
BisimulationReport bisimulate(const Trace& left, const Trace& right, const SymbolMap& left_to_right,
                              int horizon);

}  // namespace hypca
