#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/automata.hpp"
#include "hypca/configuration.hpp"
#include "hypca/kernels.hpp"
#include "hypca/oned.hpp"
#include "hypca/pentagrid.hpp"
#include "hypca/rules.hpp"

namespace hypca {

enum class Matching { Strict, Permissive };

struct StepOptions {
  Matching matching = Matching::Strict;
  kernels::Isa isa = kernels::best_isa();
};

struct CellChange {
  CellAddress cell;
  std::string before, after;
};

/// Initial configuration plus one diff per step.
struct Trace {
  Configuration initial;
  std::vector<std::vector<CellChange>> steps;
  std::optional<int> halted_at;  // first t >= 1 with config(t) == config(t-1)
  std::map<int, Configuration> checkpoints;
  std::size_t missing_applied = 0;  // permissive mode: cells kept unchanged for lack of a rule

  int length() const { return static_cast<int>(steps.size()); }
  /// Replays the diffs up to time t (t <= length()).
  Configuration at(int t) const;
  Configuration final_configuration() const { return at(length()); }
};

class MissingRuleError : public std::runtime_error {
 public:
  MissingRuleError(CellAddress cell, int time, std::string current, std::array<std::string, 5> nbrs);
  const CellAddress& cell() const { return cell_; }
  int time() const { return time_; }
  const std::string& current() const { return current_; }
  const std::array<std::string, 5>& nbrs() const { return nbrs_; }
  /// Steps completed before the failure (filled by `run`).
  Trace partial;

 private:
  CellAddress cell_;
  int time_;
  std::string current_;
  std::array<std::string, 5> nbrs_;
};

class UnknownStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Support and its one-ring; resolves the cells it needs in `region`.
std::set<CellAddress> active_set(const Configuration& c, RegionGraph& region);

/// One synchronous step at time `time` (reported in errors).
Configuration step(const Configuration& c, const RuleTable& table, RegionGraph& region,
                   const StepOptions& opt = {}, int time = 0, std::size_t* missing = nullptr);
Configuration step(const Configuration& c, const AutomatonSpec& spec, RegionGraph& region,
                   const StepOptions& opt = {}, int time = 0);

struct RunOptions {
  Matching matching = Matching::Strict;
  kernels::Isa isa = kernels::best_isa();
  int checkpoint_every = 0;  // 0: none
};

Trace run(const Configuration& c0, const RuleTable& table, int max_steps, const RunOptions& opt = {});
Trace run(const Configuration& c0, const AutomatonSpec& spec, int max_steps,
          const RunOptions& opt = {});

bool equal(const Configuration& a, const Configuration& b);

/// Reads the ray from the origin. The halt marker shows up as the 1D marker
/// H; a ray tip at the front is not part of the word.
Word track_of(const Configuration& c, const AutomatonSpec& spec);

struct Preparation {
  Configuration config;
  int propagation_steps = 0;
  std::vector<std::string> warnings;
};

/// Grows the ray from fig1_configuration() for
/// `propagation_steps` steps (default 2 * word length), then writes `word`
/// onto its first cells.
Preparation prepare_initial(const AutomatonSpec& spec, const Word& word,
                            std::optional<int> propagation_steps = std::nullopt);

}  // namespace hypca
