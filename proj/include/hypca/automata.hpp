#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/configuration.hpp"
#include "hypca/oned.hpp"
#include "hypca/rules.hpp"

namespace hypca {

enum class Variant { A13, B12, C9 };

std::string_view variant_name(Variant v);
/// Accepts `A13`, `B12`, `C9` and the bare letters.
Variant parse_variant(std::string_view s);

class BuildError : public std::runtime_error {
 public:
  BuildError(const std::string& msg, std::vector<ValidationReport::Pair> conflicts = {},
             std::string detail = {});
  const std::vector<ValidationReport::Pair>& conflicts() const { return conflicts_; }
  const std::string& detail() const { return detail_; }

 private:
  std::vector<ValidationReport::Pair> conflicts_;
  std::string detail_;
};

class RenameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SymbolMap = std::map<std::string, std::string>;

/// Automaton on the pentagrid carrying an embedded 1D automaton on its ray.
struct AutomatonSpec {
  Variant variant = Variant::A13;
  OneDAutomaton embedded;
  RuleTable table;
  std::vector<SymbolicRule> rules;  // the rules `table` was built from

  std::string support;       // W, or T for C9
  std::string ray_seed;      // W0, or 0 for C9
  std::string ray_tip;       // B0, or A for C9
  std::string halt_symbol;   // what the 1D halt marker becomes on the track: H or N
  SymbolMap from_lattice;    // W, W0, B0 -> names used by this variant

  std::size_t state_count() const { return table.alphabet().size(); }
  /// States that are neither track letters nor the blank.
  std::set<std::string> scaffold_states() const;
};

/// The propagation rules of table1.rules, with the generic track symbol B.
RuleTable propagation_table();
std::vector<SymbolicRule> propagation_rules();

/// Track rule for the 1D rule xyz -> u: current y, neighbours (x, support, z, N, N).
SymbolicRule lift_track_rule(const std::string& x, const std::string& y, const std::string& z,
                             const std::string& u, const std::string& support);

/// Replaces the generic B of table rules by embedded states. A B cell, and a
/// B produced by a rule, become the embedded blank. A B neighbour ranges over
/// the whole embedded alphabet when it is the only B around a support cell
/// (or around a blank cell away from the ray's seed states); otherwise it is
/// the blank.
std::vector<SymbolicRule> instantiate_generic(const std::vector<SymbolicRule>& rules,
                                              const OneDAutomaton& m,
                                              const std::set<std::string>& support_states);

std::vector<SymbolicRule> rename_rules(const std::vector<SymbolicRule>& rules, const SymbolMap& map);

/// Keeps the first rule of every (current, canonical neighbourhood, next).
std::vector<SymbolicRule> dedupe_rules(const std::vector<SymbolicRule>& rules);

/// The rule of B9 removed because it clashes with the propagation (H read as N).
SymbolicRule cancelled_rule();

AutomatonSpec build_A(const OneDAutomaton& embedded);
AutomatonSpec build_B(const OneDAutomaton& embedded);
AutomatonSpec build_C(const OneDAutomaton& embedded);
AutomatonSpec build(Variant v, const OneDAutomaton& embedded);

/// Same construction, without the final conflict check.
std::vector<SymbolicRule> build_rules(Variant v, const OneDAutomaton& embedded);

/// The stand-in walker automaton shipped with the library.
const OneDAutomaton& stub_automaton();

/// Pointwise renaming; every symbol present (and the blank) must be mapped,
/// identity entries included.
Configuration rename_config(const Configuration& c, const SymbolMap& map);
SymbolMap identity_map(const std::vector<std::string>& symbols);
SymbolMap invert(const SymbolMap& map);
/// Renaming taking B12 states to C9 states.
SymbolMap b_to_c_map(const OneDAutomaton& embedded);

/// The k-th cell of the ray, counted from the origin: the first three lie in
/// sector 0, the rest run down the leftmost branch of sector 4.
CellAddress ray_cell(std::size_t k);

/// Starting configuration: two track cells and the seed of
/// the ray, with `track` written into the track cells.
Configuration fig1_configuration(const std::string& track = "B", const std::string& seed = "W0",
                                 const std::string& blank = "N");

}  // namespace hypca
