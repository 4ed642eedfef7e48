#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypca {

using StateId = std::uint8_t;
inline constexpr StateId kNoState = 0xFF;

/// Finite set of state names. Ids follow the byte order of the names, so
/// comparing ids compares names.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> names, std::string_view blank);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(StateId id) const { return names_.at(id); }
  std::optional<StateId> find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  StateId id(std::string_view name) const;
  StateId blank() const { return blank_; }
  const std::string& blank_name() const { return names_.at(blank_); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.blank_ == b.blank_;
  }

 private:
  std::vector<std::string> names_;
  StateId blank_ = 0;
};

/// A rule written with state names: `flag current n1 n2 n3 n4 n5 next`.
struct SymbolicRule {
  int flag = 0;
  std::string current;
  std::array<std::string, 5> nbrs;
  std::string next;
  int line = 0;

  friend bool operator==(const SymbolicRule& a, const SymbolicRule& b) {
    return a.flag == b.flag && a.current == b.current && a.nbrs == b.nbrs && a.next == b.next;
  }
};

struct RuleDocument {
  std::vector<SymbolicRule> rules;
  std::vector<std::string> declared_states;  // from `@states`, possibly empty
  std::optional<std::string> blank;          // from `@blank`
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

/// Rule text: one rule per line, `--` starts a comment, optional
/// `@states a b c` and `@blank s` headers.
RuleDocument parse_rule_document(std::string_view text);

using Neighborhood = std::array<StateId, 5>;

/// Least of the five rotations of `n`.
Neighborhood canonical_rotation(const Neighborhood& n);
int canonical_shift(const Neighborhood& n);

struct Rule {
  int flag = 0;
  StateId current = 0;
  Neighborhood nbrs{};
  StateId next = 0;
  int line = 0;
};

class MissingRule : public std::runtime_error {
 public:
  MissingRule(std::string current, std::array<std::string, 5> nbrs);
  const std::string& current() const { return current_; }
  const std::array<std::string, 5>& nbrs() const { return nbrs_; }

 private:
  std::string current_;
  std::array<std::string, 5> nbrs_;
};

/// Rotation-invariant rule table. Lookup goes through the canonical rotation
/// of the neighbourhood; when two rules share a key the first one wins and
/// the pair is reported by `validate`.
class RuleTable {
 public:
  RuleTable() = default;
  /// States are the union of `declared` and every symbol used by the rules.
  RuleTable(const std::vector<SymbolicRule>& rules, std::string_view blank,
            const std::vector<std::string>& declared = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

  std::optional<StateId> lookup(StateId current, const Neighborhood& nbrs) const;
  StateId match(StateId current, const Neighborhood& nbrs) const;  // throws MissingRule
  std::string match(std::string_view current, const std::array<std::string, 5>& nbrs) const;

  /// Dense table indexed by cur*S^5 + n1*S^4 + ... + n5 over every rotation,
  /// kNoState where no rule applies. Empty when the alphabet is too large.
  const std::vector<std::uint8_t>& dense() const { return *dense_; }
  bool has_dense() const { return dense_ && !dense_->empty(); }

  SymbolicRule symbolic(const Rule& r) const;

  static constexpr std::size_t kDenseMaxStates = 16;

 private:
  static std::uint64_t key(StateId current, const Neighborhood& canon);

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::shared_ptr<const std::vector<std::uint8_t>> dense_;
};

RuleTable parse_table(std::string_view text);
std::string serialize(const RuleTable& table);

struct ValidationReport {
  struct Pair {
    Rule first, second;
  };
  std::vector<Pair> conflicts;    // same key, different next state
  std::vector<Pair> duplicates;   // same key, same next state
  bool has_quiescence = false;    // blank with five blank neighbours stays blank
  std::vector<Rule> flag_mismatches;  // flag disagrees with current == next

  bool valid() const { return conflicts.empty() && has_quiescence; }
  std::string describe(const RuleTable& t) const;
};

ValidationReport validate(const RuleTable& table);

std::string format_rule(const RuleTable& t, const Rule& r);

}  // namespace hypca
