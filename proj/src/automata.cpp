#include "hypca/automata.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "hypca/data.hpp"

namespace hypca {

namespace {

const std::set<std::string> kScaffold = {"W0", "W1", "B0"};
constexpr const char* kGeneric = "B";
constexpr const char* kBlank = "N";

std::vector<SymbolicRule> parse_rules(std::string_view text) {
  return parse_rule_document(text).rules;
}

std::array<std::string, 5> canonical_names(const std::array<std::string, 5>& n) {
  std::array<std::string, 5> best = n;
  for (int k = 1; k < 5; ++k) {
    std::array<std::string, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = n[(k + i) % 5];
    if (r < best) best = r;
  }
  return best;
}

std::vector<SymbolicRule> lift_all(const OneDAutomaton& m, const std::vector<std::string>& supports,
                                   const std::string& halt_symbol) {
  auto sub = [&](const std::string& s) {
    return s == OneDAutomaton::kHaltMarker ? halt_symbol : s;
  };
  std::vector<SymbolicRule> out;
  for (const auto& [t, u] : m.rules)
    for (const auto& sp : supports) out.push_back(lift_track_rule(sub(t[0]), sub(t[1]), sub(t[2]), sub(u), sp));
  return out;
}

AutomatonSpec finish(Variant v, const OneDAutomaton& m, std::vector<SymbolicRule> rules) {
  AutomatonSpec spec;
  spec.variant = v;
  spec.embedded = m;
  spec.table = RuleTable(rules, kBlank);
  spec.rules = std::move(rules);
  const bool c9 = v == Variant::C9;
  spec.support = c9 ? "T" : "W";
  spec.ray_seed = c9 ? "0" : "W0";
  spec.ray_tip = c9 ? "A" : "B0";
  spec.halt_symbol = v == Variant::A13 ? "H" : "N";
  spec.from_lattice = {{"W", spec.support}, {"W0", spec.ray_seed}, {"B0", spec.ray_tip}};
  const ValidationReport rep = validate(spec.table);
  if (!rep.conflicts.empty())
    throw BuildError(fmt::format("{}: {} conflicting rule pairs", variant_name(v), rep.conflicts.size()),
                     rep.conflicts, rep.describe(spec.table));
  return spec;
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::A13: return "A13";
    case Variant::B12: return "B12";
    case Variant::C9: return "C9";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "A13" || s == "A") return Variant::A13;
  if (s == "B12" || s == "B") return Variant::B12;
  if (s == "C9" || s == "C") return Variant::C9;
  throw std::invalid_argument(fmt::format("unknown variant '{}'", s));
}

BuildError::BuildError(const std::string& msg, std::vector<ValidationReport::Pair> conflicts,
                       std::string detail)
    : std::runtime_error(msg), conflicts_(std::move(conflicts)), detail_(std::move(detail)) {}

std::set<std::string> AutomatonSpec::scaffold_states() const {
  std::set<std::string> out;
  const std::set<std::string> letters(embedded.alphabet.begin(), embedded.alphabet.end());
  for (const auto& s : table.alphabet().names())
    if (!letters.count(s) && s != table.alphabet().blank_name()) out.insert(s);
  return out;
}

std::vector<SymbolicRule> propagation_rules() { return parse_rules(data::table1()); }

RuleTable propagation_table() { return RuleTable(propagation_rules(), kBlank); }

SymbolicRule lift_track_rule(const std::string& x, const std::string& y, const std::string& z,
                             const std::string& u, const std::string& support) {
  SymbolicRule r;
  r.flag = y == u ? 0 : 1;
  r.current = y;
  r.nbrs = {x, support, z, kBlank, kBlank};
  r.next = u;
  return r;
}

std::vector<SymbolicRule> instantiate_generic(const std::vector<SymbolicRule>& rules,
                                              const OneDAutomaton& m,
                                              const std::set<std::string>& support_states) {
  std::vector<SymbolicRule> out;
  for (const auto& r : rules) {
    auto blank_if_generic = [&](const std::string& s) { return s == kGeneric ? m.blank : s; };
    if (r.current == kGeneric) {
      SymbolicRule q = r;
      q.current = m.blank;
      for (auto& n : q.nbrs) n = blank_if_generic(n);
      q.next = blank_if_generic(q.next);
      out.push_back(std::move(q));
      continue;
    }
    std::vector<int> pos;
    bool near_seed = false;
    for (int k = 0; k < 5; ++k) {
      if (r.nbrs[k] == kGeneric) pos.push_back(k);
      if (kScaffold.count(r.nbrs[k])) near_seed = true;
    }
    const bool wide = pos.size() == 1 && (support_states.count(r.current) ||
                                          (r.current == kBlank && !near_seed));
    const std::vector<std::string> letters = wide ? m.alphabet : std::vector<std::string>{m.blank};
    std::vector<std::size_t> digit(pos.size(), 0);
    while (true) {
      SymbolicRule q = r;
      for (std::size_t i = 0; i < pos.size(); ++i) q.nbrs[pos[i]] = letters[digit[i]];
      q.next = blank_if_generic(q.next);
      out.push_back(std::move(q));
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == letters.size()) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  return out;
}

std::vector<SymbolicRule> rename_rules(const std::vector<SymbolicRule>& rules, const SymbolMap& map) {
  auto f = [&](const std::string& s) {
    auto it = map.find(s);
    return it == map.end() ? s : it->second;
  };
  std::vector<SymbolicRule> out = rules;
  for (auto& r : out) {
    r.current = f(r.current);
    for (auto& n : r.nbrs) n = f(n);
    r.next = f(r.next);
  }
  return out;
}

std::vector<SymbolicRule> dedupe_rules(const std::vector<SymbolicRule>& rules) {
  std::set<std::tuple<std::string, std::array<std::string, 5>, std::string>> seen;
  std::vector<SymbolicRule> out;
  for (const auto& r : rules)
    if (seen.emplace(r.current, canonical_names(r.nbrs), r.next).second) out.push_back(r);
  return out;
}

SymbolicRule cancelled_rule() {
  SymbolicRule r;
  r.flag = 0;
  r.current = "N";
  r.nbrs = {"N", "N", "N", "N", "W1"};
  r.next = "N";
  return r;
}

std::vector<SymbolicRule> build_rules(Variant v, const OneDAutomaton& m) {
  const std::set<std::string> wh = {"W", "H"};
  std::vector<SymbolicRule> a;
  for (auto part : {data::table1(), data::table2(), data::reconstructed()}) {
    auto inst = instantiate_generic(parse_rules(part), m, wh);
    a.insert(a.end(), inst.begin(), inst.end());
  }
  auto lifted = lift_all(m, {"W", "H"}, "H");
  a.insert(a.end(), lifted.begin(), lifted.end());
  if (v == Variant::A13) return dedupe_rules(a);

  std::vector<SymbolicRule> b = rename_rules(a, {{"H", "N"}});
  const SymbolicRule canc = cancelled_rule();
  const auto canc_key = canonical_names(canc.nbrs);
  std::erase_if(b, [&](const SymbolicRule& r) {
    return r.current == canc.current && r.next == canc.next && canonical_names(r.nbrs) == canc_key;
  });
  auto t3 = instantiate_generic(parse_rules(data::table3()), m, {"W"});
  b.insert(b.end(), t3.begin(), t3.end());
  b = dedupe_rules(b);
  if (v == Variant::B12) return b;

  std::vector<SymbolicRule> c = rename_rules(b, {{"W", "T"}, {"W0", "0"}, {"B0", "A"}});
  OneDAutomaton ttt;
  ttt.rules[{"T", "T", "T"}] = "T";
  auto tl = lift_all(ttt, {"T"}, "N");
  c.insert(c.end(), tl.begin(), tl.end());
  // the erasing block is written with T for the support; instantiate it as W
  auto erase = instantiate_generic(rename_rules(parse_rules(data::c9_erase()), {{"T", "W"}}), m, wh);
  erase = rename_rules(erase, {{"W", "T"}});
  c.insert(c.end(), erase.begin(), erase.end());
  return dedupe_rules(c);
}

AutomatonSpec build_A(const OneDAutomaton& m) { return finish(Variant::A13, m, build_rules(Variant::A13, m)); }
AutomatonSpec build_B(const OneDAutomaton& m) { return finish(Variant::B12, m, build_rules(Variant::B12, m)); }
AutomatonSpec build_C(const OneDAutomaton& m) { return finish(Variant::C9, m, build_rules(Variant::C9, m)); }

AutomatonSpec build(Variant v, const OneDAutomaton& m) {
  switch (v) {
    case Variant::A13: return build_A(m);
    case Variant::B12: return build_B(m);
    case Variant::C9: return build_C(m);
  }
  throw std::invalid_argument("variant");
}

const OneDAutomaton& stub_automaton() {
  static const OneDAutomaton m = parse_oned(data::walker());
  return m;
}

Configuration rename_config(const Configuration& c, const SymbolMap& map) {
  auto f = [&](const std::string& s) -> const std::string& {
    auto it = map.find(s);
    if (it == map.end()) throw RenameError(fmt::format("no image for state '{}'", s));
    return it->second;
  };
  auto bit = map.find(c.blank());
  Configuration out(bit == map.end() ? c.blank() : bit->second);
  for (const auto& [a, s] : c.cells()) out.set(a, f(s));
  return out;
}

SymbolMap identity_map(const std::vector<std::string>& symbols) {
  SymbolMap m;
  for (const auto& s : symbols) m[s] = s;
  return m;
}

SymbolMap invert(const SymbolMap& map) {
  SymbolMap inv;
  for (const auto& [k, v] : map)
    if (!inv.emplace(v, k).second)
      throw RenameError(fmt::format("'{}' has two preimages", v));
  return inv;
}

SymbolMap b_to_c_map(const OneDAutomaton& m) {
  SymbolMap map = identity_map(m.alphabet);
  map["N"] = "N";
  map["W1"] = "W1";
  map["W"] = "T";
  map["W0"] = "0";
  map["B0"] = "A";
  return map;
}

CellAddress ray_cell(std::size_t k) {
  switch (k) {
    case 0: return normalize(0, {1});
    case 1: return normalize(0, {1, 0});
    case 2: return normalize(0, {0});
    default: return normalize(4, std::vector<int>(k - 3, 0));
  }
}

Configuration fig1_configuration(const std::string& track, const std::string& seed,
                                 const std::string& blank) {
  Configuration c(blank);
  c.set(normalize(0, {1}), track);
  c.set(normalize(0, {1, 0}), track);
  c.set(normalize(0, {}), seed);
  return c;
}

}  // namespace hypca
