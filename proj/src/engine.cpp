#include "hypca/engine.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace hypca {

Configuration Trace::at(int t) const {
  if (t < 0 || t > length()) throw std::out_of_range(fmt::format("time {} outside trace", t));
  auto cp = checkpoints.upper_bound(t);
  int from = 0;
  Configuration c = initial;
  if (cp != checkpoints.begin()) {
    --cp;
    from = cp->first;
    c = cp->second;
  }
  for (int s = from; s < t; ++s)
    for (const auto& ch : steps[static_cast<std::size_t>(s)]) c.set(ch.cell, ch.after);
  return c;
}

MissingRuleError::MissingRuleError(CellAddress cell, int time, std::string current,
                                   std::array<std::string, 5> nbrs)
    : std::runtime_error(fmt::format("t={}: no rule for {} at {} with neighbours ({} {} {} {} {})",
                                     time, current, cell.str(), nbrs[0], nbrs[1], nbrs[2], nbrs[3],
                                     nbrs[4])),
      cell_(std::move(cell)),
      time_(time),
      current_(std::move(current)),
      nbrs_(std::move(nbrs)) {}

namespace {

std::vector<CellId> active_ids(const Configuration& c, RegionGraph& region) {
  std::vector<CellId> ids;
  for (const auto& [a, s] : c.cells()) {
    const CellId id = region.resolve(a);
    ids.push_back(id);
    const auto nb = region.cell(id).neighbors;
    for (CellId n : nb) {
      region.resolve(n);
      ids.push_back(n);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

std::set<CellAddress> active_set(const Configuration& c, RegionGraph& region) {
  std::set<CellAddress> out;
  for (CellId id : active_ids(c, region)) out.insert(region.cell(id).address);
  return out;
}

Configuration step(const Configuration& c, const RuleTable& table, RegionGraph& region,
                   const StepOptions& opt, int time, std::size_t* missing) {
  const Alphabet& abc = table.alphabet();
  if (c.blank() != abc.blank_name())
    throw UnknownStateError(fmt::format("configuration blank '{}' differs from table blank '{}'",
                                        c.blank(), abc.blank_name()));
  const std::vector<CellId> ids = active_ids(c, region);
  const std::size_t n = ids.size();

  std::vector<std::uint8_t> states(region.size() + 4, abc.blank());
  for (const auto& [a, s] : c.cells()) {
    auto id = abc.find(s);
    if (!id) throw UnknownStateError(fmt::format("state '{}' at {} is not in the table", s, a.str()));
    states[static_cast<std::size_t>(region.find(a))] = *id;
  }

  std::vector<std::int32_t> nbr(5 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = region.cell(ids[i]);
    for (std::size_t k = 0; k < 5; ++k) nbr[k * n + i] = r.neighbors[k];
  }
  std::vector<std::uint8_t> next(n);
  if (table.has_dense()) {
    kernels::LookupBatch b;
    b.states = states.data();
    b.cells = ids.data();
    b.nbr = nbr.data();
    b.n = n;
    b.lut = table.dense().data();
    b.radix = static_cast<std::uint32_t>(abc.size());
    b.out = next.data();
    kernels::next_states(b, opt.isa);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      Neighborhood nb;
      for (std::size_t k = 0; k < 5; ++k) nb[k] = states[static_cast<std::size_t>(nbr[k * n + i])];
      next[i] = table.lookup(states[static_cast<std::size_t>(ids[i])], nb).value_or(kNoState);
    }
  }

  Configuration out(c.blank());
  const CellAddress* first_missing = nullptr;
  std::size_t first_i = 0, count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const CellRecord& r = region.cell(ids[i]);
    StateId s = next[i];
    if (s == kNoState) {
      ++count;
      if (!first_missing || r.address < *first_missing) {
        first_missing = &r.address;
        first_i = i;
      }
      s = states[static_cast<std::size_t>(ids[i])];
    }
    if (s != abc.blank()) out.set(r.address, abc.name(s));
  }
  if (first_missing && opt.matching == Matching::Strict) {
    std::array<std::string, 5> nb;
    for (std::size_t k = 0; k < 5; ++k)
      nb[k] = abc.name(states[static_cast<std::size_t>(nbr[k * n + first_i])]);
    throw MissingRuleError(*first_missing, time,
                           abc.name(states[static_cast<std::size_t>(ids[first_i])]), nb);
  }
  if (missing) *missing += count;
  return out;
}

Configuration step(const Configuration& c, const AutomatonSpec& spec, RegionGraph& region,
                   const StepOptions& opt, int time) {
  return step(c, spec.table, region, opt, time);
}

Trace run(const Configuration& c0, const RuleTable& table, int max_steps, const RunOptions& opt) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  Trace tr;
  tr.initial = c0;
  if (opt.checkpoint_every > 0) tr.checkpoints[0] = c0;
  RegionGraph region;
  Configuration cur = c0;
  const StepOptions so{opt.matching, opt.isa};
  for (int t = 1; t <= max_steps; ++t) {
    Configuration nxt;
    try {
      nxt = step(cur, table, region, so, t - 1, &tr.missing_applied);
    } catch (MissingRuleError& e) {
      e.partial = std::move(tr);
      throw;
    }
    std::vector<CellChange> diff;
    auto ia = cur.cells().begin(), ea = cur.cells().end();
    auto ib = nxt.cells().begin(), eb = nxt.cells().end();
    while (ia != ea || ib != eb) {
      if (ib == eb || (ia != ea && ia->first < ib->first)) {
        diff.push_back({ia->first, ia->second, cur.blank()});
        ++ia;
      } else if (ia == ea || ib->first < ia->first) {
        diff.push_back({ib->first, cur.blank(), ib->second});
        ++ib;
      } else {
        if (ia->second != ib->second) diff.push_back({ia->first, ia->second, ib->second});
        ++ia;
        ++ib;
      }
    }
    const bool fixed = diff.empty();
    tr.steps.push_back(std::move(diff));
    cur = std::move(nxt);
    if (opt.checkpoint_every > 0 && t % opt.checkpoint_every == 0) tr.checkpoints[t] = cur;
    if (fixed) {
      tr.halted_at = t;
      break;
    }
  }
  return tr;
}

Trace run(const Configuration& c0, const AutomatonSpec& spec, int max_steps, const RunOptions& opt) {
  return run(c0, spec.table, max_steps, opt);
}

bool equal(const Configuration& a, const Configuration& b) { return a == b; }

Word track_of(const Configuration& c, const AutomatonSpec& spec) {
  const std::set<std::string> letters(spec.embedded.alphabet.begin(), spec.embedded.alphabet.end());
  const std::string& blank = c.blank();
  Word raw;
  int blanks = 0;
  for (std::size_t k = 0; blanks < 2; ++k) {
    const std::string& s = c.at(ray_cell(k));
    blanks = s == blank ? blanks + 1 : 0;
    raw.push_back(s);
  }
  while (!raw.empty() && raw.back() == blank) raw.pop_back();
  if (!raw.empty() && raw.back() == spec.ray_tip) raw.pop_back();

  Word w;
  w.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const std::string& s = raw[k];
    if (letters.count(s)) {
      w.push_back(s);
    } else if (s == spec.halt_symbol) {
      w.emplace_back(OneDAutomaton::kHaltMarker);
    } else {
      throw StructureError(fmt::format("ray cell {} ({}) holds '{}'", k, ray_cell(k).str(), s));
    }
  }
  return w;
}

namespace {
constexpr std::size_t kOriginGuard = 3;
}

Preparation prepare_initial(const AutomatonSpec& spec, const Word& word,
                            std::optional<int> propagation_steps) {
  Preparation p;
  const OneDAutomaton& m = spec.embedded;
  std::size_t lead = 0;
  while (lead < word.size() && word[lead] == m.blank) ++lead;
  // the support cell at the origin touches ray cells 0 and 2
  if (lead < kOriginGuard && lead < word.size())
    p.warnings.push_back(fmt::format(
        "the word starts with {} blank(s); {} are needed at the origin", lead, kOriginGuard));
  for (const auto& s : word)
    if (std::find(m.alphabet.begin(), m.alphabet.end(), s) == m.alphabet.end())
      throw std::invalid_argument(fmt::format("'{}' is not a letter of the embedded automaton", s));

  p.propagation_steps = propagation_steps.value_or(2 * static_cast<int>(word.size()));
  Configuration c = fig1_configuration(m.blank, spec.ray_seed, spec.table.alphabet().blank_name());
  RegionGraph region;
  for (int t = 0; t < p.propagation_steps; ++t) c = step(c, spec.table, region, {}, t);
  for (std::size_t k = 0; k < word.size(); ++k) {
    const CellAddress a = ray_cell(k);
    if (c.at(a) != m.blank)
      throw std::invalid_argument(fmt::format(
          "ray cell {} is '{}' after {} propagation steps; the word is too long for the ray", k,
          c.at(a), p.propagation_steps));
    c.set(a, word[k]);
  }
  p.config = std::move(c);
  return p;
}

}  // namespace hypca
