#include "manifest.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace hypca::cli {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot read {}", p.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InputError(fmt::format("manifest: {} must be an integer, got '{}'", key, v));
  }
}

}  // namespace

RunManifest RunManifest::parse(const std::string& text, const std::filesystem::path& base) {
  RunManifest m;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto path = [&](const std::string& v) {
    std::filesystem::path p(v);
    return p.is_absolute() ? p : base / p;
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.resize(c);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(fmt::format("manifest line {}: expected key = value", lineno));
    const std::string key = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (key == "variant") m.variant = v;
    else if (key == "rules") {
      std::istringstream parts(v);
      for (std::string p; std::getline(parts, p, ',');)
        if (!trim(p).empty()) m.rules.push_back(path(trim(p)));
    } else if (key == "embedded") m.embedded = path(v);
    else if (key == "init") m.init = path(v);
    else if (key == "patch") m.patch = path(v);
    else if (key == "remove") m.remove = path(v);
    else if (key == "word") m.word = v;
    else if (key == "propagation") m.propagation = to_int(key, v);
    else if (key == "max_steps") m.max_steps = to_int(key, v);
    else if (key == "checkpoint_every") m.checkpoint_every = to_int(key, v);
    else if (key == "trace_out") m.trace_out = path(v);
    else if (key == "svg_out") m.svg_out = path(v);
    else if (key == "matching") {
      if (v == "strict") m.matching = Matching::Strict;
      else if (v == "permissive") m.matching = Matching::Permissive;
      else throw InputError(fmt::format("manifest line {}: matching is strict or permissive", lineno));
    } else {
      throw InputError(fmt::format("manifest line {}: unknown key '{}'", lineno, key));
    }
  }
  if (m.variant != "raw-table") {
    try {
      parse_variant(m.variant);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else if (m.rules.empty()) {
    throw InputError("manifest: variant raw-table needs rules");
  }
  if (m.max_steps < 1) throw InputError("manifest: max_steps must be at least 1");
  if (!m.init && !m.word) throw InputError("manifest: give init or word");
  if (m.word && m.variant == "raw-table") throw InputError("manifest: word needs a built variant");
  return m;
}

RunManifest RunManifest::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.parent_path());
}

Scenario Scenario::load(const RunManifest& m) {
  Scenario s;
  s.manifest = m;
  s.embedded = m.embedded ? parse_oned(read_file(*m.embedded)) : stub_automaton();
  if (m.variant == "raw-table") {
    std::vector<SymbolicRule> rules;
    std::optional<std::string> blank;
    std::vector<std::string> declared;
    for (const auto& p : m.rules) {
      RuleDocument d = parse_rule_document(read_file(p));
      rules.insert(rules.end(), d.rules.begin(), d.rules.end());
      declared.insert(declared.end(), d.declared_states.begin(), d.declared_states.end());
      if (!blank) blank = d.blank;
    }
    if (rules.empty()) throw ParseError(1, "no rules");
    s.table = RuleTable(rules, blank.value_or("N"), declared);
  } else {
    s.spec = build(parse_variant(m.variant), s.embedded);
    if (m.patch || m.remove) {
      std::vector<SymbolicRule> rules = s.spec->rules;
      auto same_key = [](const SymbolicRule& a, const SymbolicRule& b) {
        if (a.current != b.current) return false;
        for (int k = 0; k < 5; ++k) {
          bool eq = true;
          for (int i = 0; i < 5 && eq; ++i) eq = a.nbrs[(k + i) % 5] == b.nbrs[i];
          if (eq) return true;
        }
        return false;
      };
      if (m.remove)
        for (const auto& r : parse_rule_document(read_file(*m.remove)).rules)
          std::erase_if(rules, [&](const SymbolicRule& x) { return same_key(x, r); });
      if (m.patch)
        for (const auto& r : parse_rule_document(read_file(*m.patch)).rules) {
          std::erase_if(rules, [&](const SymbolicRule& x) { return same_key(x, r); });
          rules.insert(rules.begin(), r);
        }
      s.spec->rules = rules;
      s.spec->table = RuleTable(rules, s.spec->table.alphabet().blank_name());
    }
    s.table = s.spec->table;
  }
  if (m.init) {
    s.initial = parse_configuration(read_file(*m.init));
  } else {
    Preparation p = prepare_initial(*s.spec, split_word(*m.word), m.propagation);
    s.initial = std::move(p.config);
    s.warnings = std::move(p.warnings);
  }
  return s;
}

RunOptions Scenario::run_options() const {
  RunOptions o;
  o.matching = manifest.matching;
  o.checkpoint_every = manifest.checkpoint_every;
  return o;
}

}  // namespace hypca::cli
