#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hypca/compare.hpp"
#include "hypca/render.hpp"
#include "manifest.hpp"

namespace hypca::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream o(p, std::ios::binary);
  if (!o) throw InputError(fmt::format("cannot write {}", p.string()));
  o << text;
}

std::string stamp(int t) { return fmt::format("t{:04d}", t); }

std::string halt_line(const Trace& tr, int budget) {
  if (tr.halted_at) return fmt::format("halted_at {}", *tr.halted_at);
  return fmt::format("no halt within budget {}", budget);
}

std::vector<int> parse_times(const std::string& spec) {
  std::vector<int> out;
  std::istringstream parts(spec);
  for (std::string p; std::getline(parts, p, ',');) {
    if (p.empty()) continue;
    try {
      if (auto dots = p.find(".."); dots != std::string::npos) {
        const int a = std::stoi(p.substr(0, dots)), b = std::stoi(p.substr(dots + 2));
        if (b < a) throw InputError(fmt::format("empty time range '{}'", p));
        for (int t = a; t <= b; ++t) out.push_back(t);
      } else {
        out.push_back(std::stoi(p));
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError(fmt::format("bad time list '{}'", spec));
    }
  }
  for (int t : out)
    if (t < 0) throw InputError("times must be non-negative");
  return out;
}

void print_warnings(const std::vector<std::string>& w, std::ostream& err) {
  for (const auto& s : w) err << "warning: " << s << '\n';
}

int cmd_validate(const std::vector<std::string>& files, const std::string& variant,
                 const std::string& embedded, std::ostream& out) {
  RuleTable table;
  if (!variant.empty()) {
    const OneDAutomaton m = embedded.empty() ? stub_automaton() : parse_oned(read_file(embedded));
    Variant v;
    try {
      v = parse_variant(variant);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    table = RuleTable(build_rules(v, m), "N");
  } else {
    if (files.empty()) throw InputError("validate: give rule files or --variant");
    std::vector<SymbolicRule> rules;
    std::vector<std::string> declared;
    std::optional<std::string> blank;
    for (const auto& f : files) {
      RuleDocument d = parse_rule_document(read_file(f));
      rules.insert(rules.end(), d.rules.begin(), d.rules.end());
      declared.insert(declared.end(), d.declared_states.begin(), d.declared_states.end());
      if (!blank) blank = d.blank;
    }
    if (rules.empty()) throw ParseError(1, "no rules");
    table = RuleTable(rules, blank.value_or("N"), declared);
  }
  const ValidationReport rep = validate(table);
  out << rep.describe(table);
  return rep.conflicts.empty() ? kOk : kSemantic;
}

int cmd_run(const std::string& manifest, int max_steps, int checkpoint_every,
            const std::string& trace_out, bool permissive, std::ostream& out, std::ostream& err) {
  RunManifest m = RunManifest::load(manifest);
  if (max_steps >= 0) {
    if (max_steps < 1) throw InputError("--max-steps must be at least 1");
    m.max_steps = max_steps;
  }
  if (checkpoint_every > 0) m.checkpoint_every = checkpoint_every;
  if (!trace_out.empty()) m.trace_out = trace_out;
  if (permissive) m.matching = Matching::Permissive;
  const Scenario s = Scenario::load(m);
  print_warnings(s.warnings, err);
  const Trace tr = run(s.initial, s.table, m.max_steps, s.run_options());
  const Configuration last = tr.final_configuration();
  out << halt_line(tr, m.max_steps) << '\n';
  out << fmt::format("steps {}  support {}\n", tr.length(), last.support_size());
  if (tr.missing_applied) out << fmt::format("missing rules applied as identity: {}\n", tr.missing_applied);
  if (s.spec) {
    try {
      out << "track " << join(track_of(last, *s.spec)) << '\n';
    } catch (const StructureError& e) {
      out << "track unreadable: " << e.what() << '\n';
    }
  }
  if (m.trace_out) {
    for (const auto& [t, c] : tr.checkpoints) write_file(*m.trace_out / (stamp(t) + ".init"), serialize(c));
    write_file(*m.trace_out / "final.init", serialize(last));
  }
  return kOk;
}

int cmd_compare(const std::string& manifest, int horizon, std::ostream& out, std::ostream& err) {
  const Scenario s = Scenario::load(RunManifest::load(manifest));
  if (!s.spec) throw InputError("compare needs a built variant");
  print_warnings(s.warnings, err);
  RunOptions o = s.run_options();
  o.checkpoint_every = 0;
  const Trace tr = horizon > 0 ? run(s.initial, s.table, horizon, o) : Trace{s.initial, {}, {}, {}, 0};
  const ComparisonReport rep = compare_runs(tr, *s.spec, s.embedded, horizon);
  out << rep.describe() << '\n';
  return rep.ok() ? kOk : kSemantic;
}

int cmd_bisim(const std::string& left, const std::string& right, int horizon, std::ostream& out,
              std::ostream& err) {
  const Scenario a = Scenario::load(RunManifest::load(left));
  const Scenario b = Scenario::load(RunManifest::load(right));
  print_warnings(a.warnings, err);
  print_warnings(b.warnings, err);
  SymbolMap map;
  if (a.spec && b.spec && a.spec->variant == Variant::B12 && b.spec->variant == Variant::C9) {
    map = b_to_c_map(a.embedded);
  } else {
    map = identity_map(a.table.alphabet().names());
  }
  auto go = [&](const Scenario& s) {
    return horizon > 0 ? run(s.initial, s.table, horizon, s.run_options()) : Trace{s.initial, {}, {}, {}, 0};
  };
  const BisimulationReport rep = bisimulate(go(a), go(b), map, horizon);
  out << rep.describe() << '\n';
  return rep.ok() ? kOk : kSemantic;
}

int cmd_render(const std::string& manifest, const std::string& times_spec, const std::string& out_dir,
               const std::string& palette_path, int radius, int size, bool labels, std::ostream& out,
               std::ostream& err) {
  const RunManifest m = RunManifest::load(manifest);
  const std::vector<int> times = parse_times(times_spec);
  if (times.empty()) return kOk;
  const Scenario s = Scenario::load(m);
  print_warnings(s.warnings, err);
  Palette pal = Palette::standard();
  if (!palette_path.empty()) {
    for (const auto& [k, v] : Palette::parse(read_file(palette_path)).fill) pal.fill[k] = v;
  }
  const int horizon = *std::max_element(times.begin(), times.end());
  RunOptions o = s.run_options();
  o.checkpoint_every = 16;
  const Trace tr = horizon > 0 ? run(s.initial, s.table, horizon, o) : Trace{s.initial, {}, {}, {}, 0};
  for (int t : times)
    if (t > tr.length())
      throw InputError(fmt::format("time {} is beyond the trace (halted_at {})", t, tr.length()));
  const fs::path dir = !out_dir.empty() ? fs::path(out_dir) : m.svg_out.value_or(fs::path("."));
  RenderOptions ro;
  ro.radius = radius;
  ro.size = size;
  ro.labels = labels;
  for (int t : times) {
    const fs::path p = dir / (stamp(t) + ".svg");
    write_file(p, render_svg(tr.at(t), pal, ro));
    out << p.string() << '\n';
  }
  return kOk;
}

int cmd_init(const std::string& variant, const std::string& word, int propagation,
             const std::string& embedded, const std::string& output, std::ostream& out,
             std::ostream& err) {
  const OneDAutomaton m = embedded.empty() ? stub_automaton() : parse_oned(read_file(embedded));
  Variant v;
  try {
    v = parse_variant(variant);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const AutomatonSpec spec = build(v, m);
  Preparation p = prepare_initial(spec, split_word(word),
                                  propagation >= 0 ? std::optional<int>(propagation) : std::nullopt);
  print_warnings(p.warnings, err);
  std::string text = fmt::format("# {} word {} after {} propagation steps\n", variant_name(v), word,
                                 p.propagation_steps) +
                     serialize(p.config);
  if (output.empty()) out << text;
  else write_file(output, text);
  return kOk;
}

int cmd_build(const std::string& variant, const std::string& embedded, const std::string& output,
              std::ostream& out) {
  const OneDAutomaton m = embedded.empty() ? stub_automaton() : parse_oned(read_file(embedded));
  Variant v;
  try {
    v = parse_variant(variant);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const AutomatonSpec spec = build(v, m);
  const std::string text = serialize(spec.table);
  if (output.empty()) out << text;
  else write_file(output, text);
  return kOk;
}

void dump_missing(const MissingRuleError& e, std::ostream& err) {
  err << "missing rule at t=" << e.time() << " cell " << e.cell().str() << '\n';
  const auto nb = neighbor_addresses(e.cell());
  err << fmt::format("  current {:<4} ({})\n", e.current(), e.cell().str());
  for (int k = 0; k < 5; ++k) err << fmt::format("  side {}  {:<4} ({})\n", k + 1, e.nbrs()[k], nb[k].str());
  err << fmt::format("  needed: 1 {} {} {} {} {} {} ?\n", e.current(), e.nbrs()[0], e.nbrs()[1],
                     e.nbrs()[2], e.nbrs()[3], e.nbrs()[4]);
  err << fmt::format("  steps completed: {}\n", e.partial.length());
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation-invariant cellular automata on the pentagrid"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string variant, embedded, output, manifest, manifest2, trace_out, times, out_dir, palette,
      word;
  int max_steps = -1, checkpoint_every = 0, horizon = 100, radius = 6, size = 800, propagation = -1;
  bool permissive = false, labels = false;

  auto* v = app.add_subcommand("validate", "Check a rule table for rotation conflicts");
  v->add_option("rules", files, "rule files (taken together)");
  v->add_option("--variant", variant, "validate a built automaton instead (A13, B12, C9)");
  v->add_option("--embedded", embedded, "1D automaton file");

  auto* r = app.add_subcommand("run", "Run a manifest");
  r->add_option("manifest", manifest)->required();
  r->add_option("--max-steps", max_steps);
  r->add_option("--checkpoint-every", checkpoint_every);
  r->add_option("--trace-out", trace_out);
  r->add_flag("--permissive", permissive, "keep the state of cells without a rule");

  auto* c = app.add_subcommand("compare", "Compare the track with a direct 1D run");
  c->add_option("manifest", manifest)->required();
  c->add_option("--horizon", horizon);

  int bisim_horizon = 200;
  auto* b = app.add_subcommand("bisim", "Check two runs step by step up to renaming");
  b->add_option("left", manifest)->required();
  b->add_option("right", manifest2)->required();
  b->add_option("--horizon", bisim_horizon);

  auto* d = app.add_subcommand("render", "Write one SVG per requested time");
  d->add_option("manifest", manifest)->required();
  d->add_option("--times", times, "e.g. 0..7 or 0,4,9");
  d->add_option("--out", out_dir);
  d->add_option("--palette", palette, "state=#rrggbb lines");
  d->add_option("--radius", radius);
  d->add_option("--size", size);
  d->add_flag("--labels", labels);

  auto* i = app.add_subcommand("init", "Grow a ray and write a word on it");
  i->add_option("--variant", variant)->required();
  i->add_option("--word", word)->required();
  i->add_option("--propagation", propagation);
  i->add_option("--embedded", embedded);
  i->add_option("-o,--output", output);

  auto* bl = app.add_subcommand("build", "Print the rule table of a built automaton");
  bl->add_option("--variant", variant)->required();
  bl->add_option("--embedded", embedded);
  bl->add_option("-o,--output", output);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*v) return cmd_validate(files, variant, embedded, out);
    if (*r) return cmd_run(manifest, max_steps, checkpoint_every, trace_out, permissive, out, err);
    if (*c) return cmd_compare(manifest, horizon, out, err);
    if (*b) return cmd_bisim(manifest, manifest2, bisim_horizon, out, err);
    if (*d) return cmd_render(manifest, times, out_dir, palette, radius, size, labels, out, err);
    if (*i) return cmd_init(variant, word, propagation, embedded, output, out, err);
    if (*bl) return cmd_build(variant, embedded, output, out);
  } catch (const MissingRuleError& e) {
    dump_missing(e, err);
    return kMissingRule;
  } catch (const BuildError& e) {
    err << "error: " << e.what() << '\n' << e.detail();
    return kSemantic;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace hypca::cli
