#include "hypca/compare.hpp"

#include <fmt/format.h>

namespace hypca {

namespace {

// Replays a trace forward one step at a time.
class Cursor {
 public:
  explicit Cursor(const Trace& t) : trace_(t), config_(t.initial) {}
  const Configuration& config() const { return config_; }
  void advance() {
    if (time_ < trace_.length())
      for (const auto& ch : trace_.steps[static_cast<std::size_t>(time_)]) config_.set(ch.cell, ch.after);
    ++time_;
  }
  bool exhausted() const { return time_ > trace_.length() && !trace_.halted_at; }

 private:
  const Trace& trace_;
  Configuration config_;
  int time_ = 0;
};

}  // namespace

ComparisonReport compare_runs(const Trace& hyper, const AutomatonSpec& spec, const OneDAutomaton& m,
                              int horizon) {
  ComparisonReport rep;
  rep.track_halted_at = hyper.halted_at;
  Cursor cur(hyper);
  Tape tape = Tape::from_word(track_of(hyper.initial, spec), m.blank);
  for (int t = 0; t <= horizon; ++t) {
    if (t > 0) {
      cur.advance();
      if (cur.exhausted()) break;
      if (!rep.tape_halted_at) {
        Tape nxt = step_1d(tape, m);
        if (nxt == tape) rep.tape_halted_at = t;
        tape = std::move(nxt);
      }
    }
    const Word w = track_of(cur.config(), spec);
    const int len = static_cast<int>(w.size());
    const int span = std::max(len, tape.end());
    for (int i = 0; i < span; ++i) {
      const std::string& actual = i < len ? w[static_cast<std::size_t>(i)] : m.blank;
      const std::string& expected = tape.at(i);
      if (actual != expected) {
        rep.first_divergence = ComparisonReport::Divergence{t, i, expected, actual};
        return rep;
      }
    }
    rep.compared_steps = t;
  }
  return rep;
}

std::string ComparisonReport::describe() const {
  std::string s;
  if (first_divergence)
    s = fmt::format("divergence at t={} position {}: expected '{}', track has '{}'",
                    first_divergence->time, first_divergence->position, first_divergence->expected,
                    first_divergence->actual);
  else
    s = fmt::format("no divergence through t={}", compared_steps);
  auto h = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("none"); };
  return s + fmt::format(" (track halted_at {}, tape halted_at {})", h(track_halted_at), h(tape_halted_at));
}

BisimulationReport bisimulate(const Trace& left, const Trace& right, const SymbolMap& left_to_right,
                              int horizon) {
  BisimulationReport rep;
  rep.left_halted_at = left.halted_at;
  rep.right_halted_at = right.halted_at;
  if (left.halted_at && *left.halted_at > horizon) rep.left_halted_at.reset();
  if (right.halted_at && *right.halted_at > horizon) rep.right_halted_at.reset();
  Cursor l(left), r(right);
  for (int t = 0; t <= horizon; ++t) {
    if (t > 0) {
      l.advance();
      r.advance();
      if (l.exhausted() || r.exhausted()) break;
    }
    const Configuration lc = rename_config(l.config(), left_to_right);
    const Configuration& rc = r.config();
    if (lc != rc) {
      auto ia = lc.cells().begin(), ib = rc.cells().begin();
      BisimulationReport::Divergence d;
      d.time = t;
      while (true) {
        const bool ea = ia == lc.cells().end(), eb = ib == rc.cells().end();
        if (!ea && (eb || ia->first < ib->first)) {
          d.cell = ia->first;
          break;
        }
        if (!eb && (ea || ib->first < ia->first)) {
          d.cell = ib->first;
          break;
        }
        if (ia->second != ib->second) {
          d.cell = ia->first;
          break;
        }
        ++ia;
        ++ib;
      }
      d.left = lc.at(d.cell);
      d.right = rc.at(d.cell);
      rep.first_divergence = d;
      return rep;
    }
    rep.compared_steps = t;
  }
  return rep;
}

std::string BisimulationReport::describe() const {
  auto h = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("none"); };
  if (first_divergence)
    return fmt::format("divergence at t={} cell {}: renamed left '{}', right '{}'", first_divergence->time,
                       first_divergence->cell.str(), first_divergence->left, first_divergence->right);
  if (left_halted_at != right_halted_at)
    return fmt::format("halting differs: left {}, right {}", h(left_halted_at), h(right_halted_at));
  return fmt::format("equivalent through t={} (halted_at {})", compared_steps, h(left_halted_at));
}

}  // namespace hypca
