#include <algorithm>
#include <unordered_set>

#include "cdgs/verifier.hpp"
#include "compiled.hpp"

namespace cdgs {

std::string to_string(NsfProperty p) {
  switch (p) {
    case NsfProperty::start_production: return "start-production";
    case NsfProperty::uniform_counts: return "uniform-counts";
    case NsfProperty::separation: return "separation";
  }
  return "?";
}

bool NsfReport::holds(NsfProperty p) const {
  return std::none_of(violations.begin(), violations.end(), [&](const NsfViolation& v) { return v.item == p; });
}

std::vector<std::string> NsfReport::lines() const {
  std::vector<std::string> out;
  for (const auto& v : violations) out.push_back("VIOLATION " + to_string(v.item) + " " + v.witness);
  for (const auto& [label, counts] : inferred) {
    std::string line = "COUNTS " + label;
    for (const auto& [symbol, n] : counts) line += " " + symbol + "=" + std::to_string(n);
    out.push_back(line);
  }
  if (inconclusive) out.push_back("INCONCLUSIVE");
  out.push_back(holds() ? "NSF OK" : "NSF FAILED");
  return out;
}

ProgrammedGrammar with_inferred_counts(const ProgrammedGrammar& g, const NsfReport& report) {
  ProgrammedGrammar out = g;
  out.nsf_counts = report.inferred;
  return out;
}

namespace {

constexpr std::size_t kMaxWitnessesPerItem = 8;

std::string text_of(const detail::SymbolTable& table, const detail::Form& f) {
  if (f.empty()) return "#";
  std::string s;
  for (auto id : f) s += (s.empty() ? "" : " ") + table.symbol(id).name;
  return s;
}

}  // namespace

NsfReport nsf_check(const ProgrammedGrammar& g, const NsfOptions& options) {
  using detail::Form;
  const detail::ProgrammedMachine machine(g);
  const auto& table = machine.table();
  NsfReport report;
  std::map<NsfProperty, std::size_t> reported;
  auto violate = [&](NsfProperty p, std::string witness) {
    if (reported[p]++ < kMaxWitnessesPerItem) report.violations.push_back({p, std::move(witness)});
  };

  // 1: a unique start production, the only one mentioning the axiom
  std::vector<std::string> starts;
  for (const auto& r : g.rules)
    if (r.rule.lhs == g.axiom) starts.push_back(r.label);
  if (starts.size() != 1) {
    std::string labels;
    for (const auto& l : starts) labels += (labels.empty() ? "" : ",") + l;
    violate(NsfProperty::start_production,
            std::to_string(starts.size()) + " productions rewrite " + g.axiom + (labels.empty() ? "" : ": " + labels));
  }
  for (const auto& r : g.rules) {
    const bool mentions = std::any_of(r.rule.rhs.begin(), r.rule.rhs.end(),
                                      [&](const Symbol& s) { return s.is_nonterminal() && s.name == g.axiom; });
    if (mentions) violate(NsfProperty::start_production, r.label + " has " + g.axiom + " on its right-hand side");
  }

  // 2 and 3 over the explored configurations
  struct Config {
    Form form;
    int label;
    bool operator==(const Config&) const = default;
  };
  struct ConfigHash {
    std::size_t operator()(const Config& c) const noexcept {
      return detail::FormHash{}(c.form) * 31 + static_cast<std::size_t>(c.label + 1);
    }
  };
  std::unordered_set<Config, ConfigHash> visited;
  std::unordered_set<Form, detail::FormHash> checked_forms;
  std::map<int, std::vector<int>> counts;  // label -> parikh vector over table ids

  auto check_separation = [&](const Form& f) {
    if (!checked_forms.insert(f).second) return;
    std::vector<int> seen(table.size(), 0);
    for (auto id : f)
      if (table.is_nonterminal(id) && ++seen[id] == 2) {
        violate(NsfProperty::separation, "[" + text_of(table, f) + "] repeats " + table.symbol(id).name);
        return;
      }
  };

  std::vector<Config> frontier;
  for (int r = 0; r < static_cast<int>(machine.label_count()); ++r) {
    Config c{machine.axiom(), r};
    visited.insert(c);
    frontier.push_back(c);
  }
  check_separation(machine.axiom());

  std::vector<detail::ProgrammedMachine::Move> moves;
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    if (depth >= options.depth) {
      report.inconclusive = true;
      break;
    }
    std::vector<Config> next;
    for (const auto& c : frontier) {
      moves.clear();
      machine.successors(c.form, c.label, moves);
      bool applied = false;
      for (auto& mv : moves) {
        if (!mv.appearance_check) applied = true;
        if (mv.form.size() > options.max_form_len) continue;
        check_separation(mv.form);
        if (mv.next_label < 0 || table.terminal(mv.form)) continue;
        Config n{std::move(mv.form), mv.next_label};
        if (visited.insert(n).second) next.push_back(std::move(n));
      }
      if (applied) {
        std::vector<int> v(table.size(), 0);
        for (auto id : c.form)
          if (table.is_nonterminal(id)) ++v[id];
        auto [it, inserted] = counts.try_emplace(c.label, v);
        if (!inserted && it->second != v)
          violate(NsfProperty::uniform_counts,
                  machine.label_name(c.label) + " applied to [" + text_of(table, c.form) + "]");
      }
    }
    frontier = std::move(next);
  }
  report.configurations = visited.size();

  for (const auto& [label, v] : counts) {
    auto& entry = report.inferred[machine.label_name(label)];
    for (std::size_t id = 0; id < v.size(); ++id)
      if (v[id] > 0) entry[table.symbol(static_cast<detail::SymId>(id)).name] = v[id];
  }
  return report;
}

}  // namespace cdgs
