#include "cdgs/engine.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "compiled.hpp"

namespace cdgs {

using detail::CompiledComponent;
using detail::Form;
using detail::FormHash;
using detail::Limits;
using detail::SymbolTable;

Bounds Bounds::words(std::size_t max_word_len, std::optional<std::size_t> max_form_len,
                     std::optional<std::size_t> max_inner_steps) {
  Bounds b{max_word_len, max_form_len.value_or(max_word_len), max_inner_steps};
  b.check();
  return b;
}

void Bounds::check() const {
  if (max_word_len == 0) throw std::invalid_argument("max_word_len must be positive");
  if (max_form_len < max_word_len) throw std::invalid_argument("max_form_len must be at least max_word_len");
  if (max_inner_steps && *max_inner_steps == 0) throw std::invalid_argument("max_inner_steps must be positive");
}

Word to_word(const SententialForm& form) {
  Word w;
  w.reserve(form.size());
  for (const auto& s : form) {
    if (s.is_nonterminal()) throw std::invalid_argument("form is not terminal: contains " + s.name);
    w.push_back(s.name);
  }
  return w;
}

SententialForm to_form(const Word& w) {
  SententialForm f;
  f.reserve(w.size());
  for (const auto& s : w) f.push_back(term(s));
  return f;
}

SententialForm apply_at(const SententialForm& form, const Rule& rule, std::size_t occurrence) {
  if (occurrence == 0) throw std::out_of_range("occurrence index is 1-based");
  std::size_t seen = 0;
  for (std::size_t pos = 0; pos < form.size(); ++pos) {
    if (!form[pos].is_nonterminal() || form[pos].name != rule.lhs) continue;
    if (++seen != occurrence) continue;
    SententialForm y(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(pos));
    y.insert(y.end(), rule.rhs.begin(), rule.rhs.end());
    y.insert(y.end(), form.begin() + static_cast<std::ptrdiff_t>(pos) + 1, form.end());
    return y;
  }
  throw std::out_of_range("occurrence " + std::to_string(occurrence) + " of " + rule.lhs + " does not exist");
}

bool applicable(const RuleSet& rules, const SententialForm& form) {
  for (const auto& r : rules)
    for (const auto& s : form)
      if (s.is_nonterminal() && s.name == r.lhs) return true;
  return false;
}

bool mode_predicate(const Mode& f, std::size_t m, const RuleSet& rules, const SententialForm& y) {
  return mode_predicate(f, m, applicable(rules, y));
}

ModeStepResult mode_step(const SententialForm& x, const RuleSet& rules, const Mode& f, const Bounds& bounds) {
  bounds.check();
  SymbolTable table;
  const Form start = table.encode(x);
  auto c = detail::compile_component(table, rules, f);
  detail::finalize(c, table);
  const bool erasing = std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.erasing(); });
  const auto outcome = detail::run_mode_step(table, c, start, Limits::from(bounds, erasing));
  ModeStepResult result;
  result.truncated = outcome.truncated;
  for (auto n : outcome.accepted) result.forms.insert(table.decode(outcome.arena[n].form));
  return result;
}

std::size_t trace_index(const DerivationTrace& trace) {
  std::size_t best = nonterminal_count(trace.start);
  for (const auto& s : trace.steps) best = std::max(best, nonterminal_count(s.form));
  return best;
}

namespace {

void finish(BoundedLanguage& lang) {
  // λ-normalization
  lang.words.erase(Word{});
  lang.witnesses.erase(Word{});
  lang.lambda_normalized = true;
}

// Search over the forms handed back between component activations,
// ordered by the running derivation index so that the first time a form
// is settled its derivation has minimal index.
Exploration explore(const HcdSystem& g, const Bounds& bounds) {
  bounds.check();
  require_valid(validate(g), "HCD system '" + g.name + "'");

  SymbolTable table;
  for (const auto& n : g.nonterminals) table.intern(nt(n));
  for (const auto& t : g.terminals) table.intern(term(t));
  std::vector<CompiledComponent> components;
  for (const auto& c : g.components) components.push_back(detail::compile_component(table, c.rules, c.mode));
  for (auto& c : components) detail::finalize(c, table);
  const Limits limits = Limits::from(bounds, has_erasing_rule(g));

  struct State {
    Form form;
    std::int64_t parent = -1;
    std::size_t component = 0;
    std::vector<Form> segment;
    std::size_t bottleneck = 0;
  };
  std::vector<State> states;
  using Entry = std::tuple<std::size_t, std::size_t>;  // bottleneck, state id (ids grow monotonically)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::unordered_map<Form, std::size_t, FormHash> best;
  std::unordered_set<Form, FormHash> settled;

  Exploration result;
  result.language.bounds = bounds;

  auto make_trace = [&](std::size_t id) {
    std::vector<std::size_t> chain;
    for (auto n = static_cast<std::int64_t>(id); n >= 0; n = states[static_cast<std::size_t>(n)].parent)
      chain.push_back(static_cast<std::size_t>(n));
    std::reverse(chain.begin(), chain.end());
    DerivationTrace trace;
    trace.start = table.decode(states[chain.front()].form);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& s = states[chain[i]];
      for (std::size_t j = 0; j < s.segment.size(); ++j)
        trace.steps.push_back({s.component, {}, false, j + 1 == s.segment.size(), table.decode(s.segment[j])});
    }
    return trace;
  };

  const Form axiom{table.intern(nt(g.axiom))};
  states.push_back({axiom, -1, 0, {}, 1});
  best[axiom] = 1;
  queue.emplace(1, 0);

  while (!queue.empty()) {
    auto [b, id] = queue.top();
    queue.pop();
    const Form current = states[id].form;
    if (settled.contains(current) || b > best[current]) continue;
    settled.insert(current);

    if (table.terminal(current)) {
      if (current.size() <= bounds.max_word_len) {
        const Word w = table.word(current);
        result.language.words.insert(w);
        result.language.witnesses.emplace(w, Witness{make_trace(id), b});
      }
      continue;
    }
    result.forms.push_back(table.decode(current));

    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto outcome = detail::run_mode_step(table, components[i], current, limits);
      result.language.truncated = result.language.truncated || outcome.truncated;
      for (auto n : outcome.accepted) {
        const auto& y = outcome.arena[n].form;
        if (y == current || settled.contains(y)) continue;
        const std::size_t nb = std::max(b, outcome.arena[n].bottleneck);
        auto it = best.find(y);
        if (it != best.end() && it->second <= nb) continue;
        best[y] = nb;
        states.push_back({y, static_cast<std::int64_t>(id), i, outcome.path(n), nb});
        queue.emplace(nb, states.size() - 1);
      }
    }
  }
  finish(result.language);
  return result;
}

BoundedLanguage explore_programmed(const ProgrammedGrammar& g, const Bounds& bounds) {
  bounds.check();
  const detail::ProgrammedMachine machine(g);
  const auto& table = machine.table();
  const Limits limits = Limits::from(bounds, machine.erasing());

  struct Key {
    Form form;
    int label;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return FormHash{}(k.form) * 31 + static_cast<std::size_t>(k.label + 1);
    }
  };
  struct State {
    Key key;
    std::int64_t parent = -1;
    int applied = -1;
    bool appearance_check = false;
    std::size_t bottleneck = 0;
  };
  std::vector<State> states;
  using Entry = std::tuple<std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::unordered_map<Key, std::size_t, KeyHash> best;
  std::unordered_set<Key, KeyHash> settled;

  BoundedLanguage lang;
  lang.bounds = bounds;

  auto make_trace = [&](std::size_t id) {
    std::vector<std::size_t> chain;
    for (auto n = static_cast<std::int64_t>(id); n >= 0; n = states[static_cast<std::size_t>(n)].parent)
      chain.push_back(static_cast<std::size_t>(n));
    std::reverse(chain.begin(), chain.end());
    DerivationTrace trace;
    trace.start = table.decode(states[chain.front()].key.form);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& s = states[chain[i]];
      trace.steps.push_back({0, machine.label_name(s.applied), s.appearance_check, false, table.decode(s.key.form)});
    }
    return trace;
  };

  const std::size_t start_index = table.nonterminals_in(machine.axiom());
  for (int r = 0; r < static_cast<int>(machine.label_count()); ++r) {
    Key k{machine.axiom(), r};
    best[k] = start_index;
    states.push_back({k, -1, -1, false, start_index});
    queue.emplace(start_index, states.size() - 1);
  }

  std::vector<detail::ProgrammedMachine::Move> moves;
  while (!queue.empty()) {
    auto [b, id] = queue.top();
    queue.pop();
    const Key key = states[id].key;
    if (settled.contains(key) || b > best[key]) continue;
    settled.insert(key);

    if (table.terminal(key.form)) {
      const Word w = table.word(key.form);
      if (w.size() <= bounds.max_word_len && !lang.words.contains(w)) {
        lang.words.insert(w);
        lang.witnesses.emplace(w, Witness{make_trace(id), b});
      }
      continue;
    }
    if (key.label < 0) continue;
    if (bounds.max_inner_steps) {
      std::size_t depth = 0;
      for (auto n = states[id].parent; n >= 0; n = states[static_cast<std::size_t>(n)].parent) ++depth;
      if (depth >= *bounds.max_inner_steps) {
        lang.truncated = true;
        continue;
      }
    }

    moves.clear();
    machine.successors(key.form, key.label, moves);
    for (auto& mv : moves) {
      if (!mv.appearance_check && !detail::admissible(table, mv.form, limits, lang.truncated)) continue;
      const std::size_t nb = std::max(b, table.nonterminals_in(mv.form));
      Key next{std::move(mv.form), mv.next_label};
      if (settled.contains(next)) continue;
      auto it = best.find(next);
      if (it != best.end() && it->second <= nb) continue;
      best[next] = nb;
      states.push_back({std::move(next), static_cast<std::int64_t>(id), key.label, mv.appearance_check, nb});
      queue.emplace(nb, states.size() - 1);
    }
  }
  finish(lang);
  return lang;
}

}  // namespace

Exploration explore_hcd(const HcdSystem& g, const Bounds& bounds) { return explore(g, bounds); }

BoundedLanguage enumerate_hcd(const HcdSystem& g, const Bounds& bounds) { return explore(g, bounds).language; }

BoundedLanguage enumerate_cd(const CdSystem& g, const Mode& f, const Bounds& bounds) {
  require_valid(validate(g), "CD system '" + g.name + "'");
  return explore(to_hcd(g, f), bounds).language;
}

BoundedLanguage enumerate_cd(const CdSystem& g, const Bounds& bounds) {
  if (!g.mode) throw std::invalid_argument("CD system '" + g.name + "' declares no mode");
  return enumerate_cd(g, *g.mode, bounds);
}

BoundedLanguage enumerate_programmed(const ProgrammedGrammar& g, const Bounds& bounds) {
  return explore_programmed(g, bounds);
}

BoundedLanguage enumerate(const AnyGrammar& g, const Bounds& bounds) {
  return std::visit(
      [&](const auto& x) -> BoundedLanguage {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CdSystem>)
          return enumerate_cd(x, bounds);
        else if constexpr (std::is_same_v<T, HcdSystem>)
          return enumerate_hcd(x, bounds);
        else
          return enumerate_programmed(x, bounds);
      },
      g);
}

WordIndex word_index(const AnyGrammar& g, const Word& word, const Bounds& bounds) {
  if (word.size() > bounds.max_word_len)
    throw std::invalid_argument("word is longer than max_word_len");
  const auto lang = enumerate(g, bounds);
  WordIndex result;
  result.truncated = lang.truncated;
  auto it = lang.witnesses.find(word);
  if (it != lang.witnesses.end()) {
    result.index = it->second.index;
    result.trace = it->second.trace;
  }
  return result;
}

// ---- trace validation -------------------------------------------------------

namespace {

bool one_step(const SententialForm& x, const RuleSet& rules, const SententialForm& y) {
  for (const auto& r : rules) {
    const auto occurrences = static_cast<std::size_t>(std::count_if(
        x.begin(), x.end(), [&](const Symbol& s) { return s.is_nonterminal() && s.name == r.lhs; }));
    for (std::size_t o = 1; o <= occurrences; ++o)
      if (apply_at(x, r, o) == y) return true;
  }
  return false;
}

TraceCheck fail(std::string why) { return {false, std::move(why)}; }

bool is_terminal(const SententialForm& f) { return nonterminal_count(f) == 0; }

}  // namespace

TraceCheck validate_trace(const HcdSystem& g, const DerivationTrace& trace) {
  if (trace.start != SententialForm{nt(g.axiom)}) return fail("trace does not start at the axiom");
  if (trace.steps.empty()) return fail("empty derivation");
  if (!trace.steps.back().segment_end) return fail("last component activation is not closed");
  SententialForm current = trace.start;
  std::size_t m = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    if (s.component >= g.components.size()) return fail("step " + std::to_string(i + 1) + ": no such component");
    if (m > 0 && trace.steps[i - 1].component != s.component)
      return fail("step " + std::to_string(i + 1) + ": component changes inside an activation");
    const auto& comp = g.components[s.component];
    if (!one_step(current, comp.rules, s.form))
      return fail("step " + std::to_string(i + 1) + ": not a single rewriting step of component " +
                  std::to_string(s.component + 1));
    current = s.form;
    ++m;
    if (s.segment_end) {
      if (!mode_predicate(comp.mode, m, comp.rules, current))
        return fail("step " + std::to_string(i + 1) + ": activation of " + std::to_string(m) + " steps violates mode " +
                    comp.mode.to_string());
      m = 0;
    }
  }
  if (!is_terminal(current)) return fail("derivation does not end in a terminal word");
  return {};
}

TraceCheck validate_trace(const CdSystem& g, const Mode& f, const DerivationTrace& trace) {
  return validate_trace(to_hcd(g, f), trace);
}

TraceCheck validate_trace(const ProgrammedGrammar& g, const DerivationTrace& trace) {
  if (trace.start != SententialForm{nt(g.axiom)}) return fail("trace does not start at the axiom");
  if (trace.steps.empty()) return fail("empty derivation");
  SententialForm current = trace.start;
  const ProgrammedRule* previous = nullptr;
  bool previous_ac = false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const auto* pr = g.find(s.label);
    const std::string at = "step " + std::to_string(i + 1) + " (" + s.label + ")";
    if (!pr) return fail(at + ": unknown label");
    if (previous) {
      const auto& field = previous_ac ? previous->failure : previous->success;
      if (std::find(field.begin(), field.end(), s.label) == field.end())
        return fail(at + ": label not in the " + std::string(previous_ac ? "failure" : "success") + " field of " +
                    previous->label);
    }
    const bool present = applicable(RuleSet{pr->rule}, current);
    if (s.appearance_check) {
      if (present) return fail(at + ": appearance check although " + pr->rule.lhs + " occurs");
      if (s.form != current) return fail(at + ": appearance check changed the form");
    } else if (!one_step(current, RuleSet{pr->rule}, s.form)) {
      return fail(at + ": not an application of the labelled rule");
    }
    current = s.form;
    previous = pr;
    previous_ac = s.appearance_check;
  }
  if (!is_terminal(current)) return fail("derivation does not end in a terminal word");
  return {};
}

}  // namespace cdgs
