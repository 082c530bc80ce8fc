#include "compiled.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace cdgs::detail {

SymId SymbolTable::intern(const Symbol& s) {
  auto [it, inserted] = index_.try_emplace(s, static_cast<SymId>(symbols_.size()));
  if (inserted) {
    symbols_.push_back(s);
    nonterminal_.push_back(s.is_nonterminal() ? 1 : 0);
  }
  return it->second;
}

Form SymbolTable::encode(const SententialForm& form) {
  Form out;
  out.reserve(form.size());
  for (const auto& s : form) out.push_back(intern(s));
  return out;
}

SententialForm SymbolTable::decode(const Form& form) const {
  SententialForm out;
  out.reserve(form.size());
  for (auto id : form) out.push_back(symbols_[id]);
  return out;
}

Word SymbolTable::word(const Form& form) const {
  Word w;
  w.reserve(form.size());
  for (auto id : form) w.push_back(symbols_[id].name);
  return w;
}

std::size_t SymbolTable::nonterminals_in(const Form& form) const {
  std::size_t n = 0;
  for (auto id : form) n += static_cast<std::size_t>(nonterminal_[id]);
  return n;
}

bool CompiledComponent::applicable(const Form& form) const {
  for (auto id : form)
    if (id < lhs_mask.size() && lhs_mask[id]) return true;
  return false;
}

CompiledComponent compile_component(SymbolTable& table, const RuleSet& rules, const Mode& mode) {
  CompiledComponent c;
  c.mode = mode;
  for (const auto& r : rules) {
    CompiledRule cr;
    cr.lhs = table.intern(nt(r.lhs));
    cr.rhs = table.encode(r.rhs);
    c.rules.push_back(std::move(cr));
  }
  return c;
}

void finalize(CompiledComponent& c, const SymbolTable& table) {
  c.lhs_mask.assign(table.size(), 0);
  for (const auto& r : c.rules) c.lhs_mask[r.lhs] = 1;
}

bool admissible(const SymbolTable& table, const Form& y, const Limits& limits, bool& truncated) {
  if (table.terminals_in(y) > limits.max_terminals) return false;
  if (y.size() > limits.max_length) {
    if (limits.erasing) truncated = true;
    return false;
  }
  return true;
}

std::vector<Form> StepOutcome::path(std::size_t node) const {
  std::vector<Form> forms;
  for (auto n = static_cast<std::int64_t>(node); n >= 0 && arena[static_cast<std::size_t>(n)].parent >= 0;
       n = arena[static_cast<std::size_t>(n)].parent)
    forms.push_back(arena[static_cast<std::size_t>(n)].form);
  std::reverse(forms.begin(), forms.end());
  return forms;
}

StepOutcome run_mode_step(const SymbolTable& table, const CompiledComponent& c, const Form& x,
                          const Limits& limits) {
  StepOutcome out;
  const Mode& f = c.mode;
  out.arena.push_back({x, -1, table.nonterminals_in(x), 0});

  std::unordered_map<Form, std::size_t, FormHash> accepted;
  auto accept = [&](std::size_t n) {
    auto [it, inserted] = accepted.try_emplace(out.arena[n].form, n);
    if (!inserted && out.arena[n].bottleneck < out.arena[it->second].bottleneck) it->second = n;
  };

  // Layered phase: exact step counts up to the mode's limit, or up to the
  // point from which the predicate ignores m.
  const auto limit = f.step_limit();
  const std::size_t last = limit ? *limit : f.saturation();
  std::vector<std::size_t> layer{0};
  for (std::size_t m = 0;; ++m) {
    for (auto n : layer)
      if (mode_predicate(f, m, c.applicable(out.arena[n].form))) accept(n);
    if (m == last || layer.empty()) break;
    if (limits.max_inner_steps && m + 1 > *limits.max_inner_steps) {
      for (auto n : layer)
        if (c.applicable(out.arena[n].form)) out.truncated = true;
      layer.clear();
      break;
    }
    std::unordered_map<Form, std::size_t, FormHash> next_index;
    std::vector<std::size_t> next;
    for (auto n : layer) {
      const Form current = out.arena[n].form;
      const std::size_t base = out.arena[n].bottleneck;
      for_each_successor(c, current, [&](Form&& y) {
        if (!admissible(table, y, limits, out.truncated)) return;
        const std::size_t b = std::max(base, table.nonterminals_in(y));
        auto it = next_index.find(y);
        if (it == next_index.end()) {
          const std::size_t id = out.arena.size();
          next_index.emplace(y, id);
          out.arena.push_back({std::move(y), static_cast<std::int64_t>(n), b, m + 1});
          next.push_back(id);
        } else if (b < out.arena[it->second].bottleneck) {
          out.arena[it->second].bottleneck = b;
          out.arena[it->second].parent = static_cast<std::int64_t>(n);
        }
      });
    }
    layer = std::move(next);
  }

  // Closure phase for unbounded modes: reachability with minimal
  // bottleneck, since step counts beyond saturation are indistinguishable.
  if (!limit && !layer.empty()) {
    using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::unordered_map<Form, std::size_t, FormHash> best;
    std::unordered_set<Form, FormHash> settled;
    std::size_t seq = 0;
    for (auto n : layer) {
      best[out.arena[n].form] = out.arena[n].bottleneck;
      queue.emplace(out.arena[n].bottleneck, seq++, n);
    }
    while (!queue.empty()) {
      auto [b, unused, n] = queue.top();
      (void)unused;
      queue.pop();
      const Form current = out.arena[n].form;
      if (settled.contains(current) || b > best[current]) continue;
      settled.insert(current);
      const bool can_continue = c.applicable(current);
      const std::size_t depth = out.arena[n].depth;
      if (mode_predicate(f, depth, can_continue)) accept(n);
      if (!can_continue) continue;
      if (limits.max_inner_steps && depth + 1 > *limits.max_inner_steps) {
        out.truncated = true;
        continue;
      }
      for_each_successor(c, current, [&](Form&& y) {
        if (!admissible(table, y, limits, out.truncated)) return;
        if (settled.contains(y)) return;
        const std::size_t nb = std::max(b, table.nonterminals_in(y));
        auto it = best.find(y);
        if (it != best.end() && it->second <= nb) return;
        best[y] = nb;
        const std::size_t id = out.arena.size();
        out.arena.push_back({std::move(y), static_cast<std::int64_t>(n), nb, depth + 1});
        queue.emplace(nb, seq++, id);
      });
    }
  }

  out.accepted.reserve(accepted.size());
  for (const auto& [form, node] : accepted) out.accepted.push_back(node);
  std::sort(out.accepted.begin(), out.accepted.end(),
            [&](std::size_t a, std::size_t b) { return out.arena[a].form < out.arena[b].form; });
  return out;
}

ProgrammedMachine::ProgrammedMachine(const ProgrammedGrammar& g) {
  require_valid(validate(g), "programmed grammar '" + g.name + "'");
  for (const auto& n : g.nonterminals) table_.intern(nt(n));
  for (const auto& t : g.terminals) table_.intern(term(t));
  for (std::size_t i = 0; i < g.rules.size(); ++i) label_index_.emplace(g.rules[i].label, static_cast<int>(i));
  for (const auto& r : g.rules) {
    Label l;
    l.name = r.label;
    l.rule.lhs = table_.intern(nt(r.rule.lhs));
    l.rule.rhs = table_.encode(r.rule.rhs);
    for (const auto& s : r.success) l.success.push_back(label_index_.at(s));
    for (const auto& s : r.failure) l.failure.push_back(label_index_.at(s));
    erasing_ = erasing_ || r.rule.erasing();
    labels_.push_back(std::move(l));
  }
  axiom_ = {table_.intern(nt(g.axiom))};
}

int ProgrammedMachine::label_id(const std::string& name) const {
  auto it = label_index_.find(name);
  if (it == label_index_.end()) throw std::out_of_range("unknown label " + name);
  return it->second;
}

void ProgrammedMachine::successors(const Form& x, int label, std::vector<Move>& out) const {
  const auto& l = labels_[static_cast<std::size_t>(label)];
  bool found = false;
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    if (x[pos] != l.rule.lhs) continue;
    found = true;
    Form y;
    y.reserve(x.size() - 1 + l.rule.rhs.size());
    y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(pos));
    y.insert(y.end(), l.rule.rhs.begin(), l.rule.rhs.end());
    y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(pos) + 1, x.end());
    if (l.success.empty()) {
      out.push_back({y, -1, false});
    } else {
      for (int s : l.success) out.push_back({y, s, false});
    }
  }
  if (!found)
    for (int s : l.failure) out.push_back({x, s, true});
}

}  // namespace cdgs::detail
