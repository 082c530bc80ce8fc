#pragma once

// Interned, id-based representation used by the search code.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdgs/engine.hpp"
#include "cdgs/grammar.hpp"

namespace cdgs::detail {

using SymId = std::uint32_t;
using Form = std::vector<SymId>;

struct FormHash {
  std::size_t operator()(const Form& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto s : f) {
      h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class SymbolTable {
 public:
  SymId intern(const Symbol& s);
  const Symbol& symbol(SymId id) const { return symbols_[id]; }
  bool is_nonterminal(SymId id) const { return nonterminal_[id] != 0; }
  std::size_t size() const { return symbols_.size(); }

  Form encode(const SententialForm& form);
  SententialForm decode(const Form& form) const;
  Word word(const Form& form) const;

  std::size_t nonterminals_in(const Form& form) const;
  std::size_t terminals_in(const Form& form) const { return form.size() - nonterminals_in(form); }
  bool terminal(const Form& form) const { return nonterminals_in(form) == 0; }

 private:
  std::vector<Symbol> symbols_;
  std::vector<char> nonterminal_;
  std::unordered_map<Symbol, SymId, SymbolHash> index_;
};

struct CompiledRule {
  SymId lhs = 0;
  Form rhs;
};

struct CompiledComponent {
  std::vector<CompiledRule> rules;
  std::vector<char> lhs_mask;
  Mode mode = Mode::star();

  bool applicable(const Form& form) const;
};

/// Interns every symbol of `rules` and builds a component over `table`.
/// The lhs mask is sized lazily; call finalize() once all symbols exist.
CompiledComponent compile_component(SymbolTable& table, const RuleSet& rules, const Mode& mode);
void finalize(CompiledComponent& c, const SymbolTable& table);

struct Limits {
  std::size_t max_terminals = 0;
  std::size_t max_length = 0;
  std::optional<std::size_t> max_inner_steps;
  bool erasing = false;

  static Limits from(const Bounds& b, bool erasing) {
    return {b.max_word_len, b.max_form_len, b.max_inner_steps, erasing};
  }
};

/// Length and terminal-count pruning. Sets `truncated` when a form is
/// dropped that could still have shrunk (erasing rules present).
bool admissible(const SymbolTable& table, const Form& y, const Limits& limits, bool& truncated);

/// Calls `emit(Form&&)` for every single-step successor of `x` (all rules,
/// all occurrences), without pruning.
template <class Emit>
void for_each_successor(const CompiledComponent& c, const Form& x, Emit&& emit) {
  for (const auto& r : c.rules) {
    for (std::size_t pos = 0; pos < x.size(); ++pos) {
      if (x[pos] != r.lhs) continue;
      Form y;
      y.reserve(x.size() - 1 + r.rhs.size());
      y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(pos));
      y.insert(y.end(), r.rhs.begin(), r.rhs.end());
      y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(pos) + 1, x.end());
      emit(std::move(y));
    }
  }
}

struct StepNode {
  Form form;
  std::int64_t parent = -1;
  std::size_t bottleneck = 0;  // max nonterminal count from the start form to here
  std::size_t depth = 0;
};

struct StepOutcome {
  std::vector<StepNode> arena;
  std::vector<std::size_t> accepted;  // one node per distinct accepted form, sorted by form
  bool truncated = false;

  /// Forms after the start form up to and including `node`.
  std::vector<Form> path(std::size_t node) const;
};

/// One component activation x =>^f y: exhaustive over step counts and
/// occurrence choices, keeping for each y a derivation of minimal index.
StepOutcome run_mode_step(const SymbolTable& table, const CompiledComponent& c, const Form& x,
                          const Limits& limits);

/// Single-step semantics of a programmed grammar over configurations
/// (form, label). Label -1 is the halted configuration reached by a
/// successful application of a rule whose success field is empty.
class ProgrammedMachine {
 public:
  explicit ProgrammedMachine(const ProgrammedGrammar& g);

  struct Move {
    Form form;
    int next_label = -1;
    bool appearance_check = false;
  };

  const SymbolTable& table() const { return table_; }
  std::size_t label_count() const { return labels_.size(); }
  const std::string& label_name(int label) const { return labels_[static_cast<std::size_t>(label)].name; }
  int label_id(const std::string& name) const;
  SymId lhs(int label) const { return labels_[static_cast<std::size_t>(label)].rule.lhs; }
  const Form& axiom() const { return axiom_; }
  bool erasing() const { return erasing_; }

  /// Appends all successors of (x, label) to `out`.
  void successors(const Form& x, int label, std::vector<Move>& out) const;

 private:
  struct Label {
    std::string name;
    CompiledRule rule;
    std::vector<int> success;
    std::vector<int> failure;
  };

  SymbolTable table_;
  std::vector<Label> labels_;
  std::unordered_map<std::string, int> label_index_;
  Form axiom_;
  bool erasing_ = false;
};

}  // namespace cdgs::detail
