#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdgs/grammar.hpp"
#include "cdgs/mode.hpp"
#include "cdgs/words.hpp"

namespace cdgs {

/// Exploration limits. Forms longer than `max_form_len` are dropped; for
/// grammars without erasing rules this loses nothing as long as
/// max_form_len >= max_word_len, otherwise the result is flagged truncated.
/// `max_inner_steps` caps the number of steps of a single component
/// activation (or of a programmed derivation).
struct Bounds {
  std::size_t max_word_len = 8;
  std::size_t max_form_len = 8;
  std::optional<std::size_t> max_inner_steps;

  /// max_form_len defaults to max_word_len.
  static Bounds words(std::size_t max_word_len, std::optional<std::size_t> max_form_len = std::nullopt,
                      std::optional<std::size_t> max_inner_steps = std::nullopt);
  /// Throws std::invalid_argument unless 0 < max_word_len <= max_form_len.
  void check() const;

  bool operator==(const Bounds&) const = default;
};

/// One rewriting step of a derivation. For CD/HCD systems `component` is
/// the zero-based component index and `segment_end` marks the last step of
/// a component activation; for programmed grammars `label` is the label
/// applied and `appearance_check` marks a failure-field step, which leaves
/// the form unchanged.
struct TraceStep {
  std::size_t component = 0;
  std::string label;
  bool appearance_check = false;
  bool segment_end = false;
  SententialForm form;

  bool operator==(const TraceStep&) const = default;
};

struct DerivationTrace {
  SententialForm start;
  std::vector<TraceStep> steps;

  const SententialForm& final_form() const { return steps.empty() ? start : steps.back().form; }
  bool operator==(const DerivationTrace&) const = default;
};

/// A minimal-index derivation recorded for an emitted word.
struct Witness {
  DerivationTrace trace;
  std::size_t index = 0;
};

struct BoundedLanguage {
  WordSet words;
  Bounds bounds;
  bool lambda_normalized = true;
  bool truncated = false;
  std::map<Word, Witness, LengthLexLess> witnesses;

  bool contains(const Word& w) const { return words.contains(w); }
};

/// Sentential forms reached in an exploration of a CD/HCD system (the
/// forms handed back between component activations), with the language.
struct Exploration {
  BoundedLanguage language;
  std::vector<SententialForm> forms;
};

/// Replaces the `occurrence`-th (1-based) occurrence of rule.lhs by rule.rhs.
/// Throws std::out_of_range when that occurrence does not exist.
SententialForm apply_at(const SententialForm& form, const Rule& rule, std::size_t occurrence);

/// True iff some rule's left-hand side occurs in `form`.
bool applicable(const RuleSet& rules, const SententialForm& form);

/// P(f, m, i, y) with component i given by its rule set.
bool mode_predicate(const Mode& f, std::size_t m, const RuleSet& rules, const SententialForm& y);

struct ModeStepResult {
  std::set<SententialForm> forms;
  bool truncated = false;
};

/// All y with x =>^m y via `rules` and P(f, m, rules, y), within bounds.
ModeStepResult mode_step(const SententialForm& x, const RuleSet& rules, const Mode& f, const Bounds& bounds);

BoundedLanguage enumerate_cd(const CdSystem& g, const Mode& f, const Bounds& bounds);
/// Uses the system's declared mode; throws std::invalid_argument if none.
BoundedLanguage enumerate_cd(const CdSystem& g, const Bounds& bounds);
BoundedLanguage enumerate_hcd(const HcdSystem& g, const Bounds& bounds);
BoundedLanguage enumerate_programmed(const ProgrammedGrammar& g, const Bounds& bounds);
BoundedLanguage enumerate(const AnyGrammar& g, const Bounds& bounds);

Exploration explore_hcd(const HcdSystem& g, const Bounds& bounds);

/// Maximum number of nonterminal occurrences over all forms of the trace.
std::size_t trace_index(const DerivationTrace& trace);

struct WordIndex {
  std::optional<std::size_t> index;  // absent: no derivation found within bounds
  std::optional<DerivationTrace> trace;
  bool truncated = false;
};

WordIndex word_index(const AnyGrammar& g, const Word& word, const Bounds& bounds);

struct TraceCheck {
  bool ok = true;
  std::string error;
};

/// Re-checks a derivation step by step against the rewriting relation and
/// the mode predicate, independently of the enumeration code path.
TraceCheck validate_trace(const HcdSystem& g, const DerivationTrace& trace);
TraceCheck validate_trace(const CdSystem& g, const Mode& f, const DerivationTrace& trace);
TraceCheck validate_trace(const ProgrammedGrammar& g, const DerivationTrace& trace);

/// Word spelled by a terminal form.
Word to_word(const SententialForm& form);
SententialForm to_form(const Word& w);

}  // namespace cdgs
