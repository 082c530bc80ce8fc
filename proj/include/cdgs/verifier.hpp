#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cdgs/engine.hpp"
#include "cdgs/grammar.hpp"
#include "cdgs/words.hpp"

namespace cdgs {

// ---- reference languages ----------------------------------------------------

enum class ReferenceKind {
  finite,    // an explicit word set
  anbn,      // { a^n b^n | n >= 1 }
  lk,        // { a1^n a2^n ... a(k+1)^n | n >= 1 }
  sm,        // { b (a^i b)^(2m) | i >= 1 }
  anbnambm,  // { a^n b^n a^m b^m | n, m >= 1 }
};

struct ReferenceLanguage {
  ReferenceKind kind = ReferenceKind::finite;
  int parameter = 0;
  WordSet words;  // finite only

  static ReferenceLanguage finite(WordSet words);
  static ReferenceLanguage anbn();
  static ReferenceLanguage lk(int k);
  static ReferenceLanguage sm(int m);
  static ReferenceLanguage anbnambm();
};

/// All words of length <= max_len, by closed-form generation.
BoundedLanguage expand(const ReferenceLanguage& ref, std::size_t max_len);

/// Membership by direct inspection of the word; shares no code with expand.
bool reference_contains(const ReferenceLanguage& ref, const Word& w);

// ---- bounded equivalence ----------------------------------------------------

struct EqualityReport {
  bool equal = true;
  std::vector<Word> missing;  // in the expected language only
  std::vector<Word> extra;    // in the actual language only
  std::map<Word, DerivationTrace, LengthLexLess> witnesses;

  /// `MISSING <word>` / `EXTRA <word>` lines, missing first, each length-lex.
  std::vector<std::string> lines() const;
};

/// λ-normalized comparison of two languages computed under the same
/// max_word_len; throws std::invalid_argument otherwise.
EqualityReport bounded_equal(const BoundedLanguage& expected, const BoundedLanguage& actual);

// ---- index certification ----------------------------------------------------

struct IndexCounterexample {
  Word word;
  std::size_t index = 0;
  DerivationTrace trace;
};

struct CertificationReport {
  bool pass = true;
  std::size_t bound = 0;
  std::size_t words_checked = 0;
  bool truncated = false;
  std::vector<IndexCounterexample> counterexamples;

  /// One `VIOLATION index-bound <word> index=<n>` line per counterexample.
  std::vector<std::string> lines() const;
};

/// Checks ind(w, G) <= bound for every word found within bounds. A pass is
/// evidence at the explored scale only.
CertificationReport certify_index_bound(const AnyGrammar& g, std::size_t bound, const Bounds& bounds);
CertificationReport certify_index_bound(const BoundedLanguage& lang, std::size_t bound);

// ---- nonterminal separation form -------------------------------------------

struct NsfOptions {
  std::size_t depth = 256;        // derivation steps explored
  std::size_t max_form_len = 16;  // longer forms are not explored
};

enum class NsfProperty { start_production = 1, uniform_counts = 2, separation = 3 };

std::string to_string(NsfProperty p);

struct NsfViolation {
  NsfProperty item = NsfProperty::start_production;
  std::string witness;
};

struct NsfReport {
  std::vector<NsfViolation> violations;
  NsfCounts inferred;  // label -> nonterminal counts at every explored application
  bool inconclusive = false;
  std::size_t configurations = 0;

  bool holds() const { return violations.empty(); }
  bool holds(NsfProperty p) const;
  std::vector<std::string> lines() const;
};

/// Bounded check of the three separation-form properties, exploring
/// configurations from (axiom, r) for every label r.
NsfReport nsf_check(const ProgrammedGrammar& g, const NsfOptions& options = {});
inline NsfReport nsf_check(const ProgrammedGrammar& g, std::size_t depth) {
  return nsf_check(g, NsfOptions{depth, NsfOptions{}.max_form_len});
}

/// Copy of `g` with nsf_counts set to the inferred function.
ProgrammedGrammar with_inferred_counts(const ProgrammedGrammar& g, const NsfReport& report);

// ---- component step discipline ---------------------------------------------

struct StepDisciplineReport {
  bool ok = true;
  std::size_t forms_checked = 0;
  std::size_t activations_checked = 0;
  std::vector<std::string> violations;
};

/// For every form reachable in `g` within bounds and every component, the
/// maximal derivations of that component have length exactly `steps` when
/// the component is applicable (and 0 otherwise).
StepDisciplineReport check_step_discipline(const HcdSystem& g, std::size_t steps, const Bounds& bounds);

}  // namespace cdgs
