#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cdgs/mode.hpp"

namespace cdgs {

enum class SymbolKind : unsigned char { nonterminal, terminal };

/// A grammar symbol. Comparison across grammars is by name and kind.
struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::nonterminal;

  bool is_nonterminal() const { return kind == SymbolKind::nonterminal; }
  auto operator<=>(const Symbol&) const = default;
};

inline Symbol nt(std::string name) { return {std::move(name), SymbolKind::nonterminal}; }
inline Symbol term(std::string name) { return {std::move(name), SymbolKind::terminal}; }

struct SymbolHash {
  std::size_t operator()(const Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.name) * 2 + static_cast<std::size_t>(s.kind);
  }
};

using SententialForm = std::vector<Symbol>;

/// Context-free rule lhs -> rhs; an empty rhs is the erasing rule lhs -> λ.
struct Rule {
  std::string lhs;
  std::vector<Symbol> rhs;

  bool erasing() const { return rhs.empty(); }
  auto operator<=>(const Rule&) const = default;
};

using RuleSet = std::vector<Rule>;

/// Builds a rule from whitespace-free symbol names, classifying each rhs
/// name by membership in `nonterminals`.
Rule make_rule(const std::string& lhs, const std::vector<std::string>& rhs,
               const std::set<std::string>& nonterminals);

struct CdSystem {
  std::string name = "cdgs";
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::string axiom;
  std::vector<RuleSet> components;
  bool lambda_free = true;
  /// Uniform mode the system is meant to run in, when declared.
  std::optional<Mode> mode;

  bool operator==(const CdSystem&) const = default;
};

struct HcdComponent {
  RuleSet rules;
  Mode mode = Mode::star();

  bool operator==(const HcdComponent&) const = default;
};

struct HcdSystem {
  std::string name = "hcdgs";
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::string axiom;
  std::vector<HcdComponent> components;
  bool lambda_free = true;

  bool operator==(const HcdSystem&) const = default;
};

/// Per-label nonterminal counts (the function f of the separation form).
/// Zero counts are not stored.
using NsfCounts = std::map<std::string, std::map<std::string, int>>;

struct ProgrammedRule {
  std::string label;
  Rule rule;
  std::vector<std::string> success;
  std::vector<std::string> failure;

  bool operator==(const ProgrammedRule&) const = default;
};

struct ProgrammedGrammar {
  std::string name = "programmed";
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::string axiom;
  std::vector<ProgrammedRule> rules;
  bool lambda_free = true;
  std::optional<NsfCounts> nsf_counts;

  const ProgrammedRule* find(const std::string& label) const;
  bool operator==(const ProgrammedGrammar&) const = default;
};

using AnyGrammar = std::variant<CdSystem, HcdSystem, ProgrammedGrammar>;

/// Lifts a CD system to the hybrid form with every component in mode `f`.
HcdSystem to_hcd(const CdSystem& g, const Mode& f);

struct Violation {
  std::string code;
  std::string message;

  bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate(const CdSystem& g);
ValidationReport validate(const HcdSystem& g);
ValidationReport validate(const ProgrammedGrammar& g);
ValidationReport validate(const AnyGrammar& g);

/// Throws std::invalid_argument listing the violations when `report` is not empty.
void require_valid(const ValidationReport& report, const std::string& what);

/// Symbol names must match [A-Za-z0-9_'<>,()-]+.
bool is_valid_symbol_name(const std::string& name);

/// |form|_A for each A in `over`; terminals are ignored.
std::map<std::string, int> parikh(const SententialForm& form, const std::vector<std::string>& over);

/// Number of nonterminal occurrences in `form`.
std::size_t nonterminal_count(const SententialForm& form);

bool has_erasing_rule(const CdSystem& g);
bool has_erasing_rule(const HcdSystem& g);
bool has_erasing_rule(const ProgrammedGrammar& g);

}  // namespace cdgs
