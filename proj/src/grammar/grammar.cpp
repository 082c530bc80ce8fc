#include "cdgs/grammar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdgs {

Rule make_rule(const std::string& lhs, const std::vector<std::string>& rhs,
               const std::set<std::string>& nonterminals) {
  Rule r{lhs, {}};
  r.rhs.reserve(rhs.size());
  for (const auto& s : rhs) r.rhs.push_back(nonterminals.contains(s) ? nt(s) : term(s));
  return r;
}

const ProgrammedRule* ProgrammedGrammar::find(const std::string& label) const {
  for (const auto& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

HcdSystem to_hcd(const CdSystem& g, const Mode& f) {
  HcdSystem h;
  h.name = g.name;
  h.nonterminals = g.nonterminals;
  h.terminals = g.terminals;
  h.axiom = g.axiom;
  h.lambda_free = g.lambda_free;
  for (const auto& p : g.components) h.components.push_back({p, f});
  return h;
}

bool is_valid_symbol_name(const std::string& name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '\'' || c == '<' || c == '>' || c == ',' || c == '(' || c == ')' || c == '-';
  });
}

namespace {

class Checker {
 public:
  Checker(const std::vector<std::string>& nonterminals, const std::vector<std::string>& terminals,
          const std::string& axiom, bool lambda_free)
      : lambda_free_(lambda_free) {
    check_alphabet(nonterminals, nonterminals_, "nonterminal");
    check_alphabet(terminals, terminals_, "terminal");
    for (const auto& a : nonterminals_)
      if (terminals_.contains(a))
        add("alphabet-overlap", "symbol '" + a + "' is both nonterminal and terminal");
    if (!nonterminals_.contains(axiom)) add("axiom", "axiom '" + axiom + "' is not a declared nonterminal");
  }

  void check_rule(const Rule& r, const std::string& where) {
    if (!nonterminals_.contains(r.lhs))
      add("lhs", where + ": left-hand side '" + r.lhs + "' is not a nonterminal");
    for (const auto& s : r.rhs) {
      const auto& pool = s.is_nonterminal() ? nonterminals_ : terminals_;
      if (!pool.contains(s.name))
        add("rhs-symbol", where + ": symbol '" + s.name + "' is not a declared " +
                              (s.is_nonterminal() ? "nonterminal" : "terminal"));
    }
    if (lambda_free_ && r.erasing()) add("erasing-rule", "erasing rule in λ-free grammar (" + where + ")");
  }

  bool is_nonterminal(const std::string& s) const { return nonterminals_.contains(s); }

  void add(std::string code, std::string message) { report_.push_back({std::move(code), std::move(message)}); }
  ValidationReport take() { return std::move(report_); }

 private:
  void check_alphabet(const std::vector<std::string>& names, std::set<std::string>& into, const char* kind) {
    for (const auto& n : names) {
      if (n.empty())
        add("empty-name", std::string("empty ") + kind + " name");
      else if (!is_valid_symbol_name(n))
        add("bad-name", std::string(kind) + " name '" + n + "' has characters outside [A-Za-z0-9_'<>,()-]");
      if (!into.insert(n).second) add("duplicate-symbol", std::string(kind) + " '" + n + "' declared twice");
    }
  }

  bool lambda_free_;
  std::set<std::string> nonterminals_;
  std::set<std::string> terminals_;
  ValidationReport report_;
};

std::string component_where(std::size_t i) { return "component " + std::to_string(i + 1); }

}  // namespace

ValidationReport validate(const CdSystem& g) {
  Checker c(g.nonterminals, g.terminals, g.axiom, g.lambda_free);
  if (g.components.empty()) c.add("degree", "degree ≥ 1 required");
  for (std::size_t i = 0; i < g.components.size(); ++i)
    for (const auto& r : g.components[i]) c.check_rule(r, component_where(i));
  return c.take();
}

ValidationReport validate(const HcdSystem& g) {
  Checker c(g.nonterminals, g.terminals, g.axiom, g.lambda_free);
  if (g.components.empty()) c.add("degree", "degree ≥ 1 required");
  for (std::size_t i = 0; i < g.components.size(); ++i)
    for (const auto& r : g.components[i].rules) c.check_rule(r, component_where(i));
  return c.take();
}

ValidationReport validate(const ProgrammedGrammar& g) {
  Checker c(g.nonterminals, g.terminals, g.axiom, g.lambda_free);
  std::set<std::string> labels;
  for (const auto& r : g.rules) {
    if (!is_valid_symbol_name(r.label)) c.add("bad-label", "label '" + r.label + "' is not an identifier");
    if (!labels.insert(r.label).second) c.add("duplicate-label", "label '" + r.label + "' defined twice");
  }
  for (const auto& r : g.rules) {
    c.check_rule(r.rule, "label " + r.label);
    for (const auto* field : {&r.success, &r.failure})
      for (const auto& target : *field)
        if (!labels.contains(target))
          c.add("unknown-label", "label " + r.label + " refers to undefined label '" + target + "'");
  }
  if (g.nsf_counts) {
    for (const auto& [label, counts] : *g.nsf_counts) {
      const auto* pr = g.find(label);
      if (!pr) {
        c.add("nsf-count-label", "counts given for undefined label '" + label + "'");
        continue;
      }
      for (const auto& [symbol, count] : counts) {
        if (!c.is_nonterminal(symbol))
          c.add("nsf-count-symbol", "counts of label " + label + " name non-nonterminal '" + symbol + "'");
        if (count < 0) c.add("nsf-count-negative", "negative count for " + symbol + " at label " + label);
      }
      auto it = counts.find(pr->rule.lhs);
      if (it == counts.end() || it->second < 1)
        c.add("nsf-count-lhs", "count of rewritten symbol " + pr->rule.lhs + " at label " + label + " must be ≥ 1");
    }
  }
  return c.take();
}

ValidationReport validate(const AnyGrammar& g) {
  return std::visit([](const auto& x) { return validate(x); }, g);
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (report.empty()) return;
  std::ostringstream os;
  os << what << " is invalid:";
  for (const auto& v : report) os << "\n  [" << v.code << "] " << v.message;
  throw std::invalid_argument(os.str());
}

std::map<std::string, int> parikh(const SententialForm& form, const std::vector<std::string>& over) {
  std::map<std::string, int> counts;
  for (const auto& a : over) counts[a] = 0;
  for (const auto& s : form) {
    if (!s.is_nonterminal()) continue;
    auto it = counts.find(s.name);
    if (it != counts.end()) ++it->second;
  }
  return counts;
}

std::size_t nonterminal_count(const SententialForm& form) {
  return static_cast<std::size_t>(
      std::count_if(form.begin(), form.end(), [](const Symbol& s) { return s.is_nonterminal(); }));
}

namespace {
bool any_erasing(const RuleSet& rules) {
  return std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.erasing(); });
}
}  // namespace

bool has_erasing_rule(const CdSystem& g) {
  return std::any_of(g.components.begin(), g.components.end(), any_erasing);
}

bool has_erasing_rule(const HcdSystem& g) {
  return std::any_of(g.components.begin(), g.components.end(),
                     [](const HcdComponent& c) { return any_erasing(c.rules); });
}

bool has_erasing_rule(const ProgrammedGrammar& g) {
  return std::any_of(g.rules.begin(), g.rules.end(), [](const ProgrammedRule& r) { return r.rule.erasing(); });
}

}  // namespace cdgs
