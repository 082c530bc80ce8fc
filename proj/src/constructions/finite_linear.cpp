#include <algorithm>
#include <map>
#include <stdexcept>

#include "cdgs/constructions.hpp"

namespace cdgs {

CdSystem finite_to_cd1(const WordSet& words, std::size_t k, Variant variant) {
  if (words.empty()) throw std::invalid_argument("finite_to_cd1: empty word set");
  if (k < 1) throw std::invalid_argument("finite_to_cd1: k >= 1 required");
  std::set<std::string> terminals;
  for (const auto& w : words) {
    if (w.empty()) throw std::invalid_argument("finite_to_cd1: the empty word is excluded");
    terminals.insert(w.begin(), w.end());
  }
  NameRegistry names(terminals);
  std::vector<std::string> chain;
  for (std::size_t i = 1; i <= k; ++i) chain.push_back(names.fresh(flat_name("S", {i})));

  CdSystem g;
  g.name = "finite_cd1";
  g.nonterminals = chain;
  g.terminals.assign(terminals.begin(), terminals.end());
  g.axiom = chain.front();
  RuleSet rules;
  for (std::size_t i = 0; i + 1 < k; ++i) rules.push_back({chain[i], {nt(chain[i + 1])}});
  for (const auto& w : words) {
    Rule r{chain.back(), {}};
    for (const auto& a : w) r.rhs.push_back(term(a));
    rules.push_back(std::move(r));
  }
  g.components = {std::move(rules)};
  g.mode = variant_mode(variant, k);
  require_valid(validate(g), "finite_to_cd1");
  return g;
}

namespace {

const RuleSet& single_component(const CdSystem& g, const char* what) {
  require_valid(validate(g), what);
  if (g.components.size() != 1)
    throw std::invalid_argument(std::string(what) + ": expected a single-component grammar, got " +
                                std::to_string(g.components.size()));
  return g.components.front();
}

// Primed copies B' of every nonterminal, avoiding all existing names.
std::map<std::string, std::string> primed(const CdSystem& g) {
  NameRegistry names(g.nonterminals);
  for (const auto& t : g.terminals) names.reserve(t);
  std::map<std::string, std::string> out;
  for (const auto& b : g.nonterminals) out[b] = names.fresh(b + "'");
  return out;
}

CdSystem two_component_copy(const CdSystem& g, const std::map<std::string, std::string>& prime, const char* name) {
  CdSystem out;
  out.name = name;
  out.nonterminals = g.nonterminals;
  for (const auto& b : g.nonterminals) out.nonterminals.push_back(prime.at(b));
  out.terminals = g.terminals;
  out.axiom = g.axiom;
  out.lambda_free = g.lambda_free;
  return out;
}

}  // namespace

CdSystem linear_to_cd2(const CdSystem& g, Variant variant) {
  const RuleSet& rules = single_component(g, "linear_to_cd2");
  for (const auto& r : rules) {
    const auto n = std::count_if(r.rhs.begin(), r.rhs.end(), [](const Symbol& s) { return s.is_nonterminal(); });
    if (n > 1) throw std::invalid_argument("linear_to_cd2: rule for " + r.lhs + " is not linear");
  }
  const auto prime = primed(g);
  CdSystem out = two_component_copy(g, prime, "linear_cd2");
  RuleSet p1, p2;
  for (const auto& b : g.nonterminals) p1.push_back({b, {nt(prime.at(b))}});
  for (const auto& r : rules) p2.push_back({prime.at(r.lhs), r.rhs});
  out.components = {std::move(p1), std::move(p2)};
  out.mode = variant_mode(variant, 1);
  require_valid(validate(out), "linear_to_cd2");
  return out;
}

CdSystem cf_indexk_to_cd2(const CdSystem& g, std::size_t k, Variant variant) {
  if (k < 1) throw std::invalid_argument("cf_indexk_to_cd2: k >= 1 required");
  const RuleSet& rules = single_component(g, "cf_indexk_to_cd2");
  for (const auto& b : g.nonterminals)
    if (std::none_of(rules.begin(), rules.end(), [&](const Rule& r) { return r.lhs == b; }))
      throw std::invalid_argument("cf_indexk_to_cd2: nonterminal " + b + " has no rule");
  const auto prime = primed(g);
  CdSystem out = two_component_copy(g, prime, "cf_cd2");
  RuleSet p1, p2;
  for (const auto& b : g.nonterminals) {
    p1.push_back({b, {nt(prime.at(b))}});
    p1.push_back({b, {nt(b)}});
  }
  std::set<std::string> looped;
  for (const auto& r : rules) {
    const auto& a = prime.at(r.lhs);
    p2.push_back({a, r.rhs});
    if (looped.insert(a).second) p2.push_back({a, {nt(a)}});
  }
  out.components = {std::move(p1), std::move(p2)};
  out.mode = variant_mode(variant, k);
  require_valid(validate(out), "cf_indexk_to_cd2");
  return out;
}

}  // namespace cdgs
