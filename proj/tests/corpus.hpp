#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cdgs/grammar.hpp"
#include "cdgs/words.hpp"

namespace corpus {

using namespace cdgs;

/// Single-component grammar from lines "A -> x y" ("#" for λ); names that
/// never occur on a left-hand side are terminals.
inline CdSystem cf(const std::string& axiom, const std::vector<std::string>& lines,
                   std::optional<Mode> mode = Mode::star()) {
  std::vector<std::pair<std::string, std::vector<std::string>>> parsed;
  std::vector<std::string> nts{axiom};
  std::set<std::string> nt_set{axiom};
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string lhs, arrow, tok;
    in >> lhs >> arrow;
    std::vector<std::string> rhs;
    while (in >> tok)
      if (tok != "#") rhs.push_back(tok);
    if (nt_set.insert(lhs).second) nts.push_back(lhs);
    parsed.emplace_back(lhs, rhs);
  }
  std::set<std::string> terminals;
  for (const auto& [lhs, rhs] : parsed)
    for (const auto& s : rhs)
      if (!nt_set.contains(s)) terminals.insert(s);
  CdSystem g;
  g.name = "cf";
  g.nonterminals = nts;
  g.terminals.assign(terminals.begin(), terminals.end());
  g.axiom = axiom;
  RuleSet rules;
  for (const auto& [lhs, rhs] : parsed) rules.push_back(make_rule(lhs, rhs, nt_set));
  g.components = {rules};
  g.lambda_free = std::none_of(rules.begin(), rules.end(), [](const Rule& r) { return r.erasing(); });
  g.mode = mode;
  return g;
}

/// The separation-form programmed grammar for { a^n b^n c^n }.
inline ProgrammedGrammar pg_abc() {
  ProgrammedGrammar pg;
  pg.name = "pg_abc";
  pg.nonterminals = {"S'", "A", "B", "C"};
  pg.terminals = {"a", "b", "c"};
  pg.axiom = "S'";
  const std::set<std::string> n(pg.nonterminals.begin(), pg.nonterminals.end());
  auto add = [&](std::string label, std::string lhs, std::vector<std::string> rhs, std::vector<std::string> succ) {
    pg.rules.push_back({std::move(label), make_rule(lhs, rhs, n), std::move(succ), {}});
  };
  add("p0", "S'", {"A", "B", "C"}, {"p1", "p4"});
  add("p1", "A", {"a", "A"}, {"p2"});
  add("p2", "B", {"b", "B"}, {"p3"});
  add("p3", "C", {"c", "C"}, {"p1", "p4"});
  add("p4", "A", {"a"}, {"p5"});
  add("p5", "B", {"b"}, {"p6"});
  add("p6", "C", {"c"}, {});
  return pg;
}

/// Linear separation-form grammar { a^n b | n >= 0 } with one nonterminal
/// besides the start symbol.
inline ProgrammedGrammar pg_linear() {
  ProgrammedGrammar pg;
  pg.name = "pg_linear";
  pg.nonterminals = {"S", "A"};
  pg.terminals = {"a", "b"};
  pg.axiom = "S";
  const std::set<std::string> n(pg.nonterminals.begin(), pg.nonterminals.end());
  pg.rules.push_back({"s", make_rule("S", {"A"}, n), {"grow", "stop"}, {}});
  pg.rules.push_back({"grow", make_rule("A", {"a", "A"}, n), {"grow", "stop"}, {}});
  pg.rules.push_back({"stop", make_rule("A", {"b"}, n), {}, {}});
  return pg;
}

/// Grammars in which no reachable form has more than two nonterminals.
inline std::vector<CdSystem> index2_grammars() {
  return {
      cf("S", {"S -> A B", "A -> a A b", "A -> a b", "B -> c B", "B -> c"}),
      cf("S", {"S -> A A", "A -> a A", "A -> b"}),
      cf("S", {"S -> a S a", "S -> A B", "A -> a A", "A -> a", "B -> b"}),
      cf("S", {"S -> A B", "A -> a B", "A -> a", "B -> b A", "B -> b"}),
      cf("S", {"S -> A C", "A -> a A", "A -> a", "C -> c C", "C -> B", "B -> b B", "B -> b"}),
  };
}

inline Word random_word(std::mt19937& rng, std::size_t min_len, std::size_t max_len,
                        const std::vector<std::string>& alphabet) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len), pick(0, alphabet.size() - 1);
  Word w(len(rng));
  for (auto& s : w) s = alphabet[pick(rng)];
  return w;
}

/// 1..5 non-empty words of length <= 4 over {a, b, c}.
inline WordSet random_finite_language(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 5);
  WordSet out;
  const int n = count(rng);
  while (static_cast<int>(out.size()) < n) out.insert(random_word(rng, 1, 4, {"a", "b", "c"}));
  return out;
}

/// Linear grammar over 1..4 nonterminals N0..N3 and terminals {a, b}.
inline CdSystem random_linear_grammar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nts(1, 4), rules_per(1, 3), coin(0, 2);
  const int n = nts(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("N" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::string> lines;
  for (int i = 0; i < n; ++i) {
    // one terminating rule keeps most nonterminals productive
    std::string stop = names[i] + " ->";
    for (const auto& s : random_word(rng, 1, 2, {"a", "b"})) stop += " " + s;
    lines.push_back(stop);
    for (int r = rules_per(rng); r > 1; --r) {
      std::string line = names[i] + " ->";
      for (const auto& s : random_word(rng, 0, 2, {"a", "b"})) line += " " + s;
      line += " " + names[pick(rng)];
      if (coin(rng) == 0) line += " b";
      lines.push_back(line);
    }
  }
  return cf("N0", lines);
}

}  // namespace corpus
