#include <stdexcept>

#include "cdgs/constructions.hpp"

namespace cdgs {

ProgrammedGrammar cd_to_programmed(const CdSystem& g, std::size_t k, Variant variant) {
  if (k < 1) throw std::invalid_argument("cd_to_programmed: k >= 1 required");
  require_valid(validate(g), "cd_to_programmed");

  NameRegistry names(g.nonterminals);
  for (const auto& t : g.terminals) names.reserve(t);
  const std::string failure = names.fresh("F");

  auto sim = [](std::size_t i, std::size_t j, std::size_t c) { return flat_name("sim", {i, j, c}); };
  auto chk = [](std::size_t i, std::size_t j) { return flat_name("chk", {i, j}); };

  std::vector<std::string> entry;  // every (i', j', 1)
  for (std::size_t i = 1; i <= g.components.size(); ++i)
    for (std::size_t j = 1; j <= g.components[i - 1].size(); ++j) entry.push_back(sim(i, j, 1));

  ProgrammedGrammar out;
  out.name = g.name + "_programmed";
  out.nonterminals = g.nonterminals;
  out.nonterminals.push_back(failure);
  out.terminals = g.terminals;
  out.axiom = g.axiom;
  out.lambda_free = g.lambda_free;

  for (std::size_t i = 1; i <= g.components.size(); ++i) {
    const RuleSet& rules = g.components[i - 1];
    const std::size_t count = rules.size();
    for (std::size_t j = 1; j <= count; ++j) {
      for (std::size_t c = 1; c <= k; ++c) {
        ProgrammedRule r{sim(i, j, c), rules[j - 1], {}, {}};
        if (c < k)
          for (std::size_t jj = 1; jj <= count; ++jj) r.success.push_back(sim(i, jj, c + 1));
        else
          r.success.push_back(chk(i, 1));
        if (variant == Variant::at_most) r.failure = r.success;
        out.rules.push_back(std::move(r));
      }
    }
    for (std::size_t j = 1; j <= count; ++j) {
      ProgrammedRule r{chk(i, j), Rule{rules[j - 1].lhs, {nt(failure)}}, {}, {}};
      if (j < count)
        r.failure.push_back(chk(i, j + 1));
      else
        r.failure = entry;
      out.rules.push_back(std::move(r));
    }
  }
  require_valid(validate(out), "cd_to_programmed");
  return out;
}

}  // namespace cdgs
