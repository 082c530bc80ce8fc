#include <stdexcept>

#include "cdgs/constructions.hpp"

namespace cdgs {

CdSystem prolong(const CdSystem& g, std::size_t factor) {
  if (factor < 1) throw std::invalid_argument("prolong: factor >= 1 required");
  if (!g.mode) throw std::invalid_argument("prolong: the system declares no mode");
  require_valid(validate(g), "prolong");
  if (factor == 1) return g;

  NameRegistry names(g.nonterminals);
  for (const auto& t : g.terminals) names.reserve(t);

  CdSystem out = g;
  for (std::size_t i = 1; i <= g.components.size(); ++i) {
    RuleSet chained;
    const RuleSet& rules = g.components[i - 1];
    for (std::size_t j = 1; j <= rules.size(); ++j) {
      std::string from = rules[j - 1].lhs;
      for (std::size_t s = 1; s < factor; ++s) {
        std::string x = names.fresh(flat_name("X", {i, j, s}));
        out.nonterminals.push_back(x);
        chained.push_back({from, {nt(x)}});
        from = std::move(x);
      }
      chained.push_back({from, rules[j - 1].rhs});
    }
    out.components[i - 1] = std::move(chained);
  }
  out.mode = scale_mode(*g.mode, static_cast<int>(factor));
  require_valid(validate(out), "prolong");
  return out;
}

}  // namespace cdgs
