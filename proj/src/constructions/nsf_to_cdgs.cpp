#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "cdgs/constructions.hpp"

namespace cdgs {

namespace {

// Base step count p of a supported target, or 0 for plain t.
int target_parameter(const Mode& f) {
  switch (f.kind()) {
    case ModeKind::terminating: return 0;
    case ModeKind::exactly:
    case ModeKind::at_least:
    case ModeKind::between:
    case ModeKind::t_and: return f.k();
    default: throw std::invalid_argument("nsf_programmed_to_cdgs: unsupported target mode " + f.to_string());
  }
}

class Builder {
 public:
  Builder(const ProgrammedGrammar& pg, const NsfCounts& counts, std::size_t m)
      : pg_(pg), counts_(counts), m_(m), names_(pg.nonterminals) {
    for (const auto& t : pg.terminals) names_.reserve(t);
    for (const auto& r : pg.rules) labels_.insert(r.label);
  }

  CdSystem build() {
    CdSystem g;
    g.name = pg_.name + "_cd";
    g.terminals = pg_.terminals;
    g.lambda_free = pg_.lambda_free;
    const std::string& s = pg_.axiom;

    // P_I: (1,S) -> (2,S) -> ... -> (m,S) -> (S,p)
    RuleSet init;
    std::vector<std::string> chain;
    for (std::size_t i = 1; i <= m_; ++i) chain.push_back(fresh(flat_name(s, {"init", std::to_string(i)})));
    for (std::size_t i = 0; i + 1 < m_; ++i) init.push_back({chain[i], {nt(chain[i + 1])}});
    for (const auto& r : pg_.rules)
      if (count(r.label, s) == 1) init.push_back({chain.back(), {nt(tagged(s, r.label))}});
    components_.push_back(std::move(init));

    for (const auto& r : pg_.rules) {
      const auto it = counts_.find(r.label);
      if (it == counts_.end() || count(r.label, r.rule.lhs) != 1) continue;  // never applied successfully
      std::vector<std::string> targets = r.success;
      if (targets.empty()) targets.push_back(halt());
      const bool loops = std::find(targets.begin(), targets.end(), r.label) != targets.end();
      for (int parity = 0; parity <= (loops ? 1 : 0); ++parity)
        for (const auto& q : targets) components_.push_back(component(r, it->second, q, parity));
    }

    g.nonterminals = order_;
    g.axiom = chain.front();
    g.components = std::move(components_);
    return g;
  }

 private:
  int count(const std::string& label, const std::string& symbol) const {
    const auto it = counts_.find(label);
    if (it == counts_.end()) return 0;
    const auto jt = it->second.find(symbol);
    return jt == it->second.end() ? 0 : jt->second;
  }

  std::string fresh(const std::string& wanted) {
    std::string name = names_.fresh(wanted);
    order_.push_back(name);
    return name;
  }

  // (B, p); labels that may follow themselves also get an alternate copy
  // so that no component rewrites a symbol into itself
  std::string tagged(const std::string& b, const std::string& label, int parity = 0) {
    auto [it, inserted] = tagged_.try_emplace({b, label, parity});
    if (inserted) {
      std::vector<std::string> idx{label};
      if (parity == 1) idx.push_back("alt");
      it->second = fresh(flat_name(b, idx));
    }
    return it->second;
  }

  // (i, A)
  std::string counter(std::size_t i, const std::string& a) {
    auto [it, inserted] = counters_.try_emplace({a, i});
    if (inserted) it->second = fresh(flat_name(a, {"ctr", std::to_string(i)}));
    return it->second;
  }

  // Label of the dead state reached after a rule with empty success field.
  const std::string& halt() {
    if (halt_.empty()) {
      halt_ = "halt";
      for (std::size_t n = 1; labels_.contains(halt_); ++n) halt_ = "halt-" + std::to_string(n);
    }
    return halt_;
  }

  std::vector<Symbol> image(const std::vector<Symbol>& w, const std::string& q, int parity) {
    std::vector<Symbol> out;
    for (const auto& s : w) out.push_back(s.is_nonterminal() ? nt(tagged(s.name, q, parity)) : s);
    return out;
  }

  RuleSet component(const ProgrammedRule& r, const std::map<std::string, int>& f, const std::string& q, int parity) {
    const std::string& a = r.rule.lhs;
    const int next = q == r.label ? 1 - parity : 0;
    const std::size_t n = std::accumulate(f.begin(), f.end(), std::size_t{0},
                                          [](std::size_t acc, const auto& kv) { return acc + kv.second; });
    RuleSet rules;
    for (const auto& [b, c] : f)
      if (b != a && c > 0) rules.push_back({tagged(b, r.label, parity), {nt(tagged(b, q, next))}});
    auto w = image(r.rule.rhs, q, next);
    if (n == m_) {
      rules.push_back({tagged(a, r.label, parity), std::move(w)});
    } else {
      rules.push_back({tagged(a, r.label, parity), {nt(counter(1, a))}});
      for (std::size_t i = 1; i < m_ - n; ++i) rules.push_back({counter(i, a), {nt(counter(i + 1, a))}});
      rules.push_back({counter(m_ - n, a), std::move(w)});
    }
    return rules;
  }

  const ProgrammedGrammar& pg_;
  const NsfCounts& counts_;
  std::size_t m_;
  NameRegistry names_;
  std::set<std::string> labels_;
  std::vector<std::string> order_;
  std::map<std::tuple<std::string, std::string, int>, std::string> tagged_;
  std::map<std::pair<std::string, std::size_t>, std::string> counters_;
  std::string halt_;
  std::vector<RuleSet> components_;
};

}  // namespace

CdSystem nsf_programmed_to_cdgs(const ProgrammedGrammar& pg, std::size_t m, const Mode& target,
                                const NsfOptions& options) {
  if (m < 1) throw std::invalid_argument("nsf_programmed_to_cdgs: m >= 1 required");
  require_valid(validate(pg), "nsf_programmed_to_cdgs");
  for (const auto& r : pg.rules)
    if (!r.failure.empty())
      throw std::invalid_argument("nsf_programmed_to_cdgs: appearance checking is not supported (label " + r.label +
                                  ")");
  const int p = target_parameter(target);
  if (p != 0 && static_cast<std::size_t>(p) < m)
    throw std::invalid_argument("nsf_programmed_to_cdgs: target " + target.to_string() + " has parameter below m");

  const NsfReport report = nsf_check(pg, options);
  if (!report.holds()) {
    const auto& v = report.violations.front();
    throw std::invalid_argument("not in NSF: " + to_string(v.item) + " " + v.witness);
  }
  const NsfCounts& counts = pg.nsf_counts ? *pg.nsf_counts : report.inferred;
  for (const auto& [label, f] : counts) {
    int sum = 0;
    for (const auto& [b, c] : f) sum += c;
    if (sum > static_cast<int>(m))
      throw std::invalid_argument("index exceeds m: label " + label + " sees " + std::to_string(sum) +
                                  " nonterminals, m = " + std::to_string(m));
  }

  // parameters that are multiples of m prolong the base system, others build it at p directly
  std::size_t base = m, factor = 1;
  if (p != 0) {
    const auto up = static_cast<std::size_t>(p);
    if (up % m == 0)
      factor = up / m;
    else
      base = up;
  }
  CdSystem g = Builder(pg, counts, base).build();
  g.mode = Mode::t_and(Mode::exactly(static_cast<int>(base)));
  require_valid(validate(g), "nsf_programmed_to_cdgs");
  g = prolong(g, factor);
  g.mode = target;
  return g;
}

}  // namespace cdgs
