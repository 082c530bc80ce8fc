#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "cdgs/verifier.hpp"
#include "compiled.hpp"

namespace cdgs {

std::vector<std::string> EqualityReport::lines() const {
  std::vector<std::string> out;
  for (const auto& w : missing) out.push_back("MISSING " + format_word(w));
  for (const auto& w : extra) out.push_back("EXTRA " + format_word(w));
  return out;
}

EqualityReport bounded_equal(const BoundedLanguage& expected, const BoundedLanguage& actual) {
  if (expected.bounds.max_word_len != actual.bounds.max_word_len)
    throw std::invalid_argument("bounded_equal: languages computed under different max_word_len (" +
                                std::to_string(expected.bounds.max_word_len) + " vs " +
                                std::to_string(actual.bounds.max_word_len) + ")");
  EqualityReport report;
  for (const auto& w : expected.words) {
    if (w.empty() || actual.words.contains(w)) continue;
    report.missing.push_back(w);
    if (auto it = expected.witnesses.find(w); it != expected.witnesses.end())
      report.witnesses.emplace(w, it->second.trace);
  }
  for (const auto& w : actual.words) {
    if (w.empty() || expected.words.contains(w)) continue;
    report.extra.push_back(w);
    if (auto it = actual.witnesses.find(w); it != actual.witnesses.end())
      report.witnesses.emplace(w, it->second.trace);
  }
  report.equal = report.missing.empty() && report.extra.empty();
  return report;
}

std::vector<std::string> CertificationReport::lines() const {
  std::vector<std::string> out;
  for (const auto& c : counterexamples)
    out.push_back("VIOLATION index-bound " + format_word(c.word) + " index=" + std::to_string(c.index));
  return out;
}

CertificationReport certify_index_bound(const BoundedLanguage& lang, std::size_t bound) {
  CertificationReport report;
  report.bound = bound;
  report.truncated = lang.truncated;
  for (const auto& w : lang.words) {
    ++report.words_checked;
    auto it = lang.witnesses.find(w);
    if (it == lang.witnesses.end()) continue;
    if (it->second.index > bound) report.counterexamples.push_back({w, it->second.index, it->second.trace});
  }
  report.pass = report.counterexamples.empty();
  return report;
}

CertificationReport certify_index_bound(const AnyGrammar& g, std::size_t bound, const Bounds& bounds) {
  return certify_index_bound(enumerate(g, bounds), bound);
}

StepDisciplineReport check_step_discipline(const HcdSystem& g, std::size_t steps, const Bounds& bounds) {
  using detail::Form;
  using detail::FormHash;
  const auto exploration = explore_hcd(g, bounds);

  detail::SymbolTable table;
  for (const auto& n : g.nonterminals) table.intern(nt(n));
  for (const auto& t : g.terminals) table.intern(term(t));
  std::vector<detail::CompiledComponent> components;
  for (const auto& c : g.components) components.push_back(detail::compile_component(table, c.rules, c.mode));
  for (auto& c : components) detail::finalize(c, table);
  const auto limits = detail::Limits::from(bounds, has_erasing_rule(g));
  const std::size_t depth_cap = 4 * steps + 8;

  StepDisciplineReport report;
  for (const auto& x : exploration.forms) {
    ++report.forms_checked;
    const Form start = table.encode(x);
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& c = components[i];
      ++report.activations_checked;
      // lengths of maximal derivations of component i from x
      std::set<std::size_t> lengths;
      std::vector<Form> layer{start};
      bool unbounded = false;
      for (std::size_t m = 0; !layer.empty(); ++m) {
        if (m > depth_cap) {
          unbounded = true;
          break;
        }
        std::unordered_set<Form, FormHash> next;
        bool truncated = false;
        for (const auto& y : layer) {
          if (!c.applicable(y)) {
            lengths.insert(m);
            continue;
          }
          detail::for_each_successor(c, y, [&](Form&& z) {
            if (detail::admissible(table, z, limits, truncated)) next.insert(std::move(z));
          });
        }
        layer.assign(next.begin(), next.end());
      }
      const bool expect_work = c.applicable(start);
      const std::set<std::size_t> expected{expect_work ? steps : 0};
      if (unbounded || (!lengths.empty() && lengths != expected)) {
        std::string seen;
        for (auto l : lengths) seen += (seen.empty() ? "" : ",") + std::to_string(l);
        std::string form_text;
        for (const auto& s : x) form_text += (form_text.empty() ? "" : " ") + s.name;
        report.violations.push_back("component " + std::to_string(i + 1) + " on [" + form_text + "] makes {" +
                                    seen + (unbounded ? ",unbounded" : "") + "} steps");
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace cdgs
