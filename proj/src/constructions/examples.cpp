#include <algorithm>
#include <stdexcept>

#include "cdgs/constructions.hpp"

namespace cdgs {

namespace {

std::string idx(const std::string& base, std::size_t i) { return base + std::to_string(i); }

}  // namespace

CdSystem build_example1(std::size_t k) {
  if (k < 2) throw std::invalid_argument("build_example1: k >= 2 required");
  CdSystem g;
  g.name = "example1_k" + std::to_string(k);
  for (std::size_t i = 1; i <= k; ++i) g.nonterminals.push_back(idx("S", i));
  for (std::size_t i = 1; i <= k; ++i) g.nonterminals.push_back(idx("A", i));
  for (std::size_t i = 1; i <= k; ++i) g.nonterminals.push_back(idx("A", i) + "'");
  for (std::size_t i = 1; i <= k + 1; ++i) g.terminals.push_back(idx("a", i));
  g.axiom = "S1";

  auto A = [](std::size_t i) { return nt(idx("A", i)); };
  auto Ap = [](std::size_t i) { return nt(idx("A", i) + "'"); };
  auto a = [](std::size_t i) { return term(idx("a", i)); };

  RuleSet p1, p2;
  for (std::size_t i = 1; i < k; ++i) p1.push_back({idx("S", i), {nt(idx("S", i + 1))}});
  Rule start{idx("S", k), {}};
  for (std::size_t i = 1; i <= k; ++i) start.rhs.push_back(A(i));
  p1.push_back(std::move(start));
  for (std::size_t i = 1; i <= k; ++i) p1.push_back({idx("A", i) + "'", {A(i)}});

  for (std::size_t i = 1; i < k; ++i) p2.push_back({idx("A", i), {a(i), Ap(i)}});
  p2.push_back({idx("A", k), {a(k), Ap(k), a(k + 1)}});
  for (std::size_t i = 1; i < k; ++i) p2.push_back({idx("A", i), {a(i)}});
  p2.push_back({idx("A", k), {a(k), a(k + 1)}});

  g.components = {std::move(p1), std::move(p2)};
  g.mode = Mode::t_and(Mode::exactly(static_cast<int>(k)));
  require_valid(validate(g), "build_example1");
  return g;
}

CdSystem build_snk_cdgs(std::size_t n, std::size_t k, Variant variant, bool verbatim) {
  if (n < 1 || k < 1) throw std::invalid_argument("build_snk_cdgs: n, k >= 1 required");
  auto S = [](std::size_t i) { return flat_name("S", {i}); };
  auto q = [](std::size_t i, std::size_t j) { return flat_name("q", {i, j}); };
  auto t = [](std::size_t i, std::size_t j) { return flat_name("t", {i, j}); };
  auto tp = [](std::size_t i, std::size_t j) { return flat_name("t'", {i, j}); };
  auto A = [](std::size_t i, std::size_t j) { return flat_name("A", {i, j}); };
  const std::size_t blocks = n * k;

  CdSystem g;
  g.name = "snk_n" + std::to_string(n) + "_k" + std::to_string(k);
  g.terminals = {"a", "b"};
  for (std::size_t i = 0; i <= k; ++i) g.nonterminals.push_back(S(i));
  for (std::size_t i = 1; i <= n; ++i) {
    g.nonterminals.push_back(q(i, 0));
    g.nonterminals.push_back(q(i, 1));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j <= k; ++j) {
      g.nonterminals.push_back(t(i, j));
      g.nonterminals.push_back(tp(i, j));
    }
  for (std::size_t j = 1; j <= blocks; ++j) {
    g.nonterminals.push_back(A(j, 0));
    g.nonterminals.push_back(A(j, 1));
  }
  g.axiom = S(0);

  const Symbol a = term("a"), b = term("b");
  RuleSet p0;
  p0.push_back({S(0), {nt(S(1))}});
  for (std::size_t i = 1; i < k; ++i) p0.push_back({S(i), {nt(S(i + 1))}});
  Rule start{S(k), {nt(q(1, 0))}};
  for (std::size_t j = 1; j <= blocks; ++j) {
    start.rhs.push_back(nt(A(j, 0)));
    start.rhs.push_back(b);
  }
  if (!verbatim) {
    // lets the first cycle terminate, giving i = 1
    Rule direct = start;
    direct.rhs.front() = nt(t(1, 0));
    p0.push_back(std::move(direct));
  }
  p0.push_back(std::move(start));
  for (std::size_t j = 1; j <= blocks; ++j) p0.push_back({A(j, 1), {nt(A(j, 0))}});
  for (std::size_t i = 1; i < n; ++i) p0.push_back({q(i, 1), {nt(q(i + 1, 0))}});
  p0.push_back({q(n, 1), {nt(q(1, 0))}});
  p0.push_back({q(n, 1), {nt(t(1, 0))}});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < k; ++j) p0.push_back({tp(i, j), {nt(tp(i, j + 1))}});
  for (std::size_t i = 1; i < n; ++i) p0.push_back({tp(i, k), {nt(t(i + 1, 0))}});
  p0.push_back({tp(n, k), {b}});

  g.components.push_back(std::move(p0));
  for (std::size_t i = 1; i <= n; ++i) {
    // A_j handled by P_i; index 0 does not exist
    const std::size_t first = std::max<std::size_t>((i - 1) * k + (verbatim ? 0 : 1), 1);
    RuleSet grow{{q(i, 0), {nt(q(i, 1))}}};
    RuleSet stop{{t(i, 0), {nt(tp(i, 0))}}};
    for (std::size_t j = first; j <= i * k; ++j) {
      grow.push_back({A(j, 0), {a, nt(A(j, 1)), a}});
      stop.push_back({A(j, 0), {a, b, a}});
    }
    if (variant == Variant::exactly) {
      grow.insert(grow.end(), stop.begin(), stop.end());
      g.components.push_back(std::move(grow));
    } else {
      if (!verbatim) {
        // a loop on every other control symbol keeps each half from running
        // outside its own phase
        for (std::size_t i2 = 1; i2 <= n; ++i2) {
          for (std::size_t j = 0; j <= 1; ++j) {
            if (i2 != i) grow.push_back({q(i2, j), {nt(q(i2, j))}});
            stop.push_back({q(i2, j), {nt(q(i2, j))}});
          }
          if (i2 != i) stop.push_back({t(i2, 0), {nt(t(i2, 0))}});
          grow.push_back({t(i2, 0), {nt(t(i2, 0))}});
          for (std::size_t j = 0; j <= k; ++j) {
            grow.push_back({tp(i2, j), {nt(tp(i2, j))}});
            if (i2 != i || j != 0) stop.push_back({tp(i2, j), {nt(tp(i2, j))}});
          }
        }
      }
      g.components.push_back(std::move(grow));
      g.components.push_back(std::move(stop));
    }
  }
  g.mode = variant_mode(variant, k + 1);
  require_valid(validate(g), "build_snk_cdgs");
  return g;
}

CdSystem build_anbnambm() {
  CdSystem g;
  g.name = "anbnambm";
  g.nonterminals = {"S", "A", "B", "A'", "B'"};
  g.terminals = {"a", "b"};
  g.axiom = "S";
  const Symbol a = term("a"), b = term("b");
  const Symbol A = nt("A"), B = nt("B"), Ap = nt("A'"), Bp = nt("B'");
  g.components = {
      {{"S", {A, B}}, {"A'", {A}}, {"B'", {B}}},
      {{"A", {a, Ap, b}}, {"A", {a, b}}, {"B'", {Bp}}},
      {{"B", {a, Bp, b}}, {"B", {a, b}}, {"A", {A}}, {"A'", {Ap}}},
  };
  g.mode = Mode::t_and(Mode::exactly(1));
  require_valid(validate(g), "build_anbnambm");
  return g;
}

CdSystem build_s3_cd3(bool verbatim) {
  CdSystem g;
  g.name = "s3_cd3";
  g.nonterminals = {"S", "A", "B", "A'", "B'", "C", "C'", "B''", "F"};
  g.terminals = {"a", "b"};
  g.axiom = "S";
  const Symbol a = term("a"), b = term("b");
  const Symbol A = nt("A"), B = nt("B"), C = nt("C"), F = nt("F");
  const Symbol Ap = nt("A'"), Bp = nt("B'"), Cp = nt("C'"), Bpp = nt("B''");
  const std::vector<Symbol> body{b, A, b, B, b, C, b};

  RuleSet p3;
  if (verbatim) {
    p3.push_back({"S", body});
  } else {
    NameRegistry names(g.nonterminals);
    names.reserve("a");
    names.reserve("b");
    const std::string s1 = names.fresh("S'");
    g.nonterminals.push_back(s1);
    p3.push_back({"S", {nt(s1)}});
    p3.push_back({s1, body});
  }
  p3.push_back({"C'", {C}});
  p3.push_back({"A'", {A}});
  p3.push_back({"B'", {F}});
  g.components = {
      {{"A", {a, Ap, a}}, {"A", {a, b, a}}, {"B", {a, Bp, a}}, {"B", {Bpp}}},
      {{"B'", {B}}, {"C", {a, Cp, a}}, {"A", {F}}, {"B''", {a, b, a}}, {"C", {a, b, a}}},
      std::move(p3),
  };
  g.mode = Mode::t_and(Mode::exactly(2));
  require_valid(validate(g), "build_s3_cd3");
  return g;
}

}  // namespace cdgs
