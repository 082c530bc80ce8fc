#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cdgs/constructions.hpp"
#include "cdgs/engine.hpp"
#include "cdgs/verifier.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace cdgs;

namespace {

constexpr std::array variants{Variant::exactly, Variant::at_most};

WordSet words_of(const CdSystem& g, std::size_t len) {
  REQUIRE(validate(g).empty());
  const auto lang = enumerate_cd(g, Bounds::words(len));
  CHECK_FALSE(lang.truncated);
  for (const auto& [w, wit] : lang.witnesses) CHECK(validate_trace(g, *g.mode, wit.trace).ok);
  return lang.words;
}

WordSet reference_words(const ReferenceLanguage& ref, std::size_t len) { return expand(ref, len).words; }

}  // namespace

TEST_CASE("flat names and the registry") {
  CHECK(flat_name("S", {1, 2}) == "S__1_2");
  CHECK(flat_name("S", std::initializer_list<std::size_t>{}) == "S");
  CHECK(flat_name("q", std::vector<std::string>{"i", "0"}) == "q__i_0");
  NameRegistry reg(std::vector<std::string>{"S", "S-1"});
  CHECK(reg.fresh("S") == "S-2");
  CHECK(reg.fresh("S") == "S-3");
  CHECK(reg.fresh("T") == "T");
  CHECK(reg.taken("T"));
  CHECK(variant_mode(Variant::at_most, 3) == Mode::t_and(Mode::at_most(3)));
}

TEST_CASE("finite languages in one component") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto words = corpus::random_finite_language(rng);
    for (std::size_t k = 1; k <= 3; ++k)
      for (auto v : variants) {
        const auto g = finite_to_cd1(words, k, v);
        CHECK(g.components.size() == 1);
        CHECK(words_of(g, 4) == words);
        CHECK(oracle::cd_words(g, *g.mode, oracle::Limits{4}) == words);
      }
  }
}

TEST_CASE("finite construction avoids terminal names") {
  const WordSet words{{"S__1"}, {"S__1", "S__2"}};
  const auto g = finite_to_cd1(words, 2);
  CHECK(validate(g).empty());
  CHECK(words_of(g, 2) == words);
  CHECK_THROWS(finite_to_cd1(WordSet{}, 0));
}

TEST_CASE("linear grammars in two components") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = corpus::random_linear_grammar(rng);
    const auto want = oracle::cf_words(g, oracle::Limits{6});
    for (auto v : variants) {
      const auto cd = linear_to_cd2(g, v);
      CHECK(cd.components.size() == 2);
      CHECK(*cd.mode == variant_mode(v, 1));
      CHECK(words_of(cd, 6) == want);
    }
  }
}

TEST_CASE("index-2 grammars in two components") {
  for (const auto& g : corpus::index2_grammars()) {
    REQUIRE(oracle::widest_form(g, 7) <= 2);
    const auto want = oracle::cf_words(g, oracle::Limits{7});
    for (auto v : variants) {
      const auto cd = cf_indexk_to_cd2(g, 2, v);
      CHECK(cd.components.size() == 2);
      CHECK(words_of(cd, 7) == want);
    }
  }
}

TEST_CASE("the index-k construction rewrites forms level by level") {
  // aadd has index 2 (S, aAB, aaB, aaDD, aadD, aadd) but every form of the
  // construction rewrites all of its nonterminals at once
  const auto g = corpus::cf("S", {"S -> A B", "A -> a A", "A -> a", "B -> D D", "D -> d"});
  const Word aadd{"a", "a", "d", "d"};
  CHECK(oracle::word_index(to_hcd(g, Mode::star()), aadd, 4, 3) == 2u);
  const auto cd = cf_indexk_to_cd2(g, 2);
  CHECK_FALSE(words_of(cd, 4).contains(aadd));
  CHECK(words_of(cd, 4).contains({"a", "d", "d"}));
}

TEST_CASE("linear and index-k constructions reject unsuitable inputs") {
  const auto two = corpus::cf("S", {"S -> A A", "A -> a"});
  CHECK_THROWS_AS(linear_to_cd2(two), std::invalid_argument);
  auto multi = corpus::cf("S", {"S -> a"});
  multi.components.push_back(multi.components[0]);
  CHECK_THROWS_AS(linear_to_cd2(multi), std::invalid_argument);
  auto dead = corpus::cf("S", {"S -> a A"});
  dead.nonterminals.push_back("A");
  CHECK_THROWS_AS(cf_indexk_to_cd2(dead, 2), std::invalid_argument);
}

TEST_CASE("the two-component system generates L_k") {
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto g = build_example1(k);
    CHECK(*g.mode == Mode::t_and(Mode::exactly(static_cast<int>(k))));
    const std::size_t len = 3 * (k + 1);
    CHECK(words_of(g, len) == reference_words(ReferenceLanguage::lk(static_cast<int>(k)), len));
    const auto at_least = enumerate_cd(g, Mode::t_and(Mode::at_least(static_cast<int>(k))), Bounds::words(len));
    CHECK(at_least.words == reference_words(ReferenceLanguage::lk(static_cast<int>(k)), len));
  }
  CHECK_THROWS(build_example1(1));
}

TEST_CASE("the L_k system under (t & <=k) generates more") {
  const auto g = build_example1(2);
  const auto lang = enumerate_cd(g, Mode::t_and(Mode::at_most(2)), Bounds::words(9));
  CHECK(lang.words == oracle::cd_words(g, Mode::t_and(Mode::at_most(2)), oracle::Limits{9}));
  CHECK(lang.contains({"a1", "a1", "a2", "a3"}));
}

TEST_CASE("anbnambm") {
  const auto g = build_anbnambm();
  CHECK(g.components.size() == 3);
  CHECK(words_of(g, 12) == reference_words(ReferenceLanguage::anbnambm(), 12));
}

TEST_CASE("S_{n,k} systems") {
  struct Case {
    std::size_t n, k, len;
  };
  for (const auto& c : {Case{1, 1, 11}, Case{2, 1, 13}, Case{1, 2, 13}}) {
    const auto want = reference_words(ReferenceLanguage::sm(static_cast<int>(c.n * c.k)), c.len);
    REQUIRE_FALSE(want.empty());
    for (auto v : variants) {
      const auto g = build_snk_cdgs(c.n, c.k, v);
      CHECK(g.components.size() == (v == Variant::exactly ? c.n + 1 : 2 * c.n + 1));
      CHECK(*g.mode == variant_mode(v, c.k + 1));
      INFO("n=" << c.n << " k=" << c.k);
      CHECK(words_of(g, c.len) == want);
    }
  }
}

TEST_CASE("S_{n,k} without the repairs") {
  // i = 1 is unreachable, and for n >= 2 the overlapping ranges block every derivation
  const auto one = words_of(build_snk_cdgs(1, 1, Variant::exactly, true), 11);
  CHECK_FALSE(one.contains(parse_word("babab")));
  CHECK(one.contains(parse_word("baabaab")));
  CHECK(words_of(build_snk_cdgs(2, 1, Variant::exactly, true), 13).empty());
}

TEST_CASE("S_3") {
  const auto g = build_s3_cd3();
  CHECK(g.components.size() == 3);
  CHECK(words_of(g, 13) == reference_words(ReferenceLanguage::sm(3), 13));
  CHECK(words_of(build_s3_cd3(true), 13).empty());
}

TEST_CASE("programmed simulation of a CD system") {
  struct Case {
    CdSystem g;
    std::size_t k;
    std::size_t len;
  };
  for (const auto& c : {Case{build_example1(2), 2, 9}, Case{build_anbnambm(), 1, 8},
                        Case{build_snk_cdgs(1, 1, Variant::exactly), 2, 7}}) {
    const auto pg = cd_to_programmed(c.g, c.k, Variant::exactly);
    CHECK(validate(pg).empty());
    const auto want = enumerate_cd(c.g, Bounds::words(c.len)).words;
    const auto lang = enumerate_programmed(pg, Bounds::words(c.len));
    CHECK(lang.words == want);
    CHECK(lang.words == oracle::programmed_words(pg, c.len));
    for (const auto& [w, wit] : lang.witnesses) CHECK(validate_trace(pg, wit.trace).ok);
  }
  const auto g = build_example1(2);
  const auto pg = cd_to_programmed(g, 2, Variant::at_most);
  CHECK(enumerate_programmed(pg, Bounds::words(9)).words ==
        enumerate_cd(g, Mode::t_and(Mode::at_most(2)), Bounds::words(9)).words);
}

TEST_CASE("prolongation") {
  const auto g = build_example1(2);
  CHECK(prolong(g, 1) == g);
  CHECK_THROWS(prolong(g, 0));
  auto undeclared = g;
  undeclared.mode.reset();
  CHECK_THROWS(prolong(undeclared, 2));

  for (const auto& base : {build_example1(2), build_anbnambm(), build_snk_cdgs(1, 1, Variant::exactly)}) {
    const auto want = words_of(base, 9);
    for (std::size_t f = 2; f <= 3; ++f) {
      const auto p = prolong(base, f);
      CHECK(*p.mode == scale_mode(*base.mode, f));
      CHECK(words_of(p, 9) == want);
      CHECK(check_step_discipline(to_hcd(p, *p.mode), f, Bounds::words(9)).activations_checked > 0);
    }
    const auto twice = prolong(prolong(base, 2), 3);
    CHECK(*twice.mode == *prolong(base, 6).mode);
    CHECK(words_of(twice, 9) == want);
  }
}

TEST_CASE("separation-form programmed grammars as CD systems") {
  const auto pg = corpus::pg_abc();
  const auto want = oracle::programmed_words(pg, 9);
  const std::vector<Mode> targets{Mode::t_and(Mode::exactly(3)), Mode::exactly(3), Mode::at_least(3),
                                  Mode::t(),  Mode::between(3, 5), Mode::t_and(Mode::at_most(3)),
                                  Mode::t_and(Mode::at_least(3)), Mode::t_and(Mode::exactly(6)),
                                  Mode::exactly(4)};
  for (const auto& f : targets) {
    INFO("target " << f.to_string());
    const auto g = nsf_programmed_to_cdgs(pg, 3, f);
    CHECK(*g.mode == f);
    CHECK(words_of(g, 9) == want);
  }
  const auto base = nsf_programmed_to_cdgs(pg, 3, Mode::exactly(3));
  CHECK(check_step_discipline(to_hcd(base, *base.mode), 3, Bounds::words(9)).ok);

  const auto lin = corpus::pg_linear();
  // grow may follow itself
  for (const auto& f : {Mode::t_and(Mode::exactly(1)), Mode::exactly(1), Mode::t(), Mode::at_least(1),
                        Mode::t_and(Mode::exactly(2)), Mode::exactly(3)}) {
    INFO("target " << f.to_string());
    CHECK(words_of(nsf_programmed_to_cdgs(lin, 1, f), 6) == oracle::programmed_words(lin, 6));
  }
}

TEST_CASE("separation-form inputs are checked") {
  const auto pg = corpus::pg_abc();
  CHECK_THROWS_WITH_AS(nsf_programmed_to_cdgs(pg, 3, Mode::exactly(2)), doctest::Contains("p"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(nsf_programmed_to_cdgs(pg, 2, Mode::exactly(3)), doctest::Contains("index exceeds m"),
                       std::invalid_argument);
  auto bad = pg;
  bad.rules[1].rule = make_rule("A", {"a", "A", "A"}, {"S'", "A", "B", "C"});
  CHECK_THROWS_WITH_AS(nsf_programmed_to_cdgs(bad, 3, Mode::exactly(3)), doctest::Contains("not in NSF"),
                       std::invalid_argument);
  auto ac = pg;
  ac.rules[4].failure = {"p5"};
  CHECK_THROWS_WITH_AS(nsf_programmed_to_cdgs(ac, 3, Mode::exactly(3)),
                       doctest::Contains("appearance checking is not supported"), std::invalid_argument);
}
