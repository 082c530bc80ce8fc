#include <doctest.h>

#include <filesystem>
#include <stdexcept>

#include "cdgs/constructions.hpp"
#include "cdgs/gsw.hpp"
#include "corpus.hpp"

using namespace cdgs;

namespace {

// line and column of the ParseError thrown for `text`
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_grammar(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no parse error");
  return {0, 0};
}

void round_trip(const AnyGrammar& g) {
  const auto text = serialize(g);
  const auto back = parse_grammar(text);
  CHECK(back == g);
  CHECK(serialize(back) == text);
}

}  // namespace

TEST_CASE("a CD system") {
  const auto g = std::get<CdSystem>(parse_grammar(R"(; comment line
grammar tiny cdgs
lambda-free yes
nonterminals S A   ; trailing comment
terminals a b
axiom S
mode (t & =2)
component
  S -> A b
  A -> a
end
component
  A -> a A
end
)"));
  CHECK(g.name == "tiny");
  CHECK(g.nonterminals == std::vector<std::string>{"S", "A"});
  CHECK(*g.mode == Mode::t_and(Mode::exactly(2)));
  REQUIRE(g.components.size() == 2);
  CHECK(g.components[0][0] == Rule{"S", {nt("A"), term("b")}});
  round_trip(g);
}

TEST_CASE("a hybrid system with an erasing rule") {
  const auto h = std::get<HcdSystem>(parse_grammar(R"(grammar h hcdgs
lambda-free no
nonterminals S A
terminals a b
axiom S
component
  mode =1
  S -> a S b
  S -> a A b
end
component
  mode t
  A -> #
end
)"));
  CHECK_FALSE(h.lambda_free);
  CHECK(h.components[1].mode == Mode::t());
  CHECK(h.components[1].rules[0].erasing());
  round_trip(h);
}

TEST_CASE("programmed rules and separation counts") {
  const auto pg = std::get<ProgrammedGrammar>(parse_grammar(R"(grammar p programmed
lambda-free yes
nonterminals S A B
terminals a
axiom S
rule p1 : S -> A B ; succ p2 p3 ; fail
rule p2 : A -> a ; succ p3 ; fail p3
rule p3 : B -> a ; succ ; fail   ; done
nsf-counts
counts p1 S=1
counts p2 A=1 B=1
)"));
  REQUIRE(pg.rules.size() == 3);
  CHECK(pg.rules[0].success == std::vector<std::string>{"p2", "p3"});
  CHECK(pg.rules[0].failure.empty());
  CHECK(pg.rules[1].failure == std::vector<std::string>{"p3"});
  CHECK(pg.rules[2].success.empty());
  REQUIRE(pg.nsf_counts);
  CHECK(pg.nsf_counts->at("p2").at("B") == 1);
  round_trip(pg);
}

TEST_CASE("errors carry line and column") {
  CHECK(error_at("grammar x cdgs\nnonterminals S\nterminals a\naxiom S\nmode =0\ncomponent\n  S -> a\nend\n") ==
        std::pair<std::size_t, std::size_t>{5, 6});
  CHECK(error_at("grammar x nope\n").first == 1);
  CHECK(error_at("grammar x cdgs\nnonterminals S\nterminals a\naxiom S\ncomponent\n  S -> a\n").first == 7);
  CHECK(error_at("grammar x cdgs\nbogus line\n") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_at("grammar x cdgs\nnonterminals S\nterminals a\naxiom S\ncomponent\n  S a\nend\n").first == 6);
  CHECK(error_at("grammar x programmed\nnonterminals S\nterminals a\naxiom S\nrule p S -> a ; succ ; fail\n")
            .first == 5);
  try {
    parse_grammar("grammar bad cdgs\nlambda-free yes\nnonterminals S\nterminals a\naxiom S\nmode (>= 3 & <= 2)\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "line 6, column 6: k ≤ ℓ required");
    CHECK(e.detail() == "k ≤ ℓ required");
  }
}

TEST_CASE("well-formed text describing an invalid grammar") {
  CHECK_THROWS_AS(parse_grammar("grammar x cdgs\nnonterminals S\nterminals a\naxiom T\ncomponent\n  S -> a\nend\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_grammar("grammar x cdgs\nnonterminals S\nterminals a\naxiom S\ncomponent\n  S -> #\nend\n"),
                  std::invalid_argument);
}

TEST_CASE("every construction output survives a round trip") {
  round_trip(build_example1(2));
  round_trip(build_example1(3));
  round_trip(build_anbnambm());
  round_trip(build_s3_cd3());
  round_trip(build_s3_cd3(true));
  for (auto v : {Variant::exactly, Variant::at_most}) {
    round_trip(build_snk_cdgs(2, 2, v));
    round_trip(finite_to_cd1({{"a", "b"}, {"c"}}, 3, v));
    round_trip(linear_to_cd2(corpus::cf("S", {"S -> a S b", "S -> c"}), v));
    round_trip(cf_indexk_to_cd2(corpus::index2_grammars()[0], 2, v));
    round_trip(cd_to_programmed(build_example1(2), 2, v));
  }
  round_trip(prolong(build_anbnambm(), 3));
  round_trip(nsf_programmed_to_cdgs(corpus::pg_abc(), 3, Mode::between(3, 5)));
  round_trip(corpus::pg_abc());
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "cdgs_test_gsw.gsw";
  const AnyGrammar g = build_example1(2);
  save_grammar(path.string(), g);
  CHECK(load_grammar(path.string()) == g);
  std::filesystem::remove(path);
  CHECK_THROWS(load_grammar((std::filesystem::temp_directory_path() / "cdgs_missing.gsw").string()));
}
