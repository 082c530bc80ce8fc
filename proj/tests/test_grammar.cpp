#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cdgs/grammar.hpp"
#include "cdgs/words.hpp"

using namespace cdgs;

namespace {

CdSystem tiny() {
  CdSystem g;
  g.nonterminals = {"S", "A"};
  g.terminals = {"a", "b"};
  g.axiom = "S";
  g.components = {{{"S", {nt("A"), term("b")}}}, {{"A", {term("a")}}}};
  return g;
}

bool has_code(const ValidationReport& r, const std::string& code) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("a well-formed system validates") { CHECK(validate(tiny()).empty()); }

TEST_CASE("validation codes") {
  auto g = tiny();
  g.terminals.push_back("A");
  CHECK(has_code(validate(g), "alphabet-overlap"));

  g = tiny();
  g.axiom = "Z";
  CHECK(has_code(validate(g), "axiom"));

  g = tiny();
  g.components.clear();
  const auto r = validate(g);
  REQUIRE(has_code(r, "degree"));
  CHECK(std::find_if(r.begin(), r.end(), [](const Violation& v) { return v.code == "degree"; })->message ==
        "degree ≥ 1 required");

  g = tiny();
  g.components[0].push_back({"a", {term("b")}});
  CHECK(has_code(validate(g), "lhs"));

  g = tiny();
  g.components[0].push_back({"S", {term("z")}});
  CHECK(has_code(validate(g), "rhs-symbol"));

  g = tiny();
  g.components[1].push_back({"A", {}});
  CHECK(has_code(validate(g), "erasing-rule"));
  g.lambda_free = false;
  CHECK(validate(g).empty());

  g = tiny();
  g.nonterminals.push_back("S");
  CHECK(has_code(validate(g), "duplicate-symbol"));

  g = tiny();
  g.nonterminals.push_back("bad name");
  CHECK(has_code(validate(g), "bad-name"));

  CHECK_THROWS_AS(require_valid(validate(g), "tiny"), std::invalid_argument);
}

TEST_CASE("programmed grammar validation") {
  ProgrammedGrammar pg;
  pg.nonterminals = {"S"};
  pg.terminals = {"a"};
  pg.axiom = "S";
  pg.rules = {{"p", {"S", {term("a")}}, {"q"}, {}}};
  CHECK(has_code(validate(pg), "unknown-label"));
  pg.rules.push_back({"p", {"S", {term("a")}}, {}, {}});
  CHECK(has_code(validate(pg), "duplicate-label"));

  pg.rules = {{"p", {"S", {term("a")}}, {}, {}}};
  CHECK(validate(pg).empty());
  pg.nsf_counts = NsfCounts{{"nope", {}}};
  CHECK(has_code(validate(pg), "nsf-count-label"));
  pg.nsf_counts = NsfCounts{{"p", {{"S", -1}}}};
  CHECK(has_code(validate(pg), "nsf-count-negative"));
  pg.nsf_counts = NsfCounts{{"p", {{"a", 1}, {"S", 1}}}};
  CHECK(has_code(validate(pg), "nsf-count-symbol"));
  pg.nsf_counts = NsfCounts{{"p", {}}};
  CHECK(has_code(validate(pg), "nsf-count-lhs"));
  CHECK(pg.find("p") != nullptr);
  CHECK(pg.find("x") == nullptr);
}

TEST_CASE("symbol names") {
  CHECK(is_valid_symbol_name("S__1_2"));
  CHECK(is_valid_symbol_name("A''"));
  CHECK(is_valid_symbol_name("(S,1)"));
  CHECK_FALSE(is_valid_symbol_name(""));
  CHECK_FALSE(is_valid_symbol_name("a b"));
  CHECK_FALSE(is_valid_symbol_name("a;b"));
}

TEST_CASE("make_rule classifies by the nonterminal set") {
  const auto r = make_rule("S", {"a", "S", "b"}, {"S"});
  REQUIRE(r.rhs.size() == 3);
  CHECK(r.rhs[1] == nt("S"));
  CHECK(r.rhs[0] == term("a"));
  CHECK(make_rule("S", {}, {"S"}).erasing());
}

TEST_CASE("to_hcd gives every component the same mode") {
  const auto h = to_hcd(tiny(), Mode::t());
  REQUIRE(h.components.size() == 2);
  CHECK(h.components[1].mode == Mode::t());
  CHECK(h.components[0].rules == tiny().components[0]);
}

TEST_CASE("parikh vectors and counts") {
  const SententialForm x{nt("A"), term("a"), nt("B"), nt("A")};
  const auto p = parikh(x, {"A", "B", "C"});
  CHECK(p.at("A") == 2);
  CHECK(p.at("B") == 1);
  CHECK(p.at("C") == 0);
  CHECK(nonterminal_count(x) == 3);
}

TEST_CASE("words: order, text and parsing") {
  WordSet s{{"b"}, {"a", "a"}, {"a"}, {"a", "b"}};
  std::vector<Word> order(s.begin(), s.end());
  CHECK(order == std::vector<Word>{{"a"}, {"b"}, {"a", "a"}, {"a", "b"}});
  CHECK(format_word({}) == "#");
  CHECK(format_word({"a", "b"}) == "ab");
  CHECK(format_word({"a1", "a2"}) == "a1 a2");
  CHECK(parse_word("abab") == Word{"a", "b", "a", "b"});
  CHECK(parse_word("a1a2a3", {"a1", "a2", "a3"}) == Word{"a1", "a2", "a3"});
  CHECK(parse_word("a1 a2") == Word{"a1", "a2"});
  CHECK(parse_word("#").empty());
  CHECK_THROWS_AS(parse_word("xy", {"a"}), std::invalid_argument);
  CHECK(repeat({"a", "b"}, 2) == Word{"a", "b", "a", "b"});
  CHECK(concat({{"a"}, {}, {"b"}}) == Word{"a", "b"});
}
