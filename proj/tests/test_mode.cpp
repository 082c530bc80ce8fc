#include <doctest.h>

#include <array>
#include <random>
#include <stdexcept>

#include "cdgs/mode.hpp"

using namespace cdgs;

TEST_CASE("factories reject values outside D") {
  CHECK_THROWS_AS(Mode::exactly(0), std::invalid_argument);
  CHECK_THROWS_AS(Mode::at_most(-1), std::invalid_argument);
  CHECK_THROWS_WITH(Mode::between(3, 2), "k ≤ ℓ required");
  CHECK_THROWS_AS(Mode::t_and(Mode::t()), std::invalid_argument);
  CHECK_THROWS_AS(Mode::t_and(Mode::star()), std::invalid_argument);
  CHECK_THROWS_AS(Mode::t_and(Mode::between(1, 2)), std::invalid_argument);
  CHECK_NOTHROW(Mode::between(2, 2));
}

TEST_CASE("canonical text round-trips through the parser") {
  const std::array modes{Mode::star(),        Mode::t(),
                         Mode::at_most(3),    Mode::exactly(1),
                         Mode::at_least(12),  Mode::between(2, 5),
                         Mode::t_and(Mode::exactly(2)), Mode::t_and(Mode::at_most(4)),
                         Mode::t_and(Mode::at_least(1))};
  for (const auto& f : modes) CHECK(parse_mode(f.to_string()) == f);
  CHECK(Mode::t_and(Mode::exactly(2)).to_string() == "(t & =2)");
  CHECK(Mode::between(2, 3).to_string() == "(>=2 & <=3)");
  CHECK(parse_mode(" ( t & <= 3 ) ") == Mode::t_and(Mode::at_most(3)));
  CHECK(parse_mode("(>= 3 & <= 7)") == Mode::between(3, 7));
}

TEST_CASE("malformed mode text") {
  CHECK_THROWS_WITH(parse_mode("(>= 3 & <= 2)"), "k ≤ ℓ required");
  CHECK_THROWS(parse_mode(""));
  CHECK_THROWS(parse_mode("=="));
  CHECK_THROWS(parse_mode("(t & t)"));
  CHECK_THROWS(parse_mode("=2)"));
  CHECK_THROWS(parse_mode("(<=2 & >=3)"));
  CHECK_THROWS(parse_mode("=0"));
}

TEST_CASE("predicate table") {
  CHECK(mode_predicate(Mode::exactly(2), 2, true));
  CHECK_FALSE(mode_predicate(Mode::exactly(2), 1, false));
  CHECK(mode_predicate(Mode::at_most(2), 0, true));
  CHECK_FALSE(mode_predicate(Mode::at_most(2), 3, false));
  CHECK(mode_predicate(Mode::at_least(2), 9, true));
  CHECK(mode_predicate(Mode::star(), 0, true));
  CHECK(mode_predicate(Mode::t(), 5, false));
  CHECK_FALSE(mode_predicate(Mode::t(), 5, true));
  CHECK(mode_predicate(Mode::between(2, 3), 3, true));
  CHECK_FALSE(mode_predicate(Mode::between(2, 3), 4, true));
  CHECK(mode_predicate(Mode::t_and(Mode::exactly(2)), 2, false));
  CHECK_FALSE(mode_predicate(Mode::t_and(Mode::exactly(2)), 2, true));
  CHECK_FALSE(mode_predicate(Mode::t_and(Mode::at_least(2)), 1, false));
}

TEST_CASE("step limits and saturation") {
  CHECK(Mode::exactly(3).step_limit() == 3u);
  CHECK(Mode::t_and(Mode::at_most(2)).step_limit() == 2u);
  CHECK(Mode::between(2, 5).step_limit() == 5u);
  CHECK_FALSE(Mode::at_least(2).step_limit());
  CHECK_FALSE(Mode::t().step_limit());
  CHECK(Mode::at_least(4).saturation() == 4u);
  CHECK(Mode::t_and(Mode::at_least(3)).saturation() == 3u);
}

TEST_CASE("scaling multiplies the parameters") {
  CHECK(scale_mode(Mode::t_and(Mode::exactly(2)), 3) == Mode::t_and(Mode::exactly(6)));
  CHECK(scale_mode(Mode::between(1, 2), 2) == Mode::between(2, 4));
  CHECK(scale_mode(Mode::t(), 5) == Mode::t());
  CHECK_THROWS(scale_mode(Mode::t(), 0));
}

TEST_CASE("conjunctions of basic modes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> kd(1, 5), md(0, 8), coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = kd(rng);
    const auto m = static_cast<std::size_t>(md(rng));
    const bool app = coin(rng);
    const std::array basics{Mode::exactly(k), Mode::at_most(k), Mode::at_least(k), Mode::t(), Mode::star()};
    for (const auto& f : basics) {
      const std::array with_star{Mode::star(), f};
      CHECK(conjunction_predicate(with_star, m, app) == mode_predicate(f, m, app));
    }
    const std::array interval{Mode::at_least(k), Mode::at_most(k + 1)};
    CHECK(conjunction_predicate(interval, m, app) == mode_predicate(Mode::between(k, k + 1), m, app));
  }
  CHECK(conjunction_predicate(std::span<const Mode>{}, 3, true));
}
