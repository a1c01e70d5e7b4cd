#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "ldlf/trace.hpp"

using namespace ldlf;
using namespace ldlf::testing;

TEST_CASE("enumerate_traces counts and order") {
  auto one = enumerate_traces({"a"}, 1);
  REQUIRE(one.size() == 3);
  CHECK(format_trace(one[0]) == "eps");
  CHECK(format_trace(one[1]) == "{}");
  CHECK(format_trace(one[2]) == "{a}");

  CHECK(enumerate_traces({"a", "b"}, 2).size() == 21);
  auto zero = enumerate_traces({"a"}, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  auto two = enumerate_traces({"a", "b"}, 2);
  CHECK(format_trace(two[5]) == "{};{}");
  CHECK(format_trace(two[6]) == "{};{a}");
  CHECK(format_trace(two[20]) == "{a,b};{a,b}");
}

TEST_CASE("enumeration has no duplicates and matches the closed form") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t len = 0; len <= 3; ++len) {
      std::set<std::string> names;
      for (std::size_t k = 0; k < n; ++k) names.insert(std::string(1, static_cast<char>('a' + k)));
      auto all = enumerate_traces(names, len);
      std::set<std::string> distinct;
      for (const Trace& t : all) distinct.insert(format_trace(t));
      CHECK(distinct.size() == all.size());
      std::size_t expected = 0, power = 1;
      for (std::size_t k = 0; k <= len; ++k, power *= (std::size_t{1} << n)) expected += power;
      CHECK(all.size() == expected);
      CHECK(trace_count(n, len) == expected);
    }
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(trace_count(9, 1), SizeLimitError);
  CHECK_THROWS_AS(enumerate_traces({"a", "b", "c", "d"}, 6), SizeLimitError);
  CHECK_NOTHROW(trace_count(2, 9));
  CHECK_THROWS_AS(trace_count(2, 10), SizeLimitError);
}

TEST_CASE("format_trace") {
  CHECK(format_trace(Trace{}) == "eps");
  CHECK(format_trace(Trace{{Letter{"b", "a"}, Letter{}}}) == "{a,b};{}");
  CHECK(format_trace(TimedTrace{{Letter{"drive"}, Letter{"school"}}, {0, 25}}) == "{drive}@0;{school}@25");
}

TEST_CASE("letters are canonical sets") {
  CHECK(Letter{"b", "a", "b"} == Letter{"a", "b"});
  CHECK(Letter{"a"}.contains("a"));
  CHECK_FALSE(Letter{"a"}.contains("b"));
}

TEST_CASE("alphabet masks") {
  Alphabet ap({"b", "a"});
  CHECK(ap.names() == std::vector<std::string>{"a", "b"});
  CHECK(ap.mask(Letter{"b"}) == 2);
  CHECK(ap.letter(3) == Letter{"a", "b"});
  CHECK_THROWS_AS(ap.mask(Letter{"c"}), AlphabetError);
  std::set<std::string> many;
  for (int k = 0; k < 17; ++k) many.insert("p" + std::to_string(k));
  CHECK_THROWS_AS(Alphabet{many}, SizeLimitError);
}

TEST_CASE("timed trace validation") {
  CHECK_NOTHROW((TimedTrace{{Letter{}, Letter{}}, {3, 3}}.validate()));
  CHECK_THROWS_AS((TimedTrace{{Letter{}, Letter{}}, {3, 2}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((TimedTrace{{Letter{}}, {}}.validate()), std::invalid_argument);
  CHECK(timed("{a}@0;{b}@4").untimed() == tr("{a};{b}"));
}
