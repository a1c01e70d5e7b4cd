#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"
#include "ldlf/metric.hpp"
#include "ldlf/parser.hpp"

using namespace ldlf;
using namespace ldlf::testing;

namespace {

ParseError error_of(const std::string& src) {
  try {
    parse_formula(src);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << src);
  return ParseError(0, 0, "", "");
}

}  // namespace

TEST_CASE("formula grammar") {
  CHECK(fml("X[20,40) school") == Formula::metric_next(20, 40, Formula::atom("school")));
  CHECK(fml("<(a? ; tt)*> b") ==
        Formula::diamond(Path::star(Path::seq(Path::test(Formula::atom("a")), Path::step(Formula::top()))),
                         Formula::atom("b")));
  CHECK(fml("X[0,inf) a") == Formula::metric_next(0, std::nullopt, Formula::atom("a")));
  CHECK(fml("WX[1,3) a") == Formula::weak_metric_next(1, 3, Formula::atom("a")));
}

TEST_CASE("precedence and associativity") {
  using F = Formula;
  const F a = F::atom("a"), b = F::atom("b"), c = F::atom("c");
  CHECK(fml("a | b & c") == F::disj(a, F::conj(b, c)));
  CHECK(fml("a -> b -> c") == F::implies(a, F::implies(b, c)));
  CHECK(fml("a U b U c") == F::until(a, F::until(b, c)));
  CHECK(fml("a & b U c") == F::conj(a, F::until(b, c)));
  CHECK(fml("!a U b") == F::until(F::negate(a), b));
  CHECK(fml("X a & b") == F::conj(F::next(a), b));
  CHECK(fml("<a> b & c") == F::conj(F::diamond(Path::step(a), b), c));
  CHECK(fml("a S b T c") == F::since(a, F::trigger(b, c)));
  CHECK(fml("a & b & c") == F::conj(F::conj(a, b), c));
}

TEST_CASE("path grammar") {
  using F = Formula;
  const F a = F::atom("a"), b = F::atom("b");
  CHECK(fml("<a + b ; a*> tt").path() == Path::alt(Path::step(a), Path::seq(Path::step(b), Path::star(Path::step(a)))));
  CHECK(fml("[(a + b)*] tt").path() == Path::star(Path::alt(Path::step(a), Path::step(b))));
  CHECK(fml("<(X a)?> tt").path() == Path::test(F::next(a)));
  CHECK(fml("<a & !b> tt").path() == Path::step(F::conj(a, F::negate(b))));
}

TEST_CASE("comments and whitespace") {
  CHECK(fml("a % trailing comment\n & b") == fml("a & b"));
  CHECK(fml("  F\n\ta  ") == fml("F a"));
}

TEST_CASE("parse errors carry positions") {
  ParseError e = error_of("a U");
  CHECK(e.line() == 1);
  CHECK(e.column() == 4);
  CHECK(e.expected() == "formula");

  ParseError m = error_of("X[5,5) a");
  CHECK(m.line() == 1);

  ParseError g = error_of("<X a> b");
  CHECK(g.line() == 1);

  ParseError multi = error_of("a &\n  & b");
  CHECK(multi.line() == 2);
  CHECK(multi.column() == 3);

  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("A"), ParseError);
  CHECK_THROWS_AS(parse_formula("a $ b"), ParseError);
  CHECK_THROWS_AS(parse_formula("<a?" "?> tt"), ParseError);
}

TEST_CASE("error positions stay within the input") {
  for (std::string src : {"(", "a &", "<a", "[a*", "X[1", "X[1,", "X[1,2", "X[1,2)", "a U (b", "<(a?;> b"}) {
    try {
      parse_formula(src);
      FAIL("parsed " << src);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
      CHECK(e.column() <= src.size() + 1);
    }
  }
}

TEST_CASE("trace grammar") {
  const auto t = timed("{drive}@0;{school}@25");
  CHECK(t.letters == std::vector<Letter>{Letter{"drive"}, Letter{"school"}});
  CHECK(t.times == std::vector<std::uint64_t>{0, 25});
  CHECK(tr("eps").empty());
  CHECK(tr("{b,a};{}") == Trace{{Letter{"a", "b"}, Letter{}}});
  CHECK(tr(" { a } ; { } ") == Trace{{Letter{"a"}, Letter{}}});
  CHECK_THROWS_AS(parse_trace("{a}@5;{b}@3"), ParseError);
  CHECK_THROWS_AS(parse_trace("{a}@5;{b}"), ParseError);
  CHECK_THROWS_AS(parse_trace("{a};#"), ParseError);
  CHECK_THROWS_AS(parse_trace(""), ParseError);
  CHECK_THROWS_AS(parse_trace("{a};"), ParseError);
}

TEST_CASE("program grammar") {
  MetricProgram p = parse_program("X[20,40) school :- drive.");
  REQUIRE(p.rules.size() == 1);
  CHECK(p.rules[0].head == Head{MetricHead{20, 40, "school"}});
  CHECK(p.rules[0].body == std::vector<BodyLiteral>{{"drive", true}});

  MetricProgram ic = parse_program(":- drive, not licensed.");
  REQUIRE(ic.rules.size() == 1);
  CHECK(std::holds_alternative<std::monostate>(ic.rules[0].head));
  CHECK(ic.rules[0].body == std::vector<BodyLiteral>{{"drive", true}, {"licensed", false}});

  MetricProgram facts = parse_program("% comment\nalive.\nhome :- not away.\n");
  REQUIRE(facts.rules.size() == 2);
  CHECK(facts.rules[0].body.empty());
  CHECK(facts.universe() == std::set<std::string>{"alive", "away", "home"});

  CHECK(parse_program("").rules.empty());
  CHECK_THROWS_AS(parse_program("school :- X[1,2) drive."), ParseError);
  CHECK_THROWS_AS(parse_program("X[3,2) school :- drive."), ParseError);
  CHECK_THROWS_AS(parse_program("F school :- drive."), ParseError);
  CHECK_THROWS_AS(parse_program("school :- drive"), ParseError);
}

TEST_CASE("rule formatting round-trips") {
  for (std::string src : {"X[20,40) school :- drive.", ":- drive, not licensed.", "alive.", "X[0,inf) b :- a."}) {
    MetricProgram p = parse_program(src);
    REQUIRE(p.rules.size() == 1);
    CHECK(format_rule(p.rules[0]) == src);
  }
}

TEST_CASE("random formulas round-trip") {
  std::mt19937_64 rng(2024);
  GenOptions o;
  o.past = true;
  o.metric = true;
  o.max_size = 14;
  for (int k = 0; k < 500; ++k) {
    Formula f = random_formula(rng, o);
    const std::string text = format(f);
    Formula g = parse_formula(text);
    REQUIRE_MESSAGE(g == f, text);
    CHECK(format(g) == text);
  }
}

TEST_CASE("random traces round-trip") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    Trace t = random_trace(rng, {"a", "b", "c"}, 5);
    CHECK(tr(format_trace(t)) == t);
    TimedTrace w = random_timed_trace(rng, {"a", "b"}, 5, 50);
    if (w.size() == 0) continue;
    CHECK(timed(format_trace(w)) == w);
  }
}
