#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"
#include "ldlf/oracle.hpp"

using namespace ldlf;
using namespace ldlf::testing;

namespace {

using Pairs = std::vector<std::pair<Position, Position>>;

}  // namespace

TEST_CASE("eval examples") {
  CHECK(eval(fml("G a"), tr("eps"), 0));
  CHECK(eval(fml("<a> tt"), tr("{a}"), 0));
  CHECK(eval(fml("a U b"), tr("{a};{a};{b}"), 0));
  CHECK_FALSE(eval(fml("a U b"), tr("{a};{};{b}"), 0));
  CHECK(holds(fml("tt"), tr("eps")));
  CHECK_FALSE(holds(fml("a"), tr("eps")));
  CHECK(holds(fml("F b"), tr("{a};{b}")));
}

TEST_CASE("end point conventions") {
  const Trace one = tr("{a}");
  CHECK(eval(fml("<tt> tt"), one, 0));
  CHECK_FALSE(eval(fml("<tt> tt"), one, 1));
  CHECK(eval(fml("X tt"), one, 0));
  CHECK_FALSE(eval(fml("X a"), one, 0));
  CHECK(eval(fml("WX a"), one, 1));
  CHECK_FALSE(eval(fml("X a"), one, 1));
  CHECK(eval(fml("G a"), one, 0));
  CHECK_FALSE(eval(fml("F !a"), one, 0));
  CHECK(eval(fml("!a"), one, 1));
}

TEST_CASE("past operators") {
  const Trace t = tr("{a};{b};{}");
  CHECK_FALSE(eval(fml("Y a"), t, 0));
  CHECK(eval(fml("WY a"), t, 0));
  CHECK(eval(fml("Y a"), t, 1));
  CHECK(eval(fml("tt S a"), t, 2));
  CHECK_FALSE(eval(fml("b S a"), t, 2));
  CHECK(eval(fml("b S a"), t, 1));
  CHECK(eval(fml("ff T tt"), t, 2));
  CHECK(holds(fml("F (b & Y a)"), tr("{a};{b}")));
  CHECK_FALSE(holds(fml("F (b & Y a)"), tr("{b};{a}")));
  CHECK(eval(fml("Y b"), t, 2));
  CHECK_FALSE(eval(fml("Y b"), t, 3));
  CHECK(eval(fml("Y !a"), t, 3));
}

TEST_CASE("path_relation") {
  const Trace t = tr("{a};{}");
  CHECK(path_relation(Path::step(Formula::top()), t).pairs() == Pairs{{0, 1}, {1, 2}});
  CHECK(path_relation(Path::test(Formula::atom("a")), t).pairs() == Pairs{{0, 0}});
  // Star only lands on letter positions (see the oracle header).
  CHECK(path_relation(Path::star(Path::step(Formula::top())), tr("{a}")).pairs() == Pairs{{0, 0}});
  CHECK(path_relation(Path::star(Path::step(Formula::top())), t).pairs() == Pairs{{0, 0}, {0, 1}, {1, 1}});
  CHECK(path_relation(Path::seq(Path::step(Formula::atom("a")), Path::step(Formula::top())), t).pairs() ==
        Pairs{{0, 2}});
}

TEST_CASE("star idempotence") {
  std::mt19937_64 rng(3);
  GenOptions o;
  for (int k = 0; k < 100; ++k) {
    Formula f = random_formula_of_size(rng, 6, o);
    Path p = Path::step(Formula::atom("a"));
    if (f.op() == Op::Diamond || f.op() == Op::Box) p = f.path();
    for (int len = 0; len <= 4; ++len) {
      Trace t = random_trace(rng, {"a", "b"}, 4);
      CHECK(path_relation(Path::star(Path::star(p)), t) == path_relation(Path::star(p), t));
    }
  }
}

TEST_CASE("sugar coherence on all small traces") {
  const auto traces = small_traces();
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"F a", "<tt*> a"},          {"G a", "[tt*] a"},        {"a U b", "<(a? ; tt)*> b"},
      {"a R b", "[((!a)? ; tt)*] b"}, {"X a", "<tt> a"},      {"WX a", "[tt] a"},
      {"F (a & X b)", "<tt*> <a> b"},
  };
  for (const auto& [lhs, rhs] : pairs)
    for (const Trace& t : traces)
      for (Position i = 0; i <= t.size(); ++i) CHECK_MESSAGE(eval(fml(lhs), t, i) == eval(fml(rhs), t, i), lhs);
}

TEST_CASE("eval_timed") {
  CHECK(eval_timed(fml("X[20,40) school"), timed("{drive}@0;{school}@25"), 0));
  CHECK_FALSE(eval_timed(fml("X[20,40) school"), timed("{drive}@0;{school}@45"), 0));
  CHECK_FALSE(eval_timed(fml("X[0,inf) a"), timed("{a}@0"), 0));
  CHECK(eval_timed(fml("!X[20,40) school"), timed("{drive}@0;{school}@45"), 0));
  CHECK(eval_timed(nnf(fml("!X[20,40) school")), timed("{drive}@0;{school}@45"), 0));
  CHECK(eval_timed(nnf(fml("!X[0,inf) a")), timed("{a}@0"), 0));
  CHECK(eval_timed(fml("X[20,40) school"), timed("{drive}@0;{school}@20"), 0));
  CHECK_FALSE(eval_timed(fml("X[20,40) school"), timed("{drive}@0;{school}@40"), 0));
  CHECK_THROWS_AS(eval(fml("X[1,2) a"), tr("{a};{a}"), 0), UntimedMetricError);
  CHECK(eval_timed(fml("F b"), timed("{a}@0;{b}@3"), 0));
}

TEST_CASE("metric duality on random timed traces") {
  std::mt19937_64 rng(17);
  GenOptions o;
  o.metric = true;
  o.past = true;
  for (int k = 0; k < 200; ++k) {
    Formula f = random_formula(rng, o);
    Formula neg = nnf(Formula::negate(f));
    for (int j = 0; j < 10; ++j) {
      TimedTrace t = random_timed_trace(rng, {"a", "b"}, 4, 40);
      for (Position i = 0; i <= t.size(); ++i) REQUIRE(eval_timed(neg, t, i) == !eval_timed(f, t, i));
    }
  }
}

TEST_CASE("evaluation is deterministic") {
  std::mt19937_64 rng(23);
  GenOptions o;
  o.past = true;
  const auto traces = small_traces();
  for (int k = 0; k < 30; ++k) {
    Formula f = random_formula(rng, o);
    for (const Trace& t : traces) CHECK(holds(f, t) == holds(f, t));
  }
}
