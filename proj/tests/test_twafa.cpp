#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"
#include "ldlf/afa.hpp"
#include "ldlf/oracle.hpp"
#include "ldlf/twafa.hpp"

using namespace ldlf;
using namespace ldlf::testing;

namespace {

TwoAfa two(const std::string& src) { return translate_2afa(normalize(fml(src))); }

TwoAfa two(const Formula& f) { return translate_2afa(normalize(f), Alphabet({"a", "b"})); }

}  // namespace

TEST_CASE("2afa examples") {
  TwoAfa y = two("Y a");
  for (const Trace& t : enumerate_traces({"a"}, 4)) CHECK_FALSE(twafa_accepts(y, t));

  TwoAfa f = two("F (b & Y a)");
  CHECK(twafa_accepts(f, tr("{a};{b}")));
  CHECK_FALSE(twafa_accepts(f, tr("{b};{a}")));

  CHECK(twafa_accepts(two("tt"), tr("eps")));
  for (const Trace& t : small_traces()) CHECK_FALSE(twafa_accepts(two(fml("<(tt?)*> ff")), t));
}

TEST_CASE("progress-free stars need no guard") {
  for (std::string src : {"<(tt?)*> a", "<(a?)*> b", "[(tt?)*] a", "[(a? + b?)*] b", "<((a?)* ; tt)*> b",
                          "[(tt? ; (b?)*)*] a"}) {
    TwoAfa a = two(fml(src));
    for (const Trace& t : small_traces()) REQUIRE_MESSAGE(twafa_accepts(a, t) == holds(fml(src), t), src);
  }
}

TEST_CASE("no left move at BEGIN, no right move at END") {
  std::mt19937_64 rng(61);
  GenOptions o;
  o.past = true;
  for (int k = 0; k < 150; ++k) {
    TwoAfa a = two(random_formula(rng, o));
    for (std::size_t q = 0; q < a.size(); ++q) {
      a.transition(q, MarkedLetter::begin()).for_each_leaf([](const TwoAfaLeaf& l) { CHECK(l.move != Move::L); });
      a.transition(q, MarkedLetter::end()).for_each_leaf([](const TwoAfaLeaf& l) { CHECK(l.move != Move::R); });
      for (std::uint32_t m = 0; m < 4; ++m)
        a.transition(q, MarkedLetter::letter(m)).for_each_leaf([&](const TwoAfaLeaf& l) { CHECK(l.state < a.size()); });
    }
  }
}

TEST_CASE("fixpoint converges within the configuration bound") {
  std::mt19937_64 rng(67);
  GenOptions o;
  o.past = true;
  const auto traces = small_traces();
  for (int k = 0; k < 60; ++k) {
    TwoAfa a = two(random_formula(rng, o));
    for (const Trace& t : traces) {
      TwoAfaRun run = twafa_run(a, t);
      CHECK(run.iterations <= a.size() * (t.size() + 2));
    }
  }
}

TEST_CASE("2afa agrees with oracle and afa") {
  std::mt19937_64 rng(71);
  const auto traces = small_traces();
  GenOptions future;
  for (int k = 0; k < 100; ++k) {
    Formula f = random_formula(rng, future);
    TwoAfa a2 = two(f);
    Afa a1 = translate_afa(normalize(f), Alphabet({"a", "b"}));
    for (const Trace& t : traces) {
      const bool v = holds(f, t);
      REQUIRE_MESSAGE(twafa_accepts(a2, t) == v, format(f) << " on " << format_trace(t));
      REQUIRE(afa_accepts(a1, t) == v);
    }
  }
  GenOptions past;
  past.past = true;
  for (int k = 0; k < 150; ++k) {
    Formula f = random_formula(rng, past);
    TwoAfa a2 = two(f);
    for (const Trace& t : traces) REQUIRE_MESSAGE(twafa_accepts(a2, t) == holds(f, t), format(f) << " on " << format_trace(t));
    if (has_past(f)) CHECK_THROWS_AS(translate_afa(normalize(f)), UnsupportedOperatorError);
  }
}

TEST_CASE("2afa rejects metric formulas and foreign letters") {
  CHECK_THROWS_AS(translate_2afa(fml("X[1,2) a")), UnsupportedOperatorError);
  CHECK_THROWS_AS(translate_2afa(fml("F a")), std::invalid_argument);
  CHECK_THROWS_AS(twafa_accepts(two("a"), tr("{z}")), AlphabetError);
}

TEST_CASE("construction is deterministic") {
  TwoAfa a = two("F (b & Y a) | [a*] (a S b)");
  TwoAfa b = two("F (b & Y a) | [a*] (a S b)");
  REQUIRE(a.size() == b.size());
  for (std::size_t q = 0; q < a.size(); ++q) CHECK(a.state(q) == b.state(q));
}
