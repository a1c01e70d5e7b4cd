#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"
#include "ldlf/batch.hpp"
#include "ldlf/oracle.hpp"

using namespace ldlf;
using namespace ldlf::testing;

TEST_CASE("backend names round-trip") {
  for (Backend b : {Backend::Oracle, Backend::Afa, Backend::Nfa, Backend::Dfa, Backend::TwoAfa})
    CHECK(parse_backend(backend_name(b)) == b);
  CHECK_FALSE(parse_backend("mona"));
}

TEST_CASE("parallel verdicts equal the serial reference") {
  std::mt19937_64 rng(83);
  GenOptions o;
  std::vector<Trace> traces;
  for (int k = 0; k < 2000; ++k) traces.push_back(random_trace(rng, {"a", "b", "c"}, 8));
  for (int k = 0; k < 20; ++k) {
    const Formula f = random_formula(rng, o);
    for (Backend b : {Backend::Oracle, Backend::Afa, Backend::Nfa, Backend::Dfa, Backend::TwoAfa}) {
      const Acceptor acc(f, b);
      const auto par = verdicts(acc, traces);
      const auto ser = verdicts_serial(acc, traces);
      REQUIRE(par == ser);
      for (std::size_t k2 = 0; k2 < 50; ++k2) CHECK(ser[k2] == holds(f, traces[k2]));
    }
  }
}

TEST_CASE("foreign atoms are projected away") {
  const Acceptor acc(fml("F a"), Backend::Dfa);
  CHECK(acc.accepts(tr("{z};{a,z}")));
  CHECK_FALSE(acc.accepts(tr("{z}")));
}

TEST_CASE("past formulas need the oracle or the 2AFA") {
  CHECK_NOTHROW(Acceptor(fml("F (b & Y a)"), Backend::TwoAfa));
  CHECK_THROWS(Acceptor(fml("F (b & Y a)"), Backend::Dfa));
}
