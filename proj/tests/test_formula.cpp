#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"
#include "ldlf/afa.hpp"
#include "ldlf/formula.hpp"
#include "ldlf/oracle.hpp"

using namespace ldlf;
using namespace ldlf::testing;

TEST_CASE("nnf pushes negation to atoms") {
  CHECK(format(nnf(fml("!(a & b)"))) == "!a | !b");
  CHECK(format(nnf(fml("!<tt*> a"))) == "[tt*] !a");
  CHECK(nnf(fml("!(a U b)")) == fml("(!a) R (!b)"));
  CHECK(nnf(fml("!X a")) == fml("WX !a"));
  CHECK(nnf(fml("a -> b")) == fml("!a | b"));
  CHECK(nnf(fml("!Y a")) == fml("WY !a"));
  CHECK(nnf(fml("!(a S b)")) == fml("!a T !b"));
  CHECK(nnf(fml("!X[20,40) school")) == Formula::weak_metric_next(20, 40, fml("!school")));
  CHECK(nnf(fml("!!a")) == fml("a"));
  CHECK(nnf(fml("!tt")) == fml("ff"));
}

TEST_CASE("nnf descends into path tests") {
  Formula f = nnf(fml("<(!(a & b))? ; tt> c"));
  CHECK(is_nnf(f));
  CHECK(f == fml("<(!a | !b)? ; tt> c"));
}

TEST_CASE("to_dynamic_core rewrites temporal sugar") {
  CHECK(format(to_dynamic_core(fml("F a"))) == "<tt*> a");
  CHECK(format(to_dynamic_core(fml("a U b"))) == "<(a? ; tt)*> b");
  CHECK(to_dynamic_core(fml("G a")) == fml("[tt*] a"));
  CHECK(to_dynamic_core(fml("X a")) == fml("<tt> a"));
  CHECK(to_dynamic_core(fml("WX a")) == fml("[tt] a"));
  CHECK(to_dynamic_core(nnf(fml("a R b"))) == fml("[((!a)? ; tt)*] b"));
  CHECK(to_dynamic_core(fml("Y F a")) == fml("Y <tt*> a"));
  CHECK(to_dynamic_core(fml("X[1,2) F a")) == fml("X[1,2) <tt*> a"));
}

TEST_CASE("atoms") {
  CHECK(atoms(fml("a & !b")) == std::set<std::string>{"a", "b"});
  CHECK(atoms(fml("<(c?)*> tt")) == std::set<std::string>{"c"});
  CHECK(atoms(fml("tt")).empty());
  CHECK(atoms(fml("<d & e> [f?] g")) == std::set<std::string>{"d", "e", "f", "g"});
}

TEST_CASE("format") {
  CHECK(format(Formula::conj(Formula::atom("a"), Formula::atom("b"))) == "a & b");
  CHECK(format(Formula::metric_next(20, 40, Formula::atom("school"))) == "X[20,40) school");
  CHECK(format(Formula::diamond(Path::star(Path::step(Formula::top())), Formula::atom("a"))) == "<tt*> a");
  CHECK(format(Formula::metric_next(3, std::nullopt, Formula::atom("a"))) == "X[3,inf) a");
  CHECK(format(fml("(a | b) & c")) == "(a | b) & c");
  CHECK(format(fml("a -> b -> c")) == "a -> b -> c");
  CHECK(format(fml("(a -> b) -> c")) == "(a -> b) -> c");
}

TEST_CASE("metric interval must be non-empty") {
  CHECK_THROWS_AS(Formula::metric_next(5, 5, Formula::atom("a")), std::invalid_argument);
  CHECK_NOTHROW(Formula::metric_next(0, std::nullopt, Formula::atom("a")));
}

TEST_CASE("structural equality and hashing") {
  CHECK(fml("a & b") == fml("a & b"));
  CHECK(fml("a & b") != fml("b & a"));
  CHECK(fml("<tt*> a").hash() == fml("<tt*> a").hash());
  CHECK(fml("<a*> b") != fml("[a*] b"));
  CHECK(fml("X[1,2) a") != fml("X[1,3) a"));
}

TEST_CASE("closure") {
  StateSet a = closure(fml("a"));
  REQUIRE(a.size() == 1);
  CHECK(a[0] == fml("a"));

  StateSet f = closure(fml("<tt*> a"));
  CHECK(f[0] == fml("<tt*> a"));
  CHECK(f.find(fml("a")).has_value());

  StateSet u = closure(fml("<(a? ; tt)*> b"));
  CHECK(u[0] == fml("<(a? ; tt)*> b"));
  const std::size_t n = u.size();
  CHECK(n == closure(fml("<(a? ; tt)*> b")).size());
  CHECK(n == 6);
}

TEST_CASE("closure is closed under expansion") {
  std::mt19937_64 rng(11);
  GenOptions o;
  for (int k = 0; k < 200; ++k) {
    Formula f = normalize(random_formula(rng, o));
    StateSet s = closure(f);
    REQUIRE(s[0] == f);
    for (const Formula& q : s)
      for (const Formula& r : expansion(q)) CHECK(s.find(r).has_value());
  }
}

TEST_CASE("generator sizes are exact") {
  std::mt19937_64 rng(5);
  GenOptions o;
  o.past = true;
  o.metric = true;
  for (std::size_t size = 1; size <= 12; ++size)
    for (int k = 0; k < 20; ++k) CHECK(random_formula_of_size(rng, size, o).size() == size);
}

TEST_CASE("core corpus is NNF dynamic core and duplicate-free") {
  auto corpus = core_corpus(5, {"a", "b"});
  std::set<Formula> seen(corpus.begin(), corpus.end());
  CHECK(seen.size() == corpus.size());
  for (const Formula& f : corpus) {
    CHECK(f.size() <= 5);
    CHECK(is_nnf(f));
    CHECK(is_dynamic_core(f));
  }
  CHECK(corpus.size() == 782);
}

TEST_CASE("nnf and core preserve semantics; nnf is idempotent") {
  std::mt19937_64 rng(7);
  GenOptions o;
  o.past = true;
  const auto traces = small_traces();
  for (int k = 0; k < 150; ++k) {
    Formula f = random_formula(rng, o);
    Formula n = nnf(f);
    Formula c = to_dynamic_core(n);
    CHECK(is_nnf(n));
    CHECK(is_nnf(c));
    CHECK(is_dynamic_core(c));
    CHECK(nnf(n) == n);
    for (const Trace& t : traces) {
      const bool v = eval(f, t, 0);
      REQUIRE(eval(n, t, 0) == v);
      REQUIRE(eval(c, t, 0) == v);
      REQUIRE(eval(nnf(Formula::negate(f)), t, 0) == !v);
    }
  }
}

TEST_CASE("predicates") {
  CHECK(is_propositional(fml("a & !(b -> tt)")));
  CHECK_FALSE(is_propositional(fml("X a")));
  CHECK(has_past(fml("F (b & Y a)")));
  CHECK_FALSE(has_past(fml("F b")));
  CHECK(has_metric(fml("a | X[1,2) b")));
  CHECK(is_valid_atom_name("school_2"));
  CHECK_FALSE(is_valid_atom_name("School"));
  CHECK_FALSE(is_valid_atom_name("2a"));
}
