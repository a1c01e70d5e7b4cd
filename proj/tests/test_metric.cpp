#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "helpers.hpp"
#include "ldlf/metric.hpp"
#include "ldlf/oracle.hpp"

using namespace ldlf;
using namespace ldlf::testing;

namespace {

const char* school = "X[20,40) school :- drive.";

std::vector<std::uint64_t> witness(const ConstraintSystem& sys) {
  auto fe = feasible(sys);
  REQUIRE(std::holds_alternative<Witness>(fe));
  return std::get<Witness>(fe).times;
}

}  // namespace

TEST_CASE("check_program examples") {
  MetricProgram p = parse_program(school);
  CHECK(check_program(p, timed("{drive}@0;{school}@25")).empty());
  CHECK(check_program(p, timed("{drive}@0;{school}@45")) == std::vector<Violation>{{0, 0}});
  CHECK(check_program(parse_program(":- drive, not licensed."), timed("{drive}@0")) ==
        std::vector<Violation>{{0, 0}});
  CHECK(check_program(parse_program(":- drive, not licensed."), timed("{drive,licensed}@0")).empty());
}

TEST_CASE("check_program edge cases") {
  MetricProgram p = parse_program(school);
  CHECK(check_program(p, timed("{drive}@7")) == std::vector<Violation>{{0, 0}});
  CHECK(check_program(p, timed("{drive}@0;{school}@20")).empty());
  CHECK(check_program(p, timed("{drive}@0;{school}@40")) == std::vector<Violation>{{0, 0}});
  CHECK(check_program(p, TimedTrace{}).empty());
  MetricProgram facts = parse_program("alive.\nX[0,inf) b :- a.");
  CHECK(check_program(facts, timed("{alive,a}@0;{b}@3")) == std::vector<Violation>{{0, 1}});
  CHECK(check_program(facts, timed("{alive,extra}@0")).empty());
}

TEST_CASE("extract_constraints examples") {
  MetricProgram p = parse_program(school);
  Extraction ex = extract_constraints(p, tr("{drive};{school}"));
  REQUIRE(std::holds_alternative<ConstraintSystem>(ex));
  const auto& sys = std::get<ConstraintSystem>(ex);
  CHECK(sys.n_vars == 2);
  CHECK(sys.constraints == std::vector<DiffConstraint>{{0, 1, 20, 39}, {0, 1, 0, std::nullopt}});

  Extraction bad = extract_constraints(p, tr("{drive};{}"));
  REQUIRE(std::holds_alternative<Violation>(bad));
  CHECK(std::get<Violation>(bad) == Violation{0, 0});

  Extraction plain = extract_constraints(parse_program("b :- a."), tr("{a,b};{c}"));
  REQUIRE(std::holds_alternative<ConstraintSystem>(plain));
  CHECK(std::get<ConstraintSystem>(plain).constraints == std::vector<DiffConstraint>{{0, 1, 0, std::nullopt}});

  Extraction strict = extract_constraints(parse_program(""), tr("{};{};{}"), {true});
  CHECK(std::get<ConstraintSystem>(strict).constraints ==
        std::vector<DiffConstraint>{{0, 1, 1, std::nullopt}, {1, 2, 1, std::nullopt}});
}

TEST_CASE("feasible examples") {
  ConstraintSystem one{2, {{0, 1, 20, 39}}};
  CHECK(witness(one) == std::vector<std::uint64_t>{0, 20});

  ConstraintSystem clash{2, {{0, 1, 5, 9}, {0, 1, 20, 29}}};
  auto fe = feasible(clash);
  REQUIRE(std::holds_alternative<Infeasible>(fe));
  auto idx = std::get<Infeasible>(fe).constraint_indices();
  std::sort(idx.begin(), idx.end());
  CHECK(idx == std::vector<std::size_t>{0, 1});

  ConstraintSystem mono{3, {{0, 1, 0, std::nullopt}, {1, 2, 0, std::nullopt}}};
  CHECK(witness(mono) == std::vector<std::uint64_t>{0, 0, 0});

  CHECK(witness(ConstraintSystem{0, {}}).empty());
}

TEST_CASE("upper bounds pull earlier variables up") {
  // t2 - t1 <= 5 with t2 >= 30 forces t1 >= 25.
  ConstraintSystem sys{3, {{0, 2, 30, std::nullopt}, {1, 2, 0, 5}}};
  CHECK(witness(sys) == std::vector<std::uint64_t>{0, 25, 30});
  // t0 is pinned to 0: t1 - t0 <= -1 cannot hold with t1 >= 0.
  ConstraintSystem neg{2, {{1, 0, 1, std::nullopt}}};
  auto fe = feasible(neg);
  REQUIRE(std::holds_alternative<Infeasible>(fe));
  const auto& cycle = std::get<Infeasible>(fe).cycle;
  std::int64_t weight = 0;
  for (const CycleEdge& e : cycle) weight += e.weight;
  CHECK(weight > 0);
  CHECK(cycle.front().from == cycle.back().to);
}

TEST_CASE("feasible agrees with brute force; witnesses are least") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 120; ++k) {
    ConstraintSystem sys = random_system(rng, 3, 50);
    BruteForce bf = brute_force(sys, 200);
    Feasibility fe = feasible(sys);
    REQUIRE(std::holds_alternative<Witness>(fe) == bf.feasible);
    if (const auto* w = std::get_if<Witness>(&fe)) {
      CHECK(sys.satisfied_by(w->times));
      CHECK(w->times == bf.least);
      for (std::size_t i = 1; i < w->times.size(); ++i) {
        if (w->times[i] == 0) continue;
        auto lower = w->times;
        --lower[i];
        CHECK_FALSE(sys.satisfied_by(lower));
      }
    } else {
      std::int64_t weight = 0;
      for (const CycleEdge& e : std::get<Infeasible>(fe).cycle) weight += e.weight;
      CHECK(weight > 0);
    }
  }
}

TEST_CASE("enumerate_models examples") {
  MetricProgram p = parse_program(school);
  auto models = enumerate_models(p, {"drive", "school"}, 2);
  std::vector<std::string> text;
  for (const auto& m : models) text.push_back(format_trace(m));
  CHECK(std::find(text.begin(), text.end(), "{drive}@0;{school}@20") != text.end());
  for (const auto& m : models) {
    if (m.letters[0].contains("drive")) CHECK(m.letters[1].contains("school"));
  }
  CHECK(models.size() == 6);

  auto no_drive = enumerate_models(parse_program(":- drive."), {"drive", "school"}, 1);
  REQUIRE(no_drive.size() == 2);
  CHECK(format_trace(no_drive[0]) == "{}@0");
  CHECK(format_trace(no_drive[1]) == "{school}@0");

  auto all = enumerate_models(parse_program(""), {"a", "b"}, 3);
  CHECK(all.size() == 64);
  for (const auto& m : all) CHECK(m.times == std::vector<std::uint64_t>{0, 0, 0});

  CHECK_THROWS_AS(enumerate_models(parse_program(""), {"a", "b", "c", "d"}, 6), SizeLimitError);
}

TEST_CASE("enumerated models satisfy the program") {
  for (std::string src : {school, "X[3,5) b :- a.\nX[1,2) a :- b.", ":- a, b.\nX[0,1) a :- not a.",
                          "X[2,inf) b :- a.\nb :- not a."}) {
    MetricProgram p = parse_program(src);
    for (bool strict : {false, true}) {
      EnumerateOptions o;
      o.extract.strict = strict;
      for (const TimedTrace& m : enumerate_models(p, {"a", "b", "drive", "school"}, 3, o)) {
        CHECK_MESSAGE(check_program(p, m).empty(), src << " " << format_trace(m));
        if (strict)
          for (std::size_t i = 1; i < m.size(); ++i) CHECK(m.times[i] > m.times[i - 1]);
      }
    }
  }
}

TEST_CASE("rule verdicts match the metric formula") {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 200; ++k) {
    const std::uint64_t lo = rng() % 20;
    const Bound hi = (rng() % 4) ? Bound(lo + 1 + rng() % 20) : std::nullopt;
    MetricProgram p;
    p.rules.push_back({MetricHead{lo, hi, "a"}, {{"b", true}}});
    const Formula head = Formula::metric_next(lo, hi, Formula::atom("a"));
    const TimedTrace t = random_timed_trace(rng, {"a", "b"}, 5, 30);
    const auto violations = check_program(p, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t.letters[i].contains("b")) continue;
      const bool violated = std::find(violations.begin(), violations.end(), Violation{0, i}) != violations.end();
      CHECK(violated == !eval_timed(head, t, i));
    }
  }
}
