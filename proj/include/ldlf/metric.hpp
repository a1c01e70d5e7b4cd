#ifndef LDLF_METRIC_HPP
#define LDLF_METRIC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ldlf/formula.hpp"
#include "ldlf/trace.hpp"

namespace ldlf {

struct PlainHead {
  std::string atom;
  friend bool operator==(const PlainHead&, const PlainHead&) = default;
};

/// `X[lo,hi) atom`: the atom holds at the next step, reached after a delay in
/// [lo, hi).
struct MetricHead {
  std::uint64_t lo = 0;
  Bound hi;
  std::string atom;
  friend bool operator==(const MetricHead&, const MetricHead&) = default;
};

/// monostate is the empty head of an integrity constraint.
using Head = std::variant<std::monostate, PlainHead, MetricHead>;

struct BodyLiteral {
  std::string atom;
  bool positive = true;
  friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
};

/// A rule that must hold at every step of a trace.
struct MetricRule {
  Head head;
  std::vector<BodyLiteral> body;

  bool body_holds(const Letter& letter) const;
  friend bool operator==(const MetricRule&, const MetricRule&) = default;
};

struct MetricProgram {
  std::vector<MetricRule> rules;
  std::set<std::string> universe() const;
};

struct Violation {
  std::size_t rule = 0;
  std::size_t position = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string format_rule(const MetricRule& rule);

/// Rule-major list of (rule, position) pairs whose body holds while the head
/// fails. Empty iff the trace satisfies the program.
std::vector<Violation> check_program(const MetricProgram& program, const TimedTrace& trace);

/// lo <= t_to - t_from <= hi.
struct DiffConstraint {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;  // nullopt: unbounded above
  friend bool operator==(const DiffConstraint&, const DiffConstraint&) = default;
};

/// Difference constraints over t_0 .. t_{n_vars-1}, anchored at t_0 = 0 with
/// all t_i natural.
struct ConstraintSystem {
  std::size_t n_vars = 0;
  std::vector<DiffConstraint> constraints;

  bool satisfied_by(const std::vector<std::uint64_t>& times) const;
};

struct ExtractOptions {
  /// Require strictly increasing timestamps (minimum step 1).
  bool strict = false;
};

/// Either the constraint system for a trace whose atoms already satisfy the
/// program, or the first untimed violation.
using Extraction = std::variant<ConstraintSystem, Violation>;

Extraction extract_constraints(const MetricProgram& program, const Trace& trace,
                               ExtractOptions options = {});

/// One edge of an infeasibility cycle. `constraint` is empty for the implicit
/// `t_to >= 0` bound; `upper` tells which side of the constraint was used.
struct CycleEdge {
  std::optional<std::size_t> constraint;
  bool upper = false;
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t weight = 0;
  friend bool operator==(const CycleEdge&, const CycleEdge&) = default;
};

struct Witness {
  std::vector<std::uint64_t> times;
};

struct Infeasible {
  std::vector<CycleEdge> cycle;
  /// Distinct constraint indices on the cycle, in cycle order.
  std::vector<std::size_t> constraint_indices() const;
};

using Feasibility = std::variant<Witness, Infeasible>;

/// Least natural solution with t_0 = 0, or a positive-weight cycle in the
/// lower-bound graph.
Feasibility feasible(const ConstraintSystem& system);

struct EnumerateOptions {
  ExtractOptions extract;
};

/// Every trace of length exactly `horizon` over `ap` whose atoms satisfy the
/// program and whose timing constraints are feasible, paired with the least
/// timestamps.
std::vector<TimedTrace> enumerate_models(const MetricProgram& program, const std::set<std::string>& ap,
                                         std::size_t horizon, EnumerateOptions options = {});

}  // namespace ldlf

#endif  // LDLF_METRIC_HPP
