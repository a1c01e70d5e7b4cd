#ifndef LDLF_ORACLE_HPP
#define LDLF_ORACLE_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "ldlf/formula.hpp"
#include "ldlf/trace.hpp"

namespace ldlf {

/// A metric connective was evaluated over a trace without timestamps.
class UntimedMetricError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Positions 0..len of a trace; `len` is the letterless end point.
using Position = std::size_t;

/// Boolean relation over positions 0..len.
class PathRelation {
public:
  explicit PathRelation(std::size_t points) : n_(points), bits_(points * points, false) {}

  std::size_t points() const { return n_; }
  bool contains(Position i, Position j) const { return bits_[i * n_ + j]; }
  void insert(Position i, Position j) { bits_[i * n_ + j] = true; }
  std::vector<std::pair<Position, Position>> pairs() const;

  friend bool operator==(const PathRelation&, const PathRelation&) = default;

private:
  std::size_t n_;
  std::vector<bool> bits_;
};

/// Direct finite-trace semantics, used as ground truth for every automaton.
///
/// Atoms are false at the end point. Step relations only leave letter
/// positions, so `<tt> tt` holds on a one-letter trace. Star relations only
/// land on letter positions, which makes F, G, U, R and their path forms
/// quantify over the letters of the trace.
bool eval(const Formula& f, const Trace& t, Position i);
bool eval_timed(const Formula& f, const TimedTrace& t, Position i);

PathRelation path_relation(const Path& p, const Trace& t);
PathRelation path_relation(const Path& p, const TimedTrace& t);

bool holds(const Formula& f, const Trace& t);
bool holds(const Formula& f, const TimedTrace& t);

}  // namespace ldlf

#endif  // LDLF_ORACLE_HPP
