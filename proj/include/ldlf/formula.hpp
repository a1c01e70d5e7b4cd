#ifndef LDLF_FORMULA_HPP
#define LDLF_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ldlf {

class Formula;
class Path;

/// Upper bound of a metric interval; `std::nullopt` stands for infinity.
using Bound = std::optional<std::uint64_t>;

enum class Op : std::uint8_t {
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Next,
  WeakNext,
  Until,
  Release,
  Eventually,
  Always,
  Prev,
  WeakPrev,
  Since,
  Trigger,
  Diamond,
  Box,
  MetricNext,
  // Only produced by nnf(): negation of MetricNext.
  WeakMetricNext,
};

enum class PathOp : std::uint8_t { Step, Test, Seq, Alt, Star };

struct FormulaNode;
struct PathNode;

/// Immutable, structurally compared formula handle. Copies share the tree.
class Formula {
public:
  Formula();  // tt

  static Formula atom(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negate(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula next(Formula f);
  static Formula weak_next(Formula f);
  static Formula until(Formula l, Formula r);
  static Formula release(Formula l, Formula r);
  static Formula eventually(Formula f);
  static Formula always(Formula f);
  static Formula prev(Formula f);
  static Formula weak_prev(Formula f);
  static Formula since(Formula l, Formula r);
  static Formula trigger(Formula l, Formula r);
  static Formula diamond(Path p, Formula f);
  static Formula box(Path p, Formula f);
  /// Throws std::invalid_argument unless lo < hi.
  static Formula metric_next(std::uint64_t lo, Bound hi, Formula f);
  static Formula weak_metric_next(std::uint64_t lo, Bound hi, Formula f);

  Op op() const;
  const std::string& name() const;  // Atom only
  Formula lhs() const;  // unary operand or left operand
  Formula rhs() const;  // right operand / dynamic body
  Path path() const;    // Diamond / Box
  std::uint64_t lo() const;
  Bound hi() const;

  std::size_t hash() const;
  /// Number of formula and path nodes.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Total structural order, used for deterministic containers.
  friend bool operator<(const Formula& a, const Formula& b);

private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FormulaNode> node_;
  friend class Path;
  friend struct Build;
};

class Path {
public:
  Path();  // Step(tt)

  static Path step(Formula guard);
  static Path test(Formula f);
  static Path seq(Path l, Path r);
  static Path alt(Path l, Path r);
  static Path star(Path p);

  PathOp op() const;
  Formula formula() const;  // Step guard or Test formula
  Path lhs() const;         // Seq/Alt left, Star body
  Path rhs() const;

  std::size_t hash() const;
  std::size_t size() const;

  friend bool operator==(const Path& a, const Path& b);
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  friend bool operator<(const Path& a, const Path& b);

private:
  explicit Path(std::shared_ptr<const PathNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const PathNode> node_;
  friend class Formula;
  friend struct Build;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// True when `f` is built from atoms, constants and boolean connectives only.
bool is_propositional(const Formula& f);
/// True when `f` mentions Prev, WeakPrev, Since or Trigger.
bool has_past(const Formula& f);
/// True when `f` mentions MetricNext or its weak dual.
bool has_metric(const Formula& f);
bool is_valid_atom_name(std::string_view name);
/// Negation only in front of atoms and no implications.
bool is_nnf(const Formula& f);
/// No X, WX, U, R, F or G anywhere (path tests included).
bool is_dynamic_core(const Formula& f);

Formula nnf(const Formula& f);
Path nnf(const Path& p);

/// Rewrites X, WX, U, R, F, G into path modalities. Past and metric
/// connectives are left in place.
Formula to_dynamic_core(const Formula& f);

std::set<std::string> atoms(const Formula& f);

/// Canonical text; parse_formula(format(f)) == f.
std::string format(const Formula& f);
std::string format(const Path& p);

/// Ordered, duplicate-free list of formulas with an index. Root at 0.
class StateSet {
public:
  /// Returns the ordinal of `f`, inserting it at the end when absent.
  std::size_t intern(const Formula& f);
  std::optional<std::size_t> find(const Formula& f) const;
  const Formula& operator[](std::size_t i) const { return states_[i]; }
  std::size_t size() const { return states_.size(); }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

private:
  std::vector<Formula> states_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

/// Formulas reachable from `f` by one expansion step, left to right: boolean
/// children, test formulas, path unfoldings, step targets, past unfoldings.
std::vector<Formula> expansion(const Formula& f);

/// Smallest StateSet containing `f` and closed under expansion().
StateSet closure(const Formula& f);

}  // namespace ldlf

template <>
struct std::hash<ldlf::Formula> {
  std::size_t operator()(const ldlf::Formula& f) const { return f.hash(); }
};

#endif  // LDLF_FORMULA_HPP
