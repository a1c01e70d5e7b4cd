#include "ldlf/formula.hpp"

#include <functional>
#include <stdexcept>
#include <tuple>

namespace ldlf {

struct FormulaNode {
  Op op;
  std::string name;
  std::shared_ptr<const FormulaNode> lhs;
  std::shared_ptr<const FormulaNode> rhs;
  std::shared_ptr<const PathNode> path;
  std::uint64_t lo = 0;
  Bound hi;
  std::size_t hash = 0;
  std::size_t size = 1;
};

struct PathNode {
  PathOp op;
  std::shared_ptr<const FormulaNode> formula;
  std::shared_ptr<const PathNode> lhs;
  std::shared_ptr<const PathNode> rhs;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

inline void mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

bool same(const FormulaNode* a, const FormulaNode* b);

bool same(const PathNode* a, const PathNode* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->hash != b->hash || a->op != b->op || a->size != b->size) return false;
  return same(a->formula.get(), b->formula.get()) && same(a->lhs.get(), b->lhs.get()) &&
         same(a->rhs.get(), b->rhs.get());
}

bool same(const FormulaNode* a, const FormulaNode* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->hash != b->hash || a->op != b->op || a->size != b->size) return false;
  return a->name == b->name && a->lo == b->lo && a->hi == b->hi &&
         same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get()) &&
         same(a->path.get(), b->path.get());
}

int compare(const FormulaNode* a, const FormulaNode* b);

int compare(const PathNode* a, const PathNode* b) {
  if (a == b) return 0;
  if (a == nullptr) return -1;
  if (b == nullptr) return 1;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (int c = compare(a->formula.get(), b->formula.get())) return c;
  if (int c = compare(a->lhs.get(), b->lhs.get())) return c;
  return compare(a->rhs.get(), b->rhs.get());
}

int compare(const FormulaNode* a, const FormulaNode* b) {
  if (a == b) return 0;
  if (a == nullptr) return -1;
  if (b == nullptr) return 1;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->lo != b->lo) return a->lo < b->lo ? -1 : 1;
  if (a->hi != b->hi) return a->hi < b->hi ? -1 : 1;
  if (int c = compare(a->lhs.get(), b->lhs.get())) return c;
  if (int c = compare(a->rhs.get(), b->rhs.get())) return c;
  return compare(a->path.get(), b->path.get());
}

}  // namespace

struct Build {
  static Formula formula(Op op, std::string name, const Formula* l, const Formula* r,
                         const Path* p, std::uint64_t lo = 0, Bound hi = std::nullopt) {
    FormulaNode n{op, std::move(name), l ? l->node_ : nullptr, r ? r->node_ : nullptr,
                  p ? p->node_ : nullptr, lo, hi};
    std::size_t h = static_cast<std::size_t>(op) + 1;
    mix(h, std::hash<std::string>{}(n.name));
    mix(h, lo);
    mix(h, hi ? *hi + 1 : 0);
    for (const FormulaNode* c : {n.lhs.get(), n.rhs.get()}) {
      mix(h, c ? c->hash : 0);
      if (c) n.size += c->size;
    }
    mix(h, n.path ? n.path->hash : 0);
    if (n.path) n.size += n.path->size;
    n.hash = h;
    return Formula(std::make_shared<const FormulaNode>(std::move(n)));
  }

  static Path path(PathOp op, const Formula* f, const Path* l, const Path* r) {
    PathNode n{op, f ? f->node_ : nullptr, l ? l->node_ : nullptr, r ? r->node_ : nullptr};
    std::size_t h = 0x51ed27 + static_cast<std::size_t>(op);
    mix(h, n.formula ? n.formula->hash : 0);
    if (n.formula) n.size += n.formula->size;
    for (const PathNode* c : {n.lhs.get(), n.rhs.get()}) {
      mix(h, c ? c->hash : 0);
      if (c) n.size += c->size;
    }
    n.hash = h;
    return Path(std::make_shared<const PathNode>(std::move(n)));
  }

  static Formula wrap(std::shared_ptr<const FormulaNode> n) { return Formula(std::move(n)); }
  static Path wrap(std::shared_ptr<const PathNode> n) { return Path(std::move(n)); }
};

namespace {

const Formula& shared_true() {
  static const Formula t = Build::formula(Op::True, {}, nullptr, nullptr, nullptr);
  return t;
}

Formula unary(Op op, const Formula& f) { return Build::formula(op, {}, &f, nullptr, nullptr); }

Formula binary(Op op, const Formula& l, const Formula& r) {
  return Build::formula(op, {}, &l, &r, nullptr);
}

}  // namespace

// --- Formula ---------------------------------------------------------------

Formula::Formula() : node_(shared_true().node_) {}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return Build::formula(Op::Atom, std::move(name), nullptr, nullptr, nullptr);
}
Formula Formula::top() { return shared_true(); }
Formula Formula::bottom() { return Build::formula(Op::False, {}, nullptr, nullptr, nullptr); }
Formula Formula::negate(Formula f) { return unary(Op::Not, f); }
Formula Formula::conj(Formula l, Formula r) { return binary(Op::And, l, r); }
Formula Formula::disj(Formula l, Formula r) { return binary(Op::Or, l, r); }
Formula Formula::implies(Formula l, Formula r) { return binary(Op::Implies, l, r); }
Formula Formula::next(Formula f) { return unary(Op::Next, f); }
Formula Formula::weak_next(Formula f) { return unary(Op::WeakNext, f); }
Formula Formula::until(Formula l, Formula r) { return binary(Op::Until, l, r); }
Formula Formula::release(Formula l, Formula r) { return binary(Op::Release, l, r); }
Formula Formula::eventually(Formula f) { return unary(Op::Eventually, f); }
Formula Formula::always(Formula f) { return unary(Op::Always, f); }
Formula Formula::prev(Formula f) { return unary(Op::Prev, f); }
Formula Formula::weak_prev(Formula f) { return unary(Op::WeakPrev, f); }
Formula Formula::since(Formula l, Formula r) { return binary(Op::Since, l, r); }
Formula Formula::trigger(Formula l, Formula r) { return binary(Op::Trigger, l, r); }
Formula Formula::diamond(Path p, Formula f) { return Build::formula(Op::Diamond, {}, nullptr, &f, &p); }
Formula Formula::box(Path p, Formula f) { return Build::formula(Op::Box, {}, nullptr, &f, &p); }

Formula Formula::metric_next(std::uint64_t lo, Bound hi, Formula f) {
  if (hi && lo >= *hi) throw std::invalid_argument("metric interval must satisfy lo < hi");
  return Build::formula(Op::MetricNext, {}, &f, nullptr, nullptr, lo, hi);
}

Formula Formula::weak_metric_next(std::uint64_t lo, Bound hi, Formula f) {
  if (hi && lo >= *hi) throw std::invalid_argument("metric interval must satisfy lo < hi");
  return Build::formula(Op::WeakMetricNext, {}, &f, nullptr, nullptr, lo, hi);
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
std::uint64_t Formula::lo() const { return node_->lo; }
Bound Formula::hi() const { return node_->hi; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

Formula Formula::lhs() const {
  if (!node_->lhs) throw std::logic_error("formula has no left operand");
  return Formula(node_->lhs);
}
Formula Formula::rhs() const {
  if (!node_->rhs) throw std::logic_error("formula has no right operand");
  return Formula(node_->rhs);
}
Path Formula::path() const {
  if (!node_->path) throw std::logic_error("formula has no path");
  return Build::wrap(node_->path);
}

bool operator==(const Formula& a, const Formula& b) { return same(a.node_.get(), b.node_.get()); }
bool operator<(const Formula& a, const Formula& b) {
  return compare(a.node_.get(), b.node_.get()) < 0;
}

// --- Path ------------------------------------------------------------------

Path::Path() : Path(step(Formula::top())) {}

Path Path::step(Formula guard) { return Build::path(PathOp::Step, &guard, nullptr, nullptr); }
Path Path::test(Formula f) { return Build::path(PathOp::Test, &f, nullptr, nullptr); }
Path Path::seq(Path l, Path r) { return Build::path(PathOp::Seq, nullptr, &l, &r); }
Path Path::alt(Path l, Path r) { return Build::path(PathOp::Alt, nullptr, &l, &r); }
Path Path::star(Path p) { return Build::path(PathOp::Star, nullptr, &p, nullptr); }

PathOp Path::op() const { return node_->op; }
std::size_t Path::hash() const { return node_->hash; }
std::size_t Path::size() const { return node_->size; }

Formula Path::formula() const {
  if (!node_->formula) throw std::logic_error("path has no formula");
  return Build::wrap(node_->formula);
}
Path Path::lhs() const {
  if (!node_->lhs) throw std::logic_error("path has no left operand");
  return Path(node_->lhs);
}
Path Path::rhs() const {
  if (!node_->rhs) throw std::logic_error("path has no right operand");
  return Path(node_->rhs);
}

bool operator==(const Path& a, const Path& b) { return same(a.node_.get(), b.node_.get()); }
bool operator<(const Path& a, const Path& b) { return compare(a.node_.get(), b.node_.get()) < 0; }

// --- predicates ------------------------------------------------------------

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "tt" && name != "ff";
}

bool is_propositional(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return true;
    case Op::Not:
      return is_propositional(f.lhs());
    case Op::And:
    case Op::Or:
    case Op::Implies:
      return is_propositional(f.lhs()) && is_propositional(f.rhs());
    default:
      return false;
  }
}

namespace {

bool any_of(const Formula& f, const std::function<bool(Op)>& pred);

bool any_of(const Path& p, const std::function<bool(Op)>& pred) {
  switch (p.op()) {
    case PathOp::Step:
    case PathOp::Test:
      return any_of(p.formula(), pred);
    case PathOp::Seq:
    case PathOp::Alt:
      return any_of(p.lhs(), pred) || any_of(p.rhs(), pred);
    case PathOp::Star:
      return any_of(p.lhs(), pred);
  }
  return false;
}

bool any_of(const Formula& f, const std::function<bool(Op)>& pred) {
  if (pred(f.op())) return true;
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return false;
    case Op::Diamond:
    case Op::Box:
      return any_of(f.path(), pred) || any_of(f.rhs(), pred);
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Until:
    case Op::Release:
    case Op::Since:
    case Op::Trigger:
      return any_of(f.lhs(), pred) || any_of(f.rhs(), pred);
    default:
      return any_of(f.lhs(), pred);
  }
}

}  // namespace

bool has_past(const Formula& f) {
  return any_of(f, [](Op op) {
    return op == Op::Prev || op == Op::WeakPrev || op == Op::Since || op == Op::Trigger;
  });
}

bool has_metric(const Formula& f) {
  return any_of(f, [](Op op) { return op == Op::MetricNext || op == Op::WeakMetricNext; });
}

bool is_nnf(const Formula& f) {
  if (f.op() == Op::Implies) return false;
  if (f.op() == Op::Not) return f.lhs().op() == Op::Atom;
  bool ok = true;
  auto visit_path = [&](const Path& p, auto&& self) -> void {
    switch (p.op()) {
      case PathOp::Step:
      case PathOp::Test:
        ok = ok && is_nnf(p.formula());
        break;
      case PathOp::Seq:
      case PathOp::Alt:
        self(p.lhs(), self);
        self(p.rhs(), self);
        break;
      case PathOp::Star:
        self(p.lhs(), self);
        break;
    }
  };
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return true;
    case Op::Diamond:
    case Op::Box:
      visit_path(f.path(), visit_path);
      return ok && is_nnf(f.rhs());
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Release:
    case Op::Since:
    case Op::Trigger:
      return is_nnf(f.lhs()) && is_nnf(f.rhs());
    default:
      return is_nnf(f.lhs());
  }
}

bool is_dynamic_core(const Formula& f) {
  return !any_of(f, [](Op op) {
    return op == Op::Next || op == Op::WeakNext || op == Op::Until || op == Op::Release ||
           op == Op::Eventually || op == Op::Always;
  });
}

// --- negation normal form --------------------------------------------------

namespace {

Formula pos(const Formula& f);
Formula neg(const Formula& f);

Formula pos(const Formula& f) {
  using F = Formula;
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return f;
    case Op::Not: return neg(f.lhs());
    case Op::And: return F::conj(pos(f.lhs()), pos(f.rhs()));
    case Op::Or: return F::disj(pos(f.lhs()), pos(f.rhs()));
    case Op::Implies: return F::disj(neg(f.lhs()), pos(f.rhs()));
    case Op::Next: return F::next(pos(f.lhs()));
    case Op::WeakNext: return F::weak_next(pos(f.lhs()));
    case Op::Until: return F::until(pos(f.lhs()), pos(f.rhs()));
    case Op::Release: return F::release(pos(f.lhs()), pos(f.rhs()));
    case Op::Eventually: return F::eventually(pos(f.lhs()));
    case Op::Always: return F::always(pos(f.lhs()));
    case Op::Prev: return F::prev(pos(f.lhs()));
    case Op::WeakPrev: return F::weak_prev(pos(f.lhs()));
    case Op::Since: return F::since(pos(f.lhs()), pos(f.rhs()));
    case Op::Trigger: return F::trigger(pos(f.lhs()), pos(f.rhs()));
    case Op::Diamond: return F::diamond(nnf(f.path()), pos(f.rhs()));
    case Op::Box: return F::box(nnf(f.path()), pos(f.rhs()));
    case Op::MetricNext: return F::metric_next(f.lo(), f.hi(), pos(f.lhs()));
    case Op::WeakMetricNext: return F::weak_metric_next(f.lo(), f.hi(), pos(f.lhs()));
  }
  throw std::logic_error("unreachable");
}

Formula neg(const Formula& f) {
  using F = Formula;
  switch (f.op()) {
    case Op::Atom: return F::negate(f);
    case Op::True: return F::bottom();
    case Op::False: return F::top();
    case Op::Not: return pos(f.lhs());
    case Op::And: return F::disj(neg(f.lhs()), neg(f.rhs()));
    case Op::Or: return F::conj(neg(f.lhs()), neg(f.rhs()));
    case Op::Implies: return F::conj(pos(f.lhs()), neg(f.rhs()));
    case Op::Next: return F::weak_next(neg(f.lhs()));
    case Op::WeakNext: return F::next(neg(f.lhs()));
    case Op::Until: return F::release(neg(f.lhs()), neg(f.rhs()));
    case Op::Release: return F::until(neg(f.lhs()), neg(f.rhs()));
    case Op::Eventually: return F::always(neg(f.lhs()));
    case Op::Always: return F::eventually(neg(f.lhs()));
    case Op::Prev: return F::weak_prev(neg(f.lhs()));
    case Op::WeakPrev: return F::prev(neg(f.lhs()));
    case Op::Since: return F::trigger(neg(f.lhs()), neg(f.rhs()));
    case Op::Trigger: return F::since(neg(f.lhs()), neg(f.rhs()));
    case Op::Diamond: return F::box(nnf(f.path()), neg(f.rhs()));
    case Op::Box: return F::diamond(nnf(f.path()), neg(f.rhs()));
    case Op::MetricNext: return F::weak_metric_next(f.lo(), f.hi(), neg(f.lhs()));
    case Op::WeakMetricNext: return F::metric_next(f.lo(), f.hi(), neg(f.lhs()));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Formula nnf(const Formula& f) { return pos(f); }

Path nnf(const Path& p) {
  switch (p.op()) {
    case PathOp::Step: return Path::step(pos(p.formula()));
    case PathOp::Test: return Path::test(pos(p.formula()));
    case PathOp::Seq: return Path::seq(nnf(p.lhs()), nnf(p.rhs()));
    case PathOp::Alt: return Path::alt(nnf(p.lhs()), nnf(p.rhs()));
    case PathOp::Star: return Path::star(nnf(p.lhs()));
  }
  throw std::logic_error("unreachable");
}

// --- dynamic core ----------------------------------------------------------

namespace {

Path core(const Path& p);

Formula core(const Formula& f) {
  using F = Formula;
  const Path any_step = Path::step(F::top());
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return f;
    case Op::Not: return F::negate(core(f.lhs()));
    case Op::And: return F::conj(core(f.lhs()), core(f.rhs()));
    case Op::Or: return F::disj(core(f.lhs()), core(f.rhs()));
    case Op::Implies: return F::implies(core(f.lhs()), core(f.rhs()));
    case Op::Next: return F::diamond(any_step, core(f.lhs()));
    case Op::WeakNext: return F::box(any_step, core(f.lhs()));
    case Op::Eventually: return F::diamond(Path::star(any_step), core(f.lhs()));
    case Op::Always: return F::box(Path::star(any_step), core(f.lhs()));
    case Op::Until: {
      Path loop = Path::star(Path::seq(Path::test(core(f.lhs())), any_step));
      return F::diamond(loop, core(f.rhs()));
    }
    case Op::Release: {
      Path loop = Path::star(Path::seq(Path::test(core(nnf(F::negate(f.lhs())))), any_step));
      return F::box(loop, core(f.rhs()));
    }
    case Op::Prev: return F::prev(core(f.lhs()));
    case Op::WeakPrev: return F::weak_prev(core(f.lhs()));
    case Op::Since: return F::since(core(f.lhs()), core(f.rhs()));
    case Op::Trigger: return F::trigger(core(f.lhs()), core(f.rhs()));
    case Op::Diamond: return F::diamond(core(f.path()), core(f.rhs()));
    case Op::Box: return F::box(core(f.path()), core(f.rhs()));
    case Op::MetricNext: return F::metric_next(f.lo(), f.hi(), core(f.lhs()));
    case Op::WeakMetricNext: return F::weak_metric_next(f.lo(), f.hi(), core(f.lhs()));
  }
  throw std::logic_error("unreachable");
}

Path core(const Path& p) {
  switch (p.op()) {
    case PathOp::Step: return p;
    case PathOp::Test: return Path::test(core(p.formula()));
    case PathOp::Seq: return Path::seq(core(p.lhs()), core(p.rhs()));
    case PathOp::Alt: return Path::alt(core(p.lhs()), core(p.rhs()));
    case PathOp::Star: return Path::star(core(p.lhs()));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Formula to_dynamic_core(const Formula& f) { return core(f); }

// --- atoms -----------------------------------------------------------------

namespace {

void collect(const Formula& f, std::set<std::string>& out);

void collect(const Path& p, std::set<std::string>& out) {
  switch (p.op()) {
    case PathOp::Step:
    case PathOp::Test:
      collect(p.formula(), out);
      break;
    case PathOp::Seq:
    case PathOp::Alt:
      collect(p.lhs(), out);
      collect(p.rhs(), out);
      break;
    case PathOp::Star:
      collect(p.lhs(), out);
      break;
  }
}

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Atom:
      out.insert(f.name());
      break;
    case Op::True:
    case Op::False:
      break;
    case Op::Diamond:
    case Op::Box:
      collect(f.path(), out);
      collect(f.rhs(), out);
      break;
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Until:
    case Op::Release:
    case Op::Since:
    case Op::Trigger:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      break;
    default:
      collect(f.lhs(), out);
  }
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

// --- closure ---------------------------------------------------------------

std::size_t StateSet::intern(const Formula& f) {
  auto [it, inserted] = index_.try_emplace(f, states_.size());
  if (inserted) states_.push_back(f);
  return it->second;
}

std::optional<std::size_t> StateSet::find(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Formula> expansion(const Formula& f) {
  using F = Formula;
  switch (f.op()) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return {};
    case Op::Not:
    case Op::Next:
    case Op::WeakNext:
    case Op::Eventually:
    case Op::Always:
    case Op::Prev:
    case Op::WeakPrev:
    case Op::MetricNext:
    case Op::WeakMetricNext:
      return {f.lhs()};
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Until:
    case Op::Release:
    case Op::Since:
    case Op::Trigger:
      return {f.lhs(), f.rhs()};
    case Op::Diamond:
    case Op::Box: {
      const bool dia = f.op() == Op::Diamond;
      auto modal = [dia](Path p, Formula g) { return dia ? F::diamond(p, g) : F::box(p, g); };
      const Path p = f.path();
      const Formula body = f.rhs();
      switch (p.op()) {
        case PathOp::Step:
          return {body};
        case PathOp::Test:
          return {dia ? p.formula() : nnf(F::negate(p.formula())), body};
        case PathOp::Seq:
          return {modal(p.lhs(), modal(p.rhs(), body))};
        case PathOp::Alt:
          return {modal(p.lhs(), body), modal(p.rhs(), body)};
        case PathOp::Star:
          return {body, modal(p.lhs(), f)};
      }
    }
  }
  throw std::logic_error("unreachable");
}

StateSet closure(const Formula& f) {
  StateSet out;
  out.intern(f);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Formula cur = out[i];
    for (const Formula& g : expansion(cur)) out.intern(g);
  }
  return out;
}

}  // namespace ldlf
