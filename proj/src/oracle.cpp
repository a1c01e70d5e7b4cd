#include "ldlf/oracle.hpp"

#include <unordered_map>

namespace ldlf {

std::vector<std::pair<Position, Position>> PathRelation::pairs() const {
  std::vector<std::pair<Position, Position>> out;
  for (Position i = 0; i < n_; ++i)
    for (Position j = 0; j < n_; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

struct PathHash {
  std::size_t operator()(const Path& p) const { return p.hash(); }
};

// Computes truth vectors over all positions 0..len, memoized per subformula.
class Evaluator {
public:
  Evaluator(const std::vector<Letter>& letters, const std::vector<std::uint64_t>* times)
      : letters_(letters), times_(times), len_(letters.size()) {}

  const std::vector<char>& values(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    std::vector<char> v = compute(f);
    return memo_.emplace(f, std::move(v)).first->second;
  }

  const PathRelation& relation(const Path& p) {
    if (auto it = paths_.find(p); it != paths_.end()) return it->second;
    PathRelation r = compute(p);
    return paths_.emplace(p, std::move(r)).first->second;
  }

private:
  std::vector<char> compute(const Formula& f) {
    const std::size_t n = len_ + 1;
    std::vector<char> v(n, 0);
    switch (f.op()) {
      case Op::Atom:
        for (Position i = 0; i < len_; ++i) v[i] = letters_[i].contains(f.name());
        break;
      case Op::True:
        v.assign(n, 1);
        break;
      case Op::False:
        break;
      case Op::Not: {
        const auto& a = values(f.lhs());
        for (Position i = 0; i < n; ++i) v[i] = !a[i];
        break;
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        const auto a = values(f.lhs());
        const auto& b = values(f.rhs());
        for (Position i = 0; i < n; ++i) {
          if (f.op() == Op::And) v[i] = a[i] && b[i];
          else if (f.op() == Op::Or) v[i] = a[i] || b[i];
          else v[i] = !a[i] || b[i];
        }
        break;
      }
      case Op::Next: {
        const auto& a = values(f.lhs());
        for (Position i = 0; i < len_; ++i) v[i] = a[i + 1];
        break;
      }
      case Op::WeakNext: {
        const auto& a = values(f.lhs());
        for (Position i = 0; i < len_; ++i) v[i] = a[i + 1];
        v[len_] = 1;
        break;
      }
      case Op::Eventually: {
        const auto& a = values(f.lhs());
        for (Position i = len_; i-- > 0;) v[i] = a[i] || v[i + 1];
        break;
      }
      case Op::Always: {
        const auto& a = values(f.lhs());
        v[len_] = 1;
        for (Position i = len_; i-- > 0;) v[i] = a[i] && v[i + 1];
        break;
      }
      case Op::Until: {
        // exists j in [i, len): rhs at j and lhs on [i, j)
        const auto a = values(f.lhs());
        const auto& b = values(f.rhs());
        for (Position i = len_; i-- > 0;) v[i] = b[i] || (a[i] && v[i + 1]);
        break;
      }
      case Op::Release: {
        // forall j in [i, len): rhs at j or lhs somewhere in [i, j)
        const auto a = values(f.lhs());
        const auto& b = values(f.rhs());
        v[len_] = 1;
        for (Position i = len_; i-- > 0;) v[i] = b[i] && (a[i] || v[i + 1]);
        break;
      }
      case Op::Prev: {
        const auto& a = values(f.lhs());
        for (Position i = 1; i < n; ++i) v[i] = a[i - 1];
        break;
      }
      case Op::WeakPrev: {
        const auto& a = values(f.lhs());
        v[0] = 1;
        for (Position i = 1; i < n; ++i) v[i] = a[i - 1];
        break;
      }
      case Op::Since: {
        // exists j <= i: rhs at j and lhs on (j, i]
        const auto a = values(f.lhs());
        const auto& b = values(f.rhs());
        for (Position i = 0; i < n; ++i) v[i] = b[i] || (i > 0 && a[i] && v[i - 1]);
        break;
      }
      case Op::Trigger: {
        // forall j <= i: rhs at j or lhs somewhere in (j, i]
        const auto a = values(f.lhs());
        const auto& b = values(f.rhs());
        for (Position i = 0; i < n; ++i) v[i] = b[i] && (a[i] || i == 0 || v[i - 1]);
        break;
      }
      case Op::Diamond:
      case Op::Box: {
        const PathRelation r = relation(f.path());
        const auto& body = values(f.rhs());
        const bool dia = f.op() == Op::Diamond;
        for (Position i = 0; i < n; ++i) {
          bool acc = !dia;
          for (Position j = 0; j < n; ++j) {
            if (!r.contains(i, j)) continue;
            if (dia && body[j]) acc = true;
            if (!dia && !body[j]) acc = false;
          }
          v[i] = acc;
        }
        break;
      }
      case Op::MetricNext:
      case Op::WeakMetricNext: {
        if (times_ == nullptr)
          throw UntimedMetricError("metric next evaluated over an untimed trace");
        const auto& a = values(f.lhs());
        const bool strong = f.op() == Op::MetricNext;
        for (Position i = 0; i < n; ++i) {
          bool in_window = false;
          if (i + 1 < len_) {
            const std::uint64_t delay = (*times_)[i + 1] - (*times_)[i];
            in_window = delay >= f.lo() && (!f.hi() || delay < *f.hi());
          }
          v[i] = strong ? (in_window && a[i + 1]) : (!in_window || a[i + 1]);
        }
        break;
      }
    }
    return v;
  }

  PathRelation compute(const Path& p) {
    const std::size_t n = len_ + 1;
    PathRelation r(n);
    switch (p.op()) {
      case PathOp::Step: {
        const auto& g = values(p.formula());
        for (Position i = 0; i < len_; ++i)
          if (g[i]) r.insert(i, i + 1);
        break;
      }
      case PathOp::Test: {
        const auto& g = values(p.formula());
        for (Position i = 0; i < n; ++i)
          if (g[i]) r.insert(i, i);
        break;
      }
      case PathOp::Seq: {
        const PathRelation a = relation(p.lhs());
        const PathRelation& b = relation(p.rhs());
        for (Position i = 0; i < n; ++i)
          for (Position k = 0; k < n; ++k)
            if (a.contains(i, k))
              for (Position j = 0; j < n; ++j)
                if (b.contains(k, j)) r.insert(i, j);
        break;
      }
      case PathOp::Alt: {
        const PathRelation a = relation(p.lhs());
        const PathRelation& b = relation(p.rhs());
        for (Position i = 0; i < n; ++i)
          for (Position j = 0; j < n; ++j)
            if (a.contains(i, j) || b.contains(i, j)) r.insert(i, j);
        break;
      }
      case PathOp::Star: {
        const PathRelation& a = relation(p.lhs());
        std::vector<char> reach(n * n, 0);
        for (Position i = 0; i < n; ++i) {
          reach[i * n + i] = 1;
          for (Position j = 0; j < n; ++j)
            if (a.contains(i, j)) reach[i * n + j] = 1;
        }
        for (Position k = 0; k < n; ++k)
          for (Position i = 0; i < n; ++i)
            if (reach[i * n + k])
              for (Position j = 0; j < n; ++j)
                if (reach[k * n + j]) reach[i * n + j] = 1;
        // iterations stop on letters: the end point is never a star target
        for (Position i = 0; i < n; ++i)
          for (Position j = 0; j < len_; ++j)
            if (reach[i * n + j]) r.insert(i, j);
        break;
      }
    }
    return r;
  }

  const std::vector<Letter>& letters_;
  const std::vector<std::uint64_t>* times_;
  std::size_t len_;
  std::unordered_map<Formula, std::vector<char>, FormulaHash> memo_;
  std::unordered_map<Path, PathRelation, PathHash> paths_;
};

void check_position(std::size_t len, Position i) {
  if (i > len) throw std::out_of_range("position beyond the end of the trace");
}

}  // namespace

bool eval(const Formula& f, const Trace& t, Position i) {
  check_position(t.size(), i);
  Evaluator ev(t.letters, nullptr);
  return ev.values(f)[i];
}

bool eval_timed(const Formula& f, const TimedTrace& t, Position i) {
  check_position(t.size(), i);
  t.validate();
  Evaluator ev(t.letters, &t.times);
  return ev.values(f)[i];
}

PathRelation path_relation(const Path& p, const Trace& t) {
  Evaluator ev(t.letters, nullptr);
  return ev.relation(p);
}

PathRelation path_relation(const Path& p, const TimedTrace& t) {
  Evaluator ev(t.letters, &t.times);
  return ev.relation(p);
}

bool holds(const Formula& f, const Trace& t) { return eval(f, t, 0); }
bool holds(const Formula& f, const TimedTrace& t) { return eval_timed(f, t, 0); }

}  // namespace ldlf
