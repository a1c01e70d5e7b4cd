#include "ldlf/twafa.hpp"

#include <functional>
#include <stdexcept>

namespace ldlf {

char move_char(Move m) {
  switch (m) {
    case Move::L: return 'L';
    case Move::S: return 'S';
    case Move::R: return 'R';
  }
  return '?';
}

std::string format_state(const TwoAfaState& s) {
  switch (s.landing) {
    case Landing::None: return format(s.formula);
    case Landing::Strong: return "land(" + format(s.formula) + ")";
    case Landing::Weak: return "wland(" + format(s.formula) + ")";
  }
  return {};
}

namespace {

using F = Formula;
using Resolve = std::function<std::size_t(const TwoAfaState&)>;

Formula modal(bool diamond, Path p, Formula body) {
  return diamond ? F::diamond(std::move(p), std::move(body)) : F::box(std::move(p), std::move(body));
}

// Condition under which p has a path that does not move.
Formula stays(const Path& p) {
  switch (p.op()) {
    case PathOp::Step: return F::bottom();
    case PathOp::Test: return p.formula();
    case PathOp::Seq: return F::conj(stays(p.lhs()), stays(p.rhs()));
    case PathOp::Alt: return F::disj(stays(p.lhs()), stays(p.rhs()));
    case PathOp::Star: return F::top();
  }
  throw std::logic_error("unreachable");
}

// The paths of p that move at least once.
Path progress(const Path& p) {
  switch (p.op()) {
    case PathOp::Step: return p;
    case PathOp::Test: return Path::test(F::bottom());
    case PathOp::Seq:
      return Path::alt(Path::seq(progress(p.lhs()), p.rhs()), Path::seq(Path::test(stays(p.lhs())), progress(p.rhs())));
    case PathOp::Alt: return Path::alt(progress(p.lhs()), progress(p.rhs()));
    case PathOp::Star: return Path::seq(progress(p.lhs()), p);
  }
  throw std::logic_error("unreachable");
}

class Emitter {
public:
  Emitter(const Alphabet& ap, MarkedLetter m, bool discover, const Resolve& resolve)
      : ap_(ap), m_(m), discover_(discover), resolve_(resolve) {}

  TwoPbf emit(const TwoAfaState& s) {
    if (s.landing != Landing::None) {
      if (m_.kind == MarkedLetter::Kind::Begin) return s.landing == Landing::Weak ? TwoPbf::top() : TwoPbf::bottom();
      return stay(s.formula);
    }
    if (m_.kind == MarkedLetter::Kind::Begin) return TwoPbf::bottom();
    return formula(s.formula);
  }

private:
  bool at_end() const { return m_.kind == MarkedLetter::Kind::End; }

  bool guard(const Formula& g) const { return discover_ || satisfies(g, ap_, m_.mask); }

  TwoPbf leaf(const Formula& f, Landing landing, Move move) {
    return TwoPbf::ref(TwoAfaLeaf{resolve_(TwoAfaState{f, landing}), move});
  }
  TwoPbf stay(const Formula& f) { return leaf(f, Landing::None, Move::S); }

  TwoPbf formula(const Formula& f) {
    switch (f.op()) {
      case Op::True: return TwoPbf::top();
      case Op::False: return TwoPbf::bottom();
      case Op::Atom:
      case Op::Not:
        if (at_end()) return f.op() == Op::Not ? TwoPbf::top() : TwoPbf::bottom();
        return satisfies(f, ap_, m_.mask) ? TwoPbf::top() : TwoPbf::bottom();
      case Op::And: return TwoPbf::conj(stay(f.lhs()), stay(f.rhs()));
      case Op::Or: return TwoPbf::disj(stay(f.lhs()), stay(f.rhs()));
      case Op::Prev: return leaf(f.lhs(), Landing::Strong, Move::L);
      case Op::WeakPrev: return leaf(f.lhs(), Landing::Weak, Move::L);
      case Op::Since:
        return TwoPbf::disj(stay(f.rhs()), TwoPbf::conj(stay(f.lhs()), leaf(f, Landing::Strong, Move::L)));
      case Op::Trigger:
        return TwoPbf::conj(stay(f.rhs()), TwoPbf::disj(stay(f.lhs()), leaf(f, Landing::Weak, Move::L)));
      case Op::Diamond:
      case Op::Box:
        return modal_formula(f);
      case Op::MetricNext:
      case Op::WeakMetricNext:
        throw UnsupportedOperatorError("2AFA backend does not support metric next");
      default:
        throw std::invalid_argument("2AFA translation expects NNF dynamic core, got " + format(f));
    }
  }

  TwoPbf modal_formula(const Formula& f) {
    const bool dia = f.op() == Op::Diamond;
    const Path p = f.path();
    const Formula body = f.rhs();
    switch (p.op()) {
      case PathOp::Step:
        if (!at_end() && guard(p.formula())) return leaf(body, Landing::None, Move::R);
        return dia ? TwoPbf::bottom() : TwoPbf::top();
      case PathOp::Test:
        if (dia) return TwoPbf::conj(stay(p.formula()), stay(body));
        return TwoPbf::disj(stay(nnf(F::negate(p.formula()))), stay(body));
      case PathOp::Seq: return stay(modal(dia, p.lhs(), modal(dia, p.rhs(), body)));
      case PathOp::Alt: {
        TwoPbf l = stay(modal(dia, p.lhs(), body));
        TwoPbf r = stay(modal(dia, p.rhs(), body));
        return dia ? TwoPbf::disj(l, r) : TwoPbf::conj(l, r);
      }
      case PathOp::Star:
        if (at_end()) return dia ? TwoPbf::bottom() : TwoPbf::top();
        if (dia) return TwoPbf::disj(stay(body), stay(F::diamond(p.lhs(), f)));
        return TwoPbf::conj(stay(body), stay(F::box(progress(p.lhs()), f)));
    }
    throw std::logic_error("unreachable");
  }

  const Alphabet& ap_;
  MarkedLetter m_;
  bool discover_;
  const Resolve& resolve_;
};

}  // namespace

std::optional<std::size_t> TwoAfa::find(const TwoAfaState& s) const {
  auto it = index_.find({s.formula, s.landing});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TwoAfa::intern(const TwoAfaState& s) {
  auto [it, inserted] = index_.try_emplace({s.formula, s.landing}, states_.size());
  if (inserted) states_.push_back(s);
  return it->second;
}

TwoAfa::TwoAfa(Alphabet ap, const Formula& root) : ap_(std::move(ap)) {
  intern(TwoAfaState{root, Landing::None});
  const Resolve resolve = [this](const TwoAfaState& s) { return intern(s); };
  // A letter-blind pass with every step guard taken reaches every state any
  // real letter can reach.
  for (std::size_t q = 0; q < states_.size(); ++q) {
    const TwoAfaState s = states_[q];
    for (MarkedLetter m : {MarkedLetter::begin(), MarkedLetter::letter(0), MarkedLetter::end()}) {
      Emitter(ap_, m, m.kind == MarkedLetter::Kind::Letter, resolve).emit(s);
    }
  }
}

TwoPbf TwoAfa::transition(std::size_t q, MarkedLetter m) const {
  const Resolve resolve = [this](const TwoAfaState& s) {
    auto r = find(s);
    if (!r) throw std::logic_error("2AFA transition leaves the state space: " + format_state(s));
    return *r;
  };
  return Emitter(ap_, m, false, resolve).emit(states_.at(q));
}

TwoAfa translate_2afa(const Formula& f, const Alphabet& ap) {
  if (has_metric(f)) throw UnsupportedOperatorError("2AFA backend does not support metric next");
  if (!is_nnf(f) || !is_dynamic_core(f))
    throw std::invalid_argument("2AFA translation expects an NNF dynamic-core formula");
  for (const std::string& a : atoms(f))
    if (!ap.index(a)) throw AlphabetError("atom '" + a + "' is not in the alphabet");
  return TwoAfa(ap, f);
}

TwoAfa translate_2afa(const Formula& f) { return translate_2afa(f, Alphabet(atoms(f))); }

TwoAfaRun twafa_run(const TwoAfa& a, const Trace& t) {
  const std::size_t len = t.size();
  const std::size_t cols = len + 2;  // BEGIN, letters, END
  TwoAfaRun run;
  run.start_position = 0;
  run.transitions.assign(cols, {});
  for (std::size_t c = 0; c < cols; ++c) {
    MarkedLetter m = c == 0 ? MarkedLetter::begin()
                     : c == cols - 1 ? MarkedLetter::end()
                                     : MarkedLetter::letter(a.ap().mask(t[c - 1]));
    run.transitions[c].reserve(a.size());
    for (std::size_t q = 0; q < a.size(); ++q) run.transitions[c].push_back(a.transition(q, m));
  }

  run.value.assign(cols, std::vector<bool>(a.size(), false));
  auto read = [&](std::size_t c) {
    return [&, c](const TwoAfaLeaf& leaf) {
      std::size_t target = c;
      if (leaf.move == Move::L) --target;
      if (leaf.move == Move::R) ++target;
      return static_cast<bool>(run.value[target][leaf.state]);
    };
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::vector<bool>> next = run.value;
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t q = 0; q < a.size(); ++q)
        if (!next[c][q] && run.transitions[c][q].evaluate(read(c))) {
          next[c][q] = true;
          changed = true;
        }
    if (changed) {
      run.value = std::move(next);
      ++run.iterations;
    }
  }
  run.accepted = run.value[1][a.initial()];
  return run;
}

bool twafa_accepts(const TwoAfa& a, const Trace& t) { return twafa_run(a, t).accepted; }

}  // namespace ldlf
