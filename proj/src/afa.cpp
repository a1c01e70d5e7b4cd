#include "ldlf/afa.hpp"

#include <algorithm>
#include <unordered_set>

namespace ldlf {

bool satisfies(const Formula& guard, const Alphabet& ap, std::uint32_t letter) {
  switch (guard.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: {
      auto bit = ap.index(guard.name());
      return bit && (letter >> *bit & 1U);
    }
    case Op::Not: return !satisfies(guard.lhs(), ap, letter);
    case Op::And: return satisfies(guard.lhs(), ap, letter) && satisfies(guard.rhs(), ap, letter);
    case Op::Or: return satisfies(guard.lhs(), ap, letter) || satisfies(guard.rhs(), ap, letter);
    case Op::Implies: return !satisfies(guard.lhs(), ap, letter) || satisfies(guard.rhs(), ap, letter);
    default: throw std::invalid_argument("step guard is not propositional: " + format(guard));
  }
}

Formula normalize(const Formula& f) { return to_dynamic_core(nnf(f)); }

namespace {

Formula modal(bool diamond, Path p, Formula body) {
  return diamond ? Formula::diamond(std::move(p), std::move(body)) : Formula::box(std::move(p), std::move(body));
}

// Expands one state formula under one letter. Stars currently being expanded
// sit in `active`; meeting one again means a loop that made no progress, which
// fails for a diamond and holds for a box.
class Expander {
public:
  Expander(const StateSet& states, const Alphabet& ap, std::uint32_t letter)
      : states_(states), ap_(ap), letter_(letter) {}

  Pbf expand(const Formula& f) {
    switch (f.op()) {
      case Op::True: return Pbf::top();
      case Op::False: return Pbf::bottom();
      case Op::Atom:
      case Op::Not:
        return satisfies(f, ap_, letter_) ? Pbf::top() : Pbf::bottom();
      case Op::And: return Pbf::conj(expand(f.lhs()), expand(f.rhs()));
      case Op::Or: return Pbf::disj(expand(f.lhs()), expand(f.rhs()));
      case Op::Diamond:
      case Op::Box:
        return expand_modal(f);
      default:
        throw UnsupportedOperatorError("AFA cannot expand " + format(f));
    }
  }

private:
  Pbf expand_modal(const Formula& f) {
    const bool dia = f.op() == Op::Diamond;
    const Path p = f.path();
    const Formula body = f.rhs();
    switch (p.op()) {
      case PathOp::Step:
        if (satisfies(p.formula(), ap_, letter_)) return Pbf::ref(ordinal(body));
        return dia ? Pbf::bottom() : Pbf::top();
      case PathOp::Test:
        if (dia) return Pbf::conj(expand(p.formula()), expand(body));
        return Pbf::disj(expand(nnf(Formula::negate(p.formula()))), expand(body));
      case PathOp::Seq:
        return expand(modal(dia, p.lhs(), modal(dia, p.rhs(), body)));
      case PathOp::Alt: {
        Pbf l = expand(modal(dia, p.lhs(), body));
        Pbf r = expand(modal(dia, p.rhs(), body));
        return dia ? Pbf::disj(l, r) : Pbf::conj(l, r);
      }
      case PathOp::Star: {
        if (active_.count(f)) return dia ? Pbf::bottom() : Pbf::top();
        active_.insert(f);
        Pbf stop = expand(body);
        Pbf again = expand(modal(dia, p.lhs(), f));
        active_.erase(f);
        return dia ? Pbf::disj(stop, again) : Pbf::conj(stop, again);
      }
    }
    throw std::logic_error("unreachable");
  }

  std::size_t ordinal(const Formula& f) const {
    auto q = states_.find(f);
    if (!q) throw std::logic_error("step target outside the closure: " + format(f));
    return *q;
  }

  const StateSet& states_;
  const Alphabet& ap_;
  std::uint32_t letter_;
  std::unordered_set<Formula, FormulaHash> active_;
};

}  // namespace

bool end_value(const Formula& f) {
  switch (f.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: return false;
    case Op::Not: return !end_value(f.lhs());
    case Op::And: return end_value(f.lhs()) && end_value(f.rhs());
    case Op::Or: return end_value(f.lhs()) || end_value(f.rhs());
    case Op::Diamond:
    case Op::Box: {
      const bool dia = f.op() == Op::Diamond;
      const Path p = f.path();
      const Formula body = f.rhs();
      switch (p.op()) {
        case PathOp::Step:
        case PathOp::Star:
          return !dia;
        case PathOp::Test:
          if (dia) return end_value(p.formula()) && end_value(body);
          return !end_value(p.formula()) || end_value(body);
        case PathOp::Seq:
          return end_value(modal(dia, p.lhs(), modal(dia, p.rhs(), body)));
        case PathOp::Alt: {
          const bool l = end_value(modal(dia, p.lhs(), body));
          const bool r = end_value(modal(dia, p.rhs(), body));
          return dia ? (l || r) : (l && r);
        }
      }
      break;
    }
    default:
      break;
  }
  throw UnsupportedOperatorError("no structural end value for " + format(f));
}

Afa::Afa(Alphabet ap, StateSet states) : ap_(std::move(ap)), states_(std::move(states)) {
  final_.reserve(states_.size());
  for (const Formula& q : states_) final_.push_back(end_value(q));
}

Pbf Afa::delta(std::size_t q, std::uint32_t letter) const {
  if (q >= states_.size()) throw std::out_of_range("AFA state out of range");
  Expander ex(states_, ap_, letter);
  return ex.expand(states_[q]);
}

Afa translate_afa(const Formula& f, const Alphabet& ap) {
  if (has_metric(f)) throw UnsupportedOperatorError("AFA backend does not support metric next");
  if (has_past(f)) throw UnsupportedOperatorError("AFA backend does not support past operators");
  if (!is_nnf(f) || !is_dynamic_core(f))
    throw std::invalid_argument("AFA translation expects an NNF dynamic-core formula");
  for (const std::string& a : atoms(f))
    if (!ap.index(a)) throw AlphabetError("atom '" + a + "' is not in the alphabet");
  return Afa(ap, closure(f));
}

Afa translate_afa(const Formula& f) { return translate_afa(f, Alphabet(atoms(f))); }

Pbf delta(const Afa& a, std::size_t q, const Letter& letter) { return a.delta(q, a.ap().mask(letter)); }

bool finalval(const Afa& a, std::size_t q) { return a.final_value(q); }

bool afa_accepts(const Afa& a, const Trace& t) {
  std::vector<std::uint32_t> letters;
  letters.reserve(t.size());
  for (const Letter& l : t.letters) letters.push_back(a.ap().mask(l));

  const std::size_t len = t.size();
  // memo[i][q]: -1 unknown, else truth of state q at position i
  std::vector<std::vector<signed char>> memo(len + 1, std::vector<signed char>(a.size(), -1));
  auto acc = [&](std::size_t q, std::size_t i, auto&& self) -> bool {
    signed char& m = memo[i][q];
    if (m >= 0) return m;
    bool v;
    if (i == len) {
      v = a.final_value(q);
    } else {
      v = a.delta(q, letters[i]).evaluate([&](std::size_t r) { return self(r, i + 1, self); });
    }
    m = v;
    return v;
  };
  return acc(a.initial(), 0, acc);
}

}  // namespace ldlf
