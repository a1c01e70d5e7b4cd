#include <stdexcept>

#include "ldlf/formula.hpp"

namespace ldlf {

namespace {

// Binding strength, loosest first; mirrors the parser.
enum Prec { Implies = 1, Or = 2, And = 3, Binary = 4, Unary = 5, Leaf = 6 };

int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::Implies: return Implies;
    case Op::Or: return Or;
    case Op::And: return And;
    case Op::Until:
    case Op::Release:
    case Op::Since:
    case Op::Trigger:
      return Binary;
    case Op::Atom:
    case Op::True:
    case Op::False:
      return Leaf;
    default:
      return Unary;
  }
}

std::string interval(const Formula& f) {
  return "[" + std::to_string(f.lo()) + "," + (f.hi() ? std::to_string(*f.hi()) : "inf") + ")";
}

std::string render(const Formula& f, int min_prec);
std::string render(const Path& p, int min_prec);

std::string render(const Formula& f, int min_prec) {
  const int prec = precedence(f);
  std::string s;
  auto bin = [&](const char* op, int lhs_prec, int rhs_prec) {
    s = render(f.lhs(), lhs_prec) + " " + op + " " + render(f.rhs(), rhs_prec);
  };
  switch (f.op()) {
    case Op::Atom: s = f.name(); break;
    case Op::True: s = "tt"; break;
    case Op::False: s = "ff"; break;
    case Op::Not: s = "!" + render(f.lhs(), Unary); break;
    case Op::And: bin("&", And, And + 1); break;
    case Op::Or: bin("|", Or, Or + 1); break;
    case Op::Implies: bin("->", Implies + 1, Implies); break;
    case Op::Until: bin("U", Binary + 1, Binary); break;
    case Op::Release: bin("R", Binary + 1, Binary); break;
    case Op::Since: bin("S", Binary + 1, Binary); break;
    case Op::Trigger: bin("T", Binary + 1, Binary); break;
    case Op::Next: s = "X " + render(f.lhs(), Unary); break;
    case Op::WeakNext: s = "WX " + render(f.lhs(), Unary); break;
    case Op::Eventually: s = "F " + render(f.lhs(), Unary); break;
    case Op::Always: s = "G " + render(f.lhs(), Unary); break;
    case Op::Prev: s = "Y " + render(f.lhs(), Unary); break;
    case Op::WeakPrev: s = "WY " + render(f.lhs(), Unary); break;
    case Op::MetricNext: s = "X" + interval(f) + " " + render(f.lhs(), Unary); break;
    case Op::WeakMetricNext: s = "WX" + interval(f) + " " + render(f.lhs(), Unary); break;
    case Op::Diamond: s = "<" + render(f.path(), 1) + "> " + render(f.rhs(), Unary); break;
    case Op::Box: s = "[" + render(f.path(), 1) + "] " + render(f.rhs(), Unary); break;
  }
  return prec < min_prec ? "(" + s + ")" : s;
}

// Path binding: + is 1, ; is 2, postfix and leaves 3.
std::string render(const Path& p, int min_prec) {
  int prec = 3;
  std::string s;
  switch (p.op()) {
    case PathOp::Step:
      s = render(p.formula(), Unary);
      break;
    case PathOp::Test:
      s = render(p.formula(), Unary) + "?";
      break;
    case PathOp::Seq:
      prec = 2;
      s = render(p.lhs(), 2) + " ; " + render(p.rhs(), 3);
      break;
    case PathOp::Alt:
      prec = 1;
      s = render(p.lhs(), 1) + " + " + render(p.rhs(), 2);
      break;
    case PathOp::Star:
      s = render(p.lhs(), 3) + "*";
      break;
  }
  return prec < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string format(const Formula& f) { return render(f, 0); }
std::string format(const Path& p) { return render(p, 0); }

}  // namespace ldlf
