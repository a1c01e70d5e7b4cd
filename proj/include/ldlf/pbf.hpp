#ifndef LDLF_PBF_HPP
#define LDLF_PBF_HPP

#include <cstdint>
#include <memory>
#include <utility>

namespace ldlf {

/// Positive boolean formula over leaves of type `Leaf`. Conjunction encodes
/// universal branching, disjunction existential branching. There is no
/// negation constructor, so every value is positive by construction.
/// conj/disj absorb constant operands.
template <class Leaf>
class BasicPbf {
public:
  enum class Kind : std::uint8_t { True, False, Ref, And, Or };

  BasicPbf() : kind_(Kind::False) {}

  static BasicPbf top() { return BasicPbf(Kind::True); }
  static BasicPbf bottom() { return BasicPbf(Kind::False); }
  static BasicPbf ref(Leaf leaf) {
    BasicPbf p(Kind::Ref);
    p.leaf_ = std::move(leaf);
    return p;
  }
  static BasicPbf conj(BasicPbf a, BasicPbf b) {
    if (a.kind_ == Kind::False || b.kind_ == Kind::False) return bottom();
    if (a.kind_ == Kind::True) return b;
    if (b.kind_ == Kind::True) return a;
    return node(Kind::And, std::move(a), std::move(b));
  }
  static BasicPbf disj(BasicPbf a, BasicPbf b) {
    if (a.kind_ == Kind::True || b.kind_ == Kind::True) return top();
    if (a.kind_ == Kind::False) return b;
    if (b.kind_ == Kind::False) return a;
    return node(Kind::Or, std::move(a), std::move(b));
  }

  Kind kind() const { return kind_; }
  bool is_true() const { return kind_ == Kind::True; }
  bool is_false() const { return kind_ == Kind::False; }
  const Leaf& leaf() const { return leaf_; }
  const BasicPbf& left() const { return *left_; }
  const BasicPbf& right() const { return *right_; }

  /// Evaluates with `value(leaf) -> bool` supplying leaf truth.
  template <class Fn>
  bool evaluate(Fn&& value) const {
    switch (kind_) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Ref: return value(leaf_);
      case Kind::And: return left_->evaluate(value) && right_->evaluate(value);
      case Kind::Or: return left_->evaluate(value) || right_->evaluate(value);
    }
    return false;
  }

  /// Calls `visit(leaf)` for every leaf, left to right.
  template <class Fn>
  void for_each_leaf(Fn&& visit) const {
    if (kind_ == Kind::Ref) {
      visit(leaf_);
    } else if (kind_ == Kind::And || kind_ == Kind::Or) {
      left_->for_each_leaf(visit);
      right_->for_each_leaf(visit);
    }
  }

  friend bool operator==(const BasicPbf& a, const BasicPbf& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::True:
      case Kind::False:
        return true;
      case Kind::Ref:
        return a.leaf_ == b.leaf_;
      default:
        return *a.left_ == *b.left_ && *a.right_ == *b.right_;
    }
  }

private:
  explicit BasicPbf(Kind k) : kind_(k) {}

  static BasicPbf node(Kind k, BasicPbf a, BasicPbf b) {
    BasicPbf p(k);
    p.left_ = std::make_shared<const BasicPbf>(std::move(a));
    p.right_ = std::make_shared<const BasicPbf>(std::move(b));
    return p;
  }

  Kind kind_;
  Leaf leaf_{};
  std::shared_ptr<const BasicPbf> left_;
  std::shared_ptr<const BasicPbf> right_;
};

}  // namespace ldlf

#endif  // LDLF_PBF_HPP
