#ifndef LDLF_TWAFA_HPP
#define LDLF_TWAFA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ldlf/afa.hpp"
#include "ldlf/formula.hpp"
#include "ldlf/pbf.hpp"
#include "ldlf/trace.hpp"

namespace ldlf {

enum class Move { L, S, R };

char move_char(Move m);

struct TwoAfaLeaf {
  std::size_t state = 0;
  Move move = Move::S;

  friend bool operator==(const TwoAfaLeaf&, const TwoAfaLeaf&) = default;
  friend auto operator<=>(const TwoAfaLeaf&, const TwoAfaLeaf&) = default;
};

using TwoPbf = BasicPbf<TwoAfaLeaf>;

/// A letter of the trace or one of the two end markers.
struct MarkedLetter {
  enum class Kind { Begin, Letter, End };
  Kind kind = Kind::Letter;
  std::uint32_t mask = 0;

  static MarkedLetter begin() { return {Kind::Begin, 0}; }
  static MarkedLetter end() { return {Kind::End, 0}; }
  static MarkedLetter letter(std::uint32_t m) { return {Kind::Letter, m}; }
};

/// Landing states are entered by a left move. At BEGIN there is nothing to
/// land on, so a strong landing fails and a weak one holds; anywhere else
/// they hand over to their formula without moving.
enum class Landing { None, Strong, Weak };

struct TwoAfaState {
  Formula formula;
  Landing landing = Landing::None;

  friend bool operator==(const TwoAfaState&, const TwoAfaState&) = default;
};

std::string format_state(const TwoAfaState& s);

class TwoAfa {
public:
  const Alphabet& ap() const { return ap_; }
  std::size_t size() const { return states_.size(); }
  std::size_t initial() const { return 0; }
  const TwoAfaState& state(std::size_t q) const { return states_.at(q); }
  std::optional<std::size_t> find(const TwoAfaState& s) const;

  TwoPbf transition(std::size_t q, MarkedLetter m) const;

private:
  friend TwoAfa translate_2afa(const Formula& f, const Alphabet& ap);

  TwoAfa(Alphabet ap, const Formula& root);
  std::size_t intern(const TwoAfaState& s);

  Alphabet ap_;
  std::vector<TwoAfaState> states_;
  std::map<std::pair<Formula, Landing>, std::size_t> index_;
};

/// Expects an NNF formula whose future part is in dynamic core; past
/// operators are primitive. Throws UnsupportedOperatorError on metric next.
TwoAfa translate_2afa(const Formula& f, const Alphabet& ap);
TwoAfa translate_2afa(const Formula& f);

/// Configuration positions run from -1 (BEGIN) to size() (END); value and
/// transition tables are indexed by position + 1.
struct TwoAfaRun {
  bool accepted = false;
  std::size_t start_position = 0;
  /// Rounds of the fixpoint iteration that changed at least one value.
  std::size_t iterations = 0;
  std::vector<std::vector<bool>> value;
  std::vector<std::vector<TwoPbf>> transitions;
};

/// Least fixpoint of the one-step operator over all configurations.
TwoAfaRun twafa_run(const TwoAfa& a, const Trace& t);
bool twafa_accepts(const TwoAfa& a, const Trace& t);

}  // namespace ldlf

#endif  // LDLF_TWAFA_HPP
