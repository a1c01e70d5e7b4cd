#ifndef LDLF_AFA_HPP
#define LDLF_AFA_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ldlf/formula.hpp"
#include "ldlf/pbf.hpp"
#include "ldlf/trace.hpp"

namespace ldlf {

/// The formula uses a connective the selected backend cannot translate.
class UnsupportedOperatorError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Pbf = BasicPbf<std::size_t>;

/// Alternating automaton whose states are the closure of a dynamic-core
/// formula. Transitions are computed on demand from the state formulas.
class Afa {
public:
  const Alphabet& ap() const { return ap_; }
  const StateSet& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  std::size_t initial() const { return 0; }

  /// Transition image of state `q` under the letter with bitmask `letter`.
  Pbf delta(std::size_t q, std::uint32_t letter) const;
  /// Truth of state `q` at the end point of a trace.
  bool final_value(std::size_t q) const { return final_[q]; }

private:
  friend Afa translate_afa(const Formula& f, const Alphabet& ap);
  Afa(Alphabet ap, StateSet states);

  Alphabet ap_;
  StateSet states_;
  std::vector<bool> final_;
};

/// Propositional truth of `guard` under the letter with bitmask `letter`.
bool satisfies(const Formula& guard, const Alphabet& ap, std::uint32_t letter);

/// Normal form expected by the automata translations: nnf, then sugar
/// rewritten into path modalities.
Formula normalize(const Formula& f);

/// Throws UnsupportedOperatorError on past or metric connectives and
/// std::invalid_argument when `f` is not an NNF dynamic-core formula.
/// `ap` must contain atoms(f).
Afa translate_afa(const Formula& f, const Alphabet& ap);
Afa translate_afa(const Formula& f);

Pbf delta(const Afa& a, std::size_t q, const Letter& letter);
bool finalval(const Afa& a, std::size_t q);

/// Throws AlphabetError when the trace leaves the automaton's alphabet.
bool afa_accepts(const Afa& a, const Trace& t);

/// Truth of an NNF dynamic-core formula at the end point of a trace,
/// computed structurally.
bool end_value(const Formula& f);

}  // namespace ldlf

#endif  // LDLF_AFA_HPP
