#ifndef LDLF_FA_HPP
#define LDLF_FA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ldlf/afa.hpp"
#include "ldlf/formula.hpp"
#include "ldlf/trace.hpp"

namespace ldlf {

/// A construction produced more states than its budget allows. Raised
/// instead of returning a truncated automaton.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t max_states = std::size_t{1} << 20;
};

/// Nondeterministic automaton whose states are sets of AFA states.
struct Nfa {
  Alphabet ap;
  /// AFA ordinals making up each state, sorted.
  std::vector<std::vector<std::uint32_t>> sets;
  std::size_t initial = 0;
  std::vector<bool> accepting;
  /// transitions[state][letter] lists successor states.
  std::vector<std::vector<std::vector<std::uint32_t>>> transitions;

  std::size_t size() const { return sets.size(); }
  std::size_t transition_count() const;
};

/// Complete deterministic automaton.
struct Dfa {
  Alphabet ap;
  std::size_t initial = 0;
  /// next[state][letter]
  std::vector<std::vector<std::uint32_t>> next;
  std::vector<bool> accepting;

  std::size_t size() const { return next.size(); }
  std::size_t transition_count() const { return next.size() * ap.letter_count(); }
};

/// Successors of a state-set are the minimal sets satisfying the
/// conjunction of its members' transition images.
Nfa dealternate(const Afa& a, Budget budget = {});

/// Subset construction over reachable macro-states; the empty macro-state
/// appears as a rejecting sink when reachable.
Dfa determinize(const Nfa& n, Budget budget = {});

/// Hopcroft partition refinement after dropping unreachable states. `seed`
/// permutes the order in which splitters are processed and therefore the
/// numbering of the result, never its shape.
Dfa minimize(const Dfa& d, std::uint64_t seed = 0);

/// Flips acceptance; the automaton is already complete.
Dfa complement(const Dfa& d);

/// True when a bijection between states maps initial to initial and commutes
/// with transitions and acceptance. Both automata must share an alphabet.
bool isomorphic(const Dfa& a, const Dfa& b);

bool nfa_accepts(const Nfa& n, const Trace& t);
bool dfa_accepts(const Dfa& d, const Trace& t);

/// normalize, translate_afa, dealternate, determinize, minimize.
Dfa compile_dfa(const Formula& f, const Alphabet& ap, Budget budget = {});
Dfa compile_dfa(const Formula& f, Budget budget = {});

/// Shortest trace (ties broken by letter order) accepted by exactly one of
/// the two automata.
std::optional<Trace> distinguishing_trace(const Dfa& a, const Dfa& b);

struct Equivalence {
  bool equivalent = false;
  std::optional<Trace> counterexample;
};

/// Compares minimal DFAs over the union alphabet.
Equivalence equivalent(const Formula& f, const Formula& g, Budget budget = {});

struct Emptiness {
  bool empty = true;
  std::optional<Trace> witness;  // shortest accepted trace
};

Emptiness is_empty(const Dfa& d);

/// Accepted traces of length 0..max_len, in enumeration order. Throws
/// SizeLimitError beyond the enumeration bounds.
std::vector<Trace> enumerate_accepted(const Dfa& d, std::size_t max_len);

}  // namespace ldlf

#endif  // LDLF_FA_HPP
