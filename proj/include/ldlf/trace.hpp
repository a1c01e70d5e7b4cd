#ifndef LDLF_TRACE_HPP
#define LDLF_TRACE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ldlf {

/// Raised when an enumeration would exceed the desk-scale size bounds.
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a letter mentions an atom outside an automaton's alphabet.
class AlphabetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The set of atoms true at one time point.
class Letter {
public:
  Letter() = default;
  Letter(std::initializer_list<std::string> atoms);
  explicit Letter(std::vector<std::string> atoms);

  bool contains(std::string_view atom) const;
  const std::vector<std::string>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  friend bool operator==(const Letter&, const Letter&) = default;

private:
  std::vector<std::string> atoms_;  // sorted, unique
};

struct Trace {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct TimedTrace {
  std::vector<Letter> letters;
  std::vector<std::uint64_t> times;

  std::size_t size() const { return letters.size(); }
  Trace untimed() const { return Trace{letters}; }
  /// Throws std::invalid_argument when sizes differ or times decrease.
  void validate() const;

  friend bool operator==(const TimedTrace&, const TimedTrace&) = default;
};

/// Sorted atom universe; letters map to bitmasks with bit i <-> names()[i].
class Alphabet {
public:
  static constexpr std::size_t max_atoms = 16;

  Alphabet() = default;
  explicit Alphabet(const std::set<std::string>& atoms);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::uint32_t letter_count() const { return std::uint32_t{1} << names_.size(); }

  /// Throws AlphabetError when the letter has atoms outside the alphabet.
  std::uint32_t mask(const Letter& letter) const;
  Letter letter(std::uint32_t mask) const;
  std::optional<std::size_t> index(std::string_view atom) const;
  std::set<std::string> as_set() const { return {names_.begin(), names_.end()}; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> names_;
};

std::set<std::string> atoms(const Trace& t);

/// Number of traces of length 0..max_len; throws SizeLimitError beyond the
/// bounds |ap| <= 8 and (2^|ap|)^max_len <= 10^6.
std::size_t trace_count(std::size_t atom_count, std::size_t max_len);

/// Calls `visit` for every trace of length 0..max_len in length-then-
/// lexicographic order (letters ordered by mask).
void for_each_trace(const Alphabet& ap, std::size_t min_len, std::size_t max_len,
                    const std::function<void(const Trace&)>& visit);

std::vector<Trace> enumerate_traces(const std::set<std::string>& ap, std::size_t max_len);

std::string format_letter(const Letter& l);
std::string format_trace(const Trace& t);
std::string format_trace(const TimedTrace& t);

}  // namespace ldlf

#endif  // LDLF_TRACE_HPP
