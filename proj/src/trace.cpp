#include "ldlf/trace.hpp"

#include <algorithm>

namespace ldlf {

Letter::Letter(std::initializer_list<std::string> atoms) : Letter(std::vector<std::string>(atoms)) {}

Letter::Letter(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool Letter::contains(std::string_view atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom,
                            [](std::string_view a, std::string_view b) { return a < b; });
}

void TimedTrace::validate() const {
  if (letters.size() != times.size())
    throw std::invalid_argument("timed trace: letters and times differ in length");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] < times[i - 1]) throw std::invalid_argument("timed trace: decreasing timestamps");
}

Alphabet::Alphabet(const std::set<std::string>& atoms) : names_(atoms.begin(), atoms.end()) {
  if (names_.size() > max_atoms)
    throw SizeLimitError("alphabet exceeds " + std::to_string(max_atoms) + " atoms");
}

std::uint32_t Alphabet::mask(const Letter& letter) const {
  std::uint32_t m = 0;
  for (const std::string& a : letter.atoms()) {
    auto it = std::lower_bound(names_.begin(), names_.end(), a);
    if (it == names_.end() || *it != a) throw AlphabetError("atom '" + a + "' is not in the alphabet");
    m |= std::uint32_t{1} << (it - names_.begin());
  }
  return m;
}

Letter Alphabet::letter(std::uint32_t mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) out.push_back(names_[i]);
  return Letter(std::move(out));
}

std::optional<std::size_t> Alphabet::index(std::string_view atom) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), atom,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names_.end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::set<std::string> atoms(const Trace& t) {
  std::set<std::string> out;
  for (const Letter& l : t.letters) out.insert(l.atoms().begin(), l.atoms().end());
  return out;
}

std::size_t trace_count(std::size_t atom_count, std::size_t max_len) {
  constexpr std::size_t limit = 1'000'000;
  if (atom_count > 8) throw SizeLimitError("trace enumeration supports at most 8 atoms");
  const std::size_t letters = std::size_t{1} << atom_count;
  std::size_t power = 1;
  std::size_t total = 1;
  for (std::size_t k = 1; k <= max_len; ++k) {
    if (power > limit / letters) throw SizeLimitError("trace enumeration exceeds 10^6 traces per length");
    power *= letters;
    total += power;
  }
  return total;
}

void for_each_trace(const Alphabet& ap, std::size_t min_len, std::size_t max_len,
                    const std::function<void(const Trace&)>& visit) {
  trace_count(ap.size(), max_len);
  const std::uint32_t letters = ap.letter_count();
  std::vector<Letter> decoded;
  for (std::uint32_t m = 0; m < letters; ++m) decoded.push_back(ap.letter(m));

  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::vector<std::uint32_t> digits(len, 0);
    Trace t;
    t.letters.assign(len, decoded[0]);
    while (true) {
      visit(t);
      // odometer increment, last position fastest
      std::size_t k = len;
      while (k > 0 && ++digits[k - 1] == letters) {
        digits[k - 1] = 0;
        t.letters[k - 1] = decoded[0];
        --k;
      }
      if (k == 0) break;
      t.letters[k - 1] = decoded[digits[k - 1]];
    }
  }
}

std::vector<Trace> enumerate_traces(const std::set<std::string>& ap, std::size_t max_len) {
  Alphabet alphabet(ap);
  std::vector<Trace> out;
  out.reserve(trace_count(alphabet.size(), max_len));
  for_each_trace(alphabet, 0, max_len, [&](const Trace& t) { out.push_back(t); });
  return out;
}

std::string format_letter(const Letter& l) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.atoms().size(); ++i) {
    if (i) s += ',';
    s += l.atoms()[i];
  }
  return s + "}";
}

std::string format_trace(const Trace& t) {
  if (t.empty()) return "eps";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ';';
    s += format_letter(t[i]);
  }
  return s;
}

std::string format_trace(const TimedTrace& t) {
  if (t.letters.empty()) return "eps";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ';';
    s += format_letter(t.letters[i]) + "@" + std::to_string(t.times[i]);
  }
  return s;
}

}  // namespace ldlf
