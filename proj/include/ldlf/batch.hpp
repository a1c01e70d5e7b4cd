#ifndef LDLF_BATCH_HPP
#define LDLF_BATCH_HPP

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "ldlf/formula.hpp"
#include "ldlf/trace.hpp"

namespace ldlf {

enum class Backend { Oracle, Afa, Nfa, Dfa, TwoAfa };

std::optional<Backend> parse_backend(std::string_view name);
std::string_view backend_name(Backend b);

/// A formula compiled once for one backend. Atoms of a trace that the
/// formula never mentions are dropped before the automaton reads it.
class Acceptor {
public:
  Acceptor(const Formula& f, Backend backend);
  ~Acceptor();
  Acceptor(Acceptor&&) noexcept;
  Acceptor& operator=(Acceptor&&) noexcept;

  Backend backend() const;
  bool accepts(const Trace& t) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// verdicts[k] = acc.accepts(traces[k]), computed across OpenMP threads.
std::vector<bool> verdicts(const Acceptor& acc, const std::vector<Trace>& traces);
/// Single-threaded reference for verdicts().
std::vector<bool> verdicts_serial(const Acceptor& acc, const std::vector<Trace>& traces);

}  // namespace ldlf

#endif  // LDLF_BATCH_HPP
