#include "ldlf/batch.hpp"

#include <variant>

#include "ldlf/afa.hpp"
#include "ldlf/fa.hpp"
#include "ldlf/oracle.hpp"
#include "ldlf/twafa.hpp"

namespace ldlf {

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "oracle") return Backend::Oracle;
  if (name == "afa") return Backend::Afa;
  if (name == "nfa") return Backend::Nfa;
  if (name == "dfa") return Backend::Dfa;
  if (name == "2afa") return Backend::TwoAfa;
  return std::nullopt;
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Oracle: return "oracle";
    case Backend::Afa: return "afa";
    case Backend::Nfa: return "nfa";
    case Backend::Dfa: return "dfa";
    case Backend::TwoAfa: return "2afa";
  }
  return "?";
}

struct Acceptor::Impl {
  Backend backend;
  Formula formula;
  Alphabet ap;
  std::variant<std::monostate, Afa, Nfa, Dfa, TwoAfa> machine;

  Trace project(const Trace& t) const {
    Trace out;
    out.letters.reserve(t.size());
    for (const Letter& l : t.letters) {
      std::vector<std::string> kept;
      for (const std::string& a : l.atoms())
        if (ap.index(a)) kept.push_back(a);
      out.letters.emplace_back(std::move(kept));
    }
    return out;
  }
};

Acceptor::Acceptor(const Formula& f, Backend backend) : impl_(std::make_unique<Impl>()) {
  impl_->backend = backend;
  impl_->formula = f;
  impl_->ap = Alphabet(atoms(f));
  switch (backend) {
    case Backend::Oracle: break;
    case Backend::Afa: impl_->machine = translate_afa(normalize(f), impl_->ap); break;
    case Backend::Nfa: impl_->machine = dealternate(translate_afa(normalize(f), impl_->ap)); break;
    case Backend::Dfa: impl_->machine = compile_dfa(f, impl_->ap); break;
    case Backend::TwoAfa: impl_->machine = translate_2afa(normalize(f), impl_->ap); break;
  }
}

Acceptor::~Acceptor() = default;
Acceptor::Acceptor(Acceptor&&) noexcept = default;
Acceptor& Acceptor::operator=(Acceptor&&) noexcept = default;

Backend Acceptor::backend() const { return impl_->backend; }

bool Acceptor::accepts(const Trace& t) const {
  if (impl_->backend == Backend::Oracle) return holds(impl_->formula, t);
  const Trace p = impl_->project(t);
  return std::visit(
      [&](const auto& m) -> bool {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Afa>) return afa_accepts(m, p);
        else if constexpr (std::is_same_v<M, Nfa>) return nfa_accepts(m, p);
        else if constexpr (std::is_same_v<M, Dfa>) return dfa_accepts(m, p);
        else if constexpr (std::is_same_v<M, TwoAfa>) return twafa_accepts(m, p);
        else return false;
      },
      impl_->machine);
}

std::vector<bool> verdicts(const Acceptor& acc, const std::vector<Trace>& traces) {
  std::vector<char> out(traces.size(), 0);
  const auto n = static_cast<std::int64_t>(traces.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < n; ++k) out[k] = acc.accepts(traces[k]) ? 1 : 0;
  return {out.begin(), out.end()};
}

std::vector<bool> verdicts_serial(const Acceptor& acc, const std::vector<Trace>& traces) {
  std::vector<bool> out;
  out.reserve(traces.size());
  for (const Trace& t : traces) out.push_back(acc.accepts(t));
  return out;
}

}  // namespace ldlf
