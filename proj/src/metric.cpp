#include "ldlf/metric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ldlf {

bool MetricRule::body_holds(const Letter& letter) const {
  return std::all_of(body.begin(), body.end(),
                     [&](const BodyLiteral& lit) { return letter.contains(lit.atom) == lit.positive; });
}

std::set<std::string> MetricProgram::universe() const {
  std::set<std::string> out;
  for (const MetricRule& r : rules) {
    if (const auto* p = std::get_if<PlainHead>(&r.head)) out.insert(p->atom);
    if (const auto* m = std::get_if<MetricHead>(&r.head)) out.insert(m->atom);
    for (const BodyLiteral& lit : r.body) out.insert(lit.atom);
  }
  return out;
}

std::string format_rule(const MetricRule& rule) {
  std::string out;
  if (const auto* p = std::get_if<PlainHead>(&rule.head)) out = p->atom;
  if (const auto* m = std::get_if<MetricHead>(&rule.head)) {
    out = "X[" + std::to_string(m->lo) + "," + (m->hi ? std::to_string(*m->hi) : "inf") + ") " + m->atom;
  }
  if (!rule.body.empty()) {
    out += out.empty() ? ":- " : " :- ";
    for (std::size_t k = 0; k < rule.body.size(); ++k) {
      if (k) out += ", ";
      if (!rule.body[k].positive) out += "not ";
      out += rule.body[k].atom;
    }
  }
  return out + ".";
}

namespace {

// Head check with the timing ignored; `delay` supplies it when known.
bool head_holds(const Head& head, const std::vector<Letter>& letters, std::size_t i,
                const std::optional<std::uint64_t>& delay) {
  if (std::holds_alternative<std::monostate>(head)) return false;
  if (const auto* p = std::get_if<PlainHead>(&head)) return letters[i].contains(p->atom);
  const auto& m = std::get<MetricHead>(head);
  if (i + 1 >= letters.size() || !letters[i + 1].contains(m.atom)) return false;
  if (!delay) return true;
  return m.lo <= *delay && (!m.hi || *delay < *m.hi);
}

}  // namespace

std::vector<Violation> check_program(const MetricProgram& program, const TimedTrace& trace) {
  trace.validate();
  std::vector<Violation> out;
  for (std::size_t r = 0; r < program.rules.size(); ++r) {
    const MetricRule& rule = program.rules[r];
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if (!rule.body_holds(trace.letters[i])) continue;
      std::optional<std::uint64_t> delay;
      if (i + 1 < trace.size()) delay = trace.times[i + 1] - trace.times[i];
      if (!head_holds(rule.head, trace.letters, i, delay)) out.push_back({r, i});
    }
  }
  return out;
}

bool ConstraintSystem::satisfied_by(const std::vector<std::uint64_t>& times) const {
  if (times.size() != n_vars || (n_vars > 0 && times[0] != 0)) return false;
  return std::all_of(constraints.begin(), constraints.end(), [&](const DiffConstraint& c) {
    const auto diff = static_cast<std::int64_t>(times[c.to]) - static_cast<std::int64_t>(times[c.from]);
    return c.lo <= diff && (!c.hi || diff <= *c.hi);
  });
}

Extraction extract_constraints(const MetricProgram& program, const Trace& trace, ExtractOptions options) {
  ConstraintSystem sys;
  sys.n_vars = trace.size();
  for (std::size_t r = 0; r < program.rules.size(); ++r) {
    const MetricRule& rule = program.rules[r];
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if (!rule.body_holds(trace.letters[i])) continue;
      if (!head_holds(rule.head, trace.letters, i, std::nullopt)) return Violation{r, i};
      if (const auto* m = std::get_if<MetricHead>(&rule.head)) {
        std::optional<std::int64_t> hi;
        if (m->hi) hi = static_cast<std::int64_t>(*m->hi) - 1;
        sys.constraints.push_back({i, i + 1, static_cast<std::int64_t>(m->lo), hi});
      }
    }
  }
  for (std::size_t i = 0; i + 1 < trace.size(); ++i)
    sys.constraints.push_back({i, i + 1, options.strict ? 1 : 0, std::nullopt});
  return sys;
}

std::vector<std::size_t> Infeasible::constraint_indices() const {
  std::vector<std::size_t> out;
  for (const CycleEdge& e : cycle)
    if (e.constraint && std::find(out.begin(), out.end(), *e.constraint) == out.end()) out.push_back(*e.constraint);
  return out;
}

Feasibility feasible(const ConstraintSystem& system) {
  const std::size_t n = system.n_vars;
  if (n == 0) return Witness{};
  for (const DiffConstraint& c : system.constraints)
    if (c.from >= n || c.to >= n) throw std::out_of_range("difference constraint mentions an unknown variable");

  // Longest paths from t_0 over lower-bound edges give the least solution.
  std::vector<CycleEdge> edges;
  for (std::size_t k = 0; k < system.constraints.size(); ++k) {
    const DiffConstraint& c = system.constraints[k];
    edges.push_back({k, false, c.from, c.to, c.lo});
    if (c.hi) edges.push_back({k, true, c.to, c.from, -*c.hi});
  }
  for (std::size_t v = 1; v < n; ++v) edges.push_back({std::nullopt, false, 0, v, 0});

  constexpr std::int64_t unseen = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> dist(n, unseen);
  std::vector<std::optional<std::size_t>> via(n);
  dist[0] = 0;
  std::optional<std::size_t> relaxed;
  for (std::size_t round = 0; round < n; ++round) {
    relaxed.reset();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const CycleEdge& edge = edges[e];
      if (dist[edge.from] == unseen) continue;
      const std::int64_t cand = dist[edge.from] + edge.weight;
      if (cand > dist[edge.to]) {
        dist[edge.to] = cand;
        via[edge.to] = e;
        if (!relaxed) relaxed = edge.to;
      }
    }
    if (!relaxed) break;
  }

  if (relaxed || dist[0] != 0) {
    std::size_t v = relaxed ? *relaxed : 0;
    for (std::size_t k = 0; k < n; ++k) v = edges[*via[v]].from;
    Infeasible inf;
    std::size_t u = v;
    do {
      inf.cycle.push_back(edges[*via[u]]);
      u = edges[*via[u]].from;
    } while (u != v);
    std::reverse(inf.cycle.begin(), inf.cycle.end());
    return inf;
  }

  Witness w;
  for (std::int64_t d : dist) w.times.push_back(static_cast<std::uint64_t>(d));
  if (!system.satisfied_by(w.times)) throw std::logic_error("feasible: witness fails its own constraints");
  return w;
}

std::vector<TimedTrace> enumerate_models(const MetricProgram& program, const std::set<std::string>& ap,
                                         std::size_t horizon, EnumerateOptions options) {
  std::vector<TimedTrace> out;
  for_each_trace(Alphabet(ap), horizon, horizon, [&](const Trace& t) {
    Extraction ex = extract_constraints(program, t, options.extract);
    const auto* sys = std::get_if<ConstraintSystem>(&ex);
    if (!sys) return;
    Feasibility fe = feasible(*sys);
    if (const auto* w = std::get_if<Witness>(&fe)) out.push_back(TimedTrace{t.letters, w->times});
  });
  return out;
}

}  // namespace ldlf
