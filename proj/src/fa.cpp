#include "ldlf/fa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace ldlf {

std::size_t Nfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& per_letter : transitions)
    for (const auto& succ : per_letter) n += succ.size();
  return n;
}

namespace {

using Clause = std::vector<std::uint32_t>;  // sorted
using Dnf = std::vector<Clause>;            // antichain of minimal clauses

bool subset(const Clause& a, const Clause& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void keep_minimal(Dnf& dnf) {
  std::sort(dnf.begin(), dnf.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  dnf.erase(std::unique(dnf.begin(), dnf.end()), dnf.end());
  Dnf kept;
  for (Clause& c : dnf) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Clause& k) { return subset(k, c); });
    if (!dominated) kept.push_back(std::move(c));
  }
  dnf = std::move(kept);
}

Dnf product(const Dnf& a, const Dnf& b, std::size_t cap) {
  Dnf out;
  for (const Clause& x : a)
    for (const Clause& y : b) {
      Clause c;
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(c));
      out.push_back(std::move(c));
      if (out.size() > cap) throw BudgetExceeded("dealternation: satisfying-set budget exceeded");
    }
  keep_minimal(out);
  return out;
}

Dnf to_dnf(const Pbf& p, std::size_t cap) {
  switch (p.kind()) {
    case Pbf::Kind::True: return {Clause{}};
    case Pbf::Kind::False: return {};
    case Pbf::Kind::Ref: return {Clause{static_cast<std::uint32_t>(p.leaf())}};
    case Pbf::Kind::Or: {
      Dnf l = to_dnf(p.left(), cap);
      Dnf r = to_dnf(p.right(), cap);
      l.insert(l.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
      keep_minimal(l);
      return l;
    }
    case Pbf::Kind::And: return product(to_dnf(p.left(), cap), to_dnf(p.right(), cap), cap);
  }
  return {};
}

std::vector<std::uint32_t> letters_of(const Alphabet& ap, const Trace& t) {
  std::vector<std::uint32_t> out;
  out.reserve(t.size());
  for (const Letter& l : t.letters) out.push_back(ap.mask(l));
  return out;
}

Trace trace_of(const Alphabet& ap, const std::vector<std::uint32_t>& letters) {
  Trace t;
  for (std::uint32_t m : letters) t.letters.push_back(ap.letter(m));
  return t;
}

}  // namespace

Nfa dealternate(const Afa& a, Budget budget) {
  Nfa n;
  n.ap = a.ap();
  const std::uint32_t letters = n.ap.letter_count();

  // images[q][letter], filled lazily
  std::vector<std::vector<std::optional<Dnf>>> images(a.size(), std::vector<std::optional<Dnf>>(letters));
  auto image = [&](std::uint32_t q, std::uint32_t letter) -> const Dnf& {
    auto& slot = images[q][letter];
    if (!slot) slot = to_dnf(a.delta(q, letter), budget.max_states);
    return *slot;
  };

  std::map<Clause, std::uint32_t> index;
  auto intern = [&](const Clause& s) -> std::uint32_t {
    auto [it, inserted] = index.try_emplace(s, static_cast<std::uint32_t>(n.sets.size()));
    if (inserted) {
      if (n.sets.size() >= budget.max_states) throw BudgetExceeded("dealternation: state budget exceeded");
      n.sets.push_back(s);
      bool acc = std::all_of(s.begin(), s.end(), [&](std::uint32_t q) { return a.final_value(q); });
      n.accepting.push_back(acc);
    }
    return it->second;
  };

  n.initial = intern(Clause{static_cast<std::uint32_t>(a.initial())});
  for (std::size_t s = 0; s < n.sets.size(); ++s) {
    std::vector<std::vector<std::uint32_t>> row(letters);
    for (std::uint32_t l = 0; l < letters; ++l) {
      Dnf acc{Clause{}};
      const Clause members = n.sets[s];
      for (std::uint32_t q : members) {
        acc = product(acc, image(q, l), budget.max_states);
        if (acc.empty()) break;
      }
      for (const Clause& c : acc) row[l].push_back(intern(c));
      std::sort(row[l].begin(), row[l].end());
    }
    n.transitions.push_back(std::move(row));
  }
  return n;
}

Dfa determinize(const Nfa& n, Budget budget) {
  Dfa d;
  d.ap = n.ap;
  const std::uint32_t letters = n.ap.letter_count();
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> macros;

  auto intern = [&](const std::vector<std::uint32_t>& m) -> std::uint32_t {
    auto [it, inserted] = index.try_emplace(m, static_cast<std::uint32_t>(macros.size()));
    if (inserted) {
      if (macros.size() >= budget.max_states) throw BudgetExceeded("determinization: state budget exceeded");
      macros.push_back(m);
      bool acc = std::any_of(m.begin(), m.end(), [&](std::uint32_t s) { return n.accepting[s]; });
      d.accepting.push_back(acc);
    }
    return it->second;
  };

  d.initial = intern({static_cast<std::uint32_t>(n.initial)});
  for (std::size_t k = 0; k < macros.size(); ++k) {
    std::vector<std::uint32_t> row(letters);
    for (std::uint32_t l = 0; l < letters; ++l) {
      std::vector<std::uint32_t> target;
      for (std::uint32_t s : macros[k])
        target.insert(target.end(), n.transitions[s][l].begin(), n.transitions[s][l].end());
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      row[l] = intern(target);
    }
    d.next.push_back(std::move(row));
  }
  return d;
}

Dfa minimize(const Dfa& d, std::uint64_t seed) {
  const std::uint32_t letters = d.ap.letter_count();

  // reachable part, renumbered in BFS order
  std::vector<std::int64_t> old_to_live(d.size(), -1);
  std::vector<std::uint32_t> live;
  old_to_live[d.initial] = 0;
  live.push_back(static_cast<std::uint32_t>(d.initial));
  for (std::size_t k = 0; k < live.size(); ++k)
    for (std::uint32_t l = 0; l < letters; ++l) {
      std::uint32_t t = d.next[live[k]][l];
      if (old_to_live[t] < 0) {
        old_to_live[t] = static_cast<std::int64_t>(live.size());
        live.push_back(t);
      }
    }
  const std::size_t n = live.size();
  std::vector<std::vector<std::uint32_t>> next(n, std::vector<std::uint32_t>(letters));
  std::vector<bool> accepting(n);
  for (std::size_t s = 0; s < n; ++s) {
    accepting[s] = d.accepting[live[s]];
    for (std::uint32_t l = 0; l < letters; ++l)
      next[s][l] = static_cast<std::uint32_t>(old_to_live[d.next[live[s]][l]]);
  }

  // predecessors[letter][state]
  std::vector<std::vector<std::vector<std::uint32_t>>> pred(letters, std::vector<std::vector<std::uint32_t>>(n));
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t l = 0; l < letters; ++l) pred[l][next[s][l]].push_back(s);

  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of(n);
  {
    std::vector<std::uint32_t> acc, rej;
    for (std::uint32_t s = 0; s < n; ++s) (accepting[s] ? acc : rej).push_back(s);
    for (auto* b : {&acc, &rej})
      if (!b->empty()) {
        for (std::uint32_t s : *b) block_of[s] = static_cast<std::uint32_t>(blocks.size());
        blocks.push_back(std::move(*b));
      }
  }

  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
  std::vector<std::vector<bool>> queued;
  auto enqueue = [&](std::uint32_t b, std::uint32_t l) {
    if (queued.size() <= b) queued.resize(b + 1, std::vector<bool>(letters, false));
    if (!queued[b][l]) {
      queued[b][l] = true;
      work.emplace_back(b, l);
    }
  };
  for (std::uint32_t b = 0; b < blocks.size(); ++b)
    for (std::uint32_t l = 0; l < letters; ++l) enqueue(b, l);

  std::vector<bool> marked(n, false);
  while (!work.empty()) {
    std::size_t pick = seed == 0 ? work.size() - 1 : rng() % work.size();
    auto [splitter, l] = work[pick];
    work[pick] = work.back();
    work.pop_back();
    queued[splitter][l] = false;

    std::vector<std::uint32_t> preimage;
    for (std::uint32_t t : blocks[splitter])
      for (std::uint32_t s : pred[l][t])
        if (!marked[s]) {
          marked[s] = true;
          preimage.push_back(s);
        }

    std::vector<std::uint32_t> touched;
    for (std::uint32_t s : preimage) touched.push_back(block_of[s]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    for (std::uint32_t y : touched) {
      std::vector<std::uint32_t> in, out;
      for (std::uint32_t s : blocks[y]) (marked[s] ? in : out).push_back(s);
      if (in.empty() || out.empty()) continue;
      const auto fresh = static_cast<std::uint32_t>(blocks.size());
      blocks[y] = std::move(in);
      blocks.push_back(std::move(out));
      for (std::uint32_t s : blocks[fresh]) block_of[s] = fresh;
      for (std::uint32_t c = 0; c < letters; ++c) {
        if (queued.size() > y && queued[y][c]) {
          enqueue(fresh, c);
        } else {
          enqueue(blocks[y].size() <= blocks[fresh].size() ? y : fresh, c);
        }
      }
    }
    for (std::uint32_t s : preimage) marked[s] = false;
  }

  Dfa m;
  m.ap = d.ap;
  m.initial = block_of[0];
  m.next.assign(blocks.size(), std::vector<std::uint32_t>(letters));
  m.accepting.assign(blocks.size(), false);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    const std::uint32_t rep = blocks[b].front();
    m.accepting[b] = accepting[rep];
    for (std::uint32_t l = 0; l < letters; ++l) m.next[b][l] = block_of[next[rep][l]];
  }
  return m;
}

Dfa complement(const Dfa& d) {
  Dfa c = d;
  c.accepting.flip();
  return c;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (!(a.ap == b.ap) || a.size() != b.size()) return false;
  const std::uint32_t letters = a.ap.letter_count();
  std::vector<std::int64_t> map_ab(a.size(), -1), map_ba(b.size(), -1);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
  map_ab[a.initial] = static_cast<std::int64_t>(b.initial);
  map_ba[b.initial] = static_cast<std::int64_t>(a.initial);
  queue.emplace_back(a.initial, b.initial);
  std::size_t matched = 1;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (a.accepting[x] != b.accepting[y]) return false;
    for (std::uint32_t l = 0; l < letters; ++l) {
      const std::uint32_t u = a.next[x][l], v = b.next[y][l];
      if (map_ab[u] < 0 && map_ba[v] < 0) {
        map_ab[u] = v;
        map_ba[v] = u;
        ++matched;
        queue.emplace_back(u, v);
      } else if (map_ab[u] != static_cast<std::int64_t>(v) || map_ba[v] != static_cast<std::int64_t>(u)) {
        return false;
      }
    }
  }
  return matched == a.size();
}

bool nfa_accepts(const Nfa& n, const Trace& t) {
  std::vector<std::uint32_t> current{static_cast<std::uint32_t>(n.initial)};
  for (std::uint32_t l : letters_of(n.ap, t)) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : current) next.insert(next.end(), n.transitions[s][l].begin(), n.transitions[s][l].end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](std::uint32_t s) { return n.accepting[s]; });
}

bool dfa_accepts(const Dfa& d, const Trace& t) {
  std::size_t s = d.initial;
  for (std::uint32_t l : letters_of(d.ap, t)) s = d.next[s][l];
  return d.accepting[s];
}

Dfa compile_dfa(const Formula& f, const Alphabet& ap, Budget budget) {
  const Afa afa = translate_afa(normalize(f), ap);
  return minimize(determinize(dealternate(afa, budget), budget));
}

Dfa compile_dfa(const Formula& f, Budget budget) { return compile_dfa(f, Alphabet(atoms(f)), budget); }

std::optional<Trace> distinguishing_trace(const Dfa& a, const Dfa& b) {
  if (!(a.ap == b.ap)) throw AlphabetError("distinguishing_trace: automata over different alphabets");
  const std::uint32_t letters = a.ap.letter_count();
  const std::size_t nb = b.size();
  std::vector<std::int64_t> parent(a.size() * nb, -2);  // -2 unseen, -1 root
  std::vector<std::uint32_t> via(a.size() * nb, 0);
  std::deque<std::size_t> queue;
  const std::size_t root = a.initial * nb + b.initial;
  parent[root] = -1;
  queue.push_back(root);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const std::size_t x = cur / nb, y = cur % nb;
    if (a.accepting[x] != b.accepting[y]) {
      std::vector<std::uint32_t> word;
      for (std::size_t k = cur; parent[k] >= 0; k = static_cast<std::size_t>(parent[k])) word.push_back(via[k]);
      std::reverse(word.begin(), word.end());
      return trace_of(a.ap, word);
    }
    for (std::uint32_t l = 0; l < letters; ++l) {
      const std::size_t nxt = a.next[x][l] * nb + b.next[y][l];
      if (parent[nxt] == -2) {
        parent[nxt] = static_cast<std::int64_t>(cur);
        via[nxt] = l;
        queue.push_back(nxt);
      }
    }
  }
  return std::nullopt;
}

Equivalence equivalent(const Formula& f, const Formula& g, Budget budget) {
  std::set<std::string> universe = atoms(f);
  for (const std::string& a : atoms(g)) universe.insert(a);
  const Alphabet ap(universe);
  const Dfa a = compile_dfa(f, ap, budget);
  const Dfa b = compile_dfa(g, ap, budget);
  if (isomorphic(a, b)) return {true, std::nullopt};
  return {false, distinguishing_trace(a, b)};
}

Emptiness is_empty(const Dfa& d) {
  const std::uint32_t letters = d.ap.letter_count();
  std::vector<std::int64_t> parent(d.size(), -2);
  std::vector<std::uint32_t> via(d.size(), 0);
  std::deque<std::size_t> queue{d.initial};
  parent[d.initial] = -1;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (d.accepting[s]) {
      std::vector<std::uint32_t> word;
      for (std::size_t k = s; parent[k] >= 0; k = static_cast<std::size_t>(parent[k])) word.push_back(via[k]);
      std::reverse(word.begin(), word.end());
      return {false, trace_of(d.ap, word)};
    }
    for (std::uint32_t l = 0; l < letters; ++l) {
      const std::uint32_t t = d.next[s][l];
      if (parent[t] == -2) {
        parent[t] = static_cast<std::int64_t>(s);
        via[t] = l;
        queue.push_back(t);
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Trace> enumerate_accepted(const Dfa& d, std::size_t max_len) {
  std::vector<Trace> out;
  for_each_trace(d.ap, 0, max_len, [&](const Trace& t) {
    if (dfa_accepts(d, t)) out.push_back(t);
  });
  return out;
}

}  // namespace ldlf
