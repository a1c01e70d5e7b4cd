#include "ldlf/dot.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace ldlf {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < labels.size(); ++k) out += (k ? ", " : "") + labels[k];
  return out;
}

template <class Leaf>
std::string key(const BasicPbf<Leaf>& p, const std::function<std::string(const Leaf&)>& leaf) {
  using K = typename BasicPbf<Leaf>::Kind;
  switch (p.kind()) {
    case K::True: return "T";
    case K::False: return "F";
    case K::Ref: return leaf(p.leaf());
    case K::And: return "(" + key(p.left(), leaf) + "&" + key(p.right(), leaf) + ")";
    case K::Or: return "(" + key(p.left(), leaf) + "|" + key(p.right(), leaf) + ")";
  }
  return {};
}

class Writer {
public:
  explicit Writer(std::string name) { out_ << "digraph " << name << " {\n  rankdir=LR;\n"; }

  void start(const std::string& target) {
    out_ << "  __start [shape=point];\n  __start -> " << target << ";\n";
  }
  void node(const std::string& id, const std::string& label, bool accepting, const std::string& extra = "") {
    out_ << "  " << id << " [label=" << quote(label) << ", shape=" << (accepting ? "doublecircle" : "circle")
         << extra << "];\n";
  }
  void edge(const std::string& from, const std::string& to, const std::string& label) {
    out_ << "  " << from << " -> " << to;
    if (!label.empty()) out_ << " [label=" << quote(label) << "]";
    out_ << ";\n";
  }
  std::string fresh_and() {
    std::string id = "and" + std::to_string(ands_++);
    out_ << "  " << id << " [label=\"&\", shape=box, width=0.2, height=0.2];\n";
    return id;
  }
  std::string true_node() {
    if (!has_true_) {
      out_ << "  tt [label=\"tt\", shape=plaintext];\n";
      has_true_ = true;
    }
    return "tt";
  }

  template <class Leaf>
  void pbf(const std::string& from, const BasicPbf<Leaf>& p, const std::string& label,
           const std::function<std::pair<std::string, std::string>(const Leaf&)>& target) {
    using K = typename BasicPbf<Leaf>::Kind;
    switch (p.kind()) {
      case K::False: return;
      case K::True: edge(from, true_node(), label); return;
      case K::Ref: {
        auto [to, suffix] = target(p.leaf());
        std::string l = label;
        if (!suffix.empty()) l += (l.empty() ? "" : " / ") + suffix;
        edge(from, to, l);
        return;
      }
      case K::Or:
        pbf(from, p.left(), label, target);
        pbf(from, p.right(), label, target);
        return;
      case K::And: {
        std::string a = fresh_and();
        edge(from, a, label);
        pbf(a, p.left(), "", target);
        pbf(a, p.right(), "", target);
        return;
      }
    }
  }

  std::string finish() {
    out_ << "}\n";
    return out_.str();
  }

private:
  std::ostringstream out_;
  int ands_ = 0;
  bool has_true_ = false;
};

std::string sid(std::size_t q) { return "q" + std::to_string(q); }

// Groups the letters of one state by transition image, in first-letter order.
template <class Image>
std::vector<std::pair<Image, std::vector<std::string>>> group(std::uint32_t letters, const Alphabet& ap,
                                                              const std::function<Image(std::uint32_t)>& image,
                                                              const std::function<std::string(const Image&)>& key) {
  std::vector<std::pair<Image, std::vector<std::string>>> out;
  std::map<std::string, std::size_t> slot;
  for (std::uint32_t l = 0; l < letters; ++l) {
    Image img = image(l);
    auto [it, inserted] = slot.try_emplace(key(img), out.size());
    if (inserted) out.push_back({std::move(img), {}});
    out[it->second].second.push_back(format_letter(ap.letter(l)));
  }
  return out;
}

}  // namespace

std::string to_dot(const Afa& a) {
  Writer w("afa");
  for (std::size_t q = 0; q < a.size(); ++q) w.node(sid(q), format(a.states()[q]), a.final_value(q));
  w.start(sid(a.initial()));
  const std::function<std::string(const std::size_t&)> leaf_key = [](const std::size_t& r) { return sid(r); };
  const std::function<std::pair<std::string, std::string>(const std::size_t&)> target = [](const std::size_t& r) {
    return std::pair<std::string, std::string>{sid(r), ""};
  };
  for (std::size_t q = 0; q < a.size(); ++q) {
    auto groups = group<Pbf>(
        a.ap().letter_count(), a.ap(), [&](std::uint32_t l) { return a.delta(q, l); },
        [&](const Pbf& p) { return key(p, leaf_key); });
    for (const auto& [img, labels] : groups) w.pbf(sid(q), img, join_labels(labels), target);
  }
  return w.finish();
}

std::string to_dot(const Nfa& n) {
  Writer w("nfa");
  for (std::size_t q = 0; q < n.size(); ++q) w.node(sid(q), std::to_string(q), n.accepting[q]);
  w.start(sid(n.initial));
  for (std::size_t q = 0; q < n.size(); ++q) {
    std::map<std::uint32_t, std::vector<std::string>> by_target;
    for (std::uint32_t l = 0; l < n.ap.letter_count(); ++l)
      for (std::uint32_t t : n.transitions[q][l]) by_target[t].push_back(format_letter(n.ap.letter(l)));
    for (const auto& [t, labels] : by_target) w.edge(sid(q), sid(t), join_labels(labels));
  }
  return w.finish();
}

std::string to_dot(const Dfa& d) {
  Writer w("dfa");
  for (std::size_t q = 0; q < d.size(); ++q) w.node(sid(q), std::to_string(q), d.accepting[q]);
  w.start(sid(d.initial));
  for (std::size_t q = 0; q < d.size(); ++q) {
    std::map<std::uint32_t, std::vector<std::string>> by_target;
    for (std::uint32_t l = 0; l < d.ap.letter_count(); ++l) by_target[d.next[q][l]].push_back(format_letter(d.ap.letter(l)));
    for (const auto& [t, labels] : by_target) w.edge(sid(q), sid(t), join_labels(labels));
  }
  return w.finish();
}

namespace {

const std::function<std::string(const TwoAfaLeaf&)> two_leaf_key = [](const TwoAfaLeaf& l) {
  return sid(l.state) + move_char(l.move);
};

}  // namespace

std::string to_dot(const TwoAfa& a) {
  Writer w("twafa");
  for (std::size_t q = 0; q < a.size(); ++q) {
    const bool acc = a.transition(q, MarkedLetter::end()).kind() == TwoPbf::Kind::True;
    w.node(sid(q), format_state(a.state(q)), acc);
  }
  w.start(sid(a.initial()));
  const std::function<std::pair<std::string, std::string>(const TwoAfaLeaf&)> target = [](const TwoAfaLeaf& l) {
    return std::pair<std::string, std::string>{sid(l.state), std::string(1, move_char(l.move))};
  };
  const std::function<std::string(const TwoPbf&)> pkey = [](const TwoPbf& p) { return key(p, two_leaf_key); };
  for (std::size_t q = 0; q < a.size(); ++q) {
    w.pbf(sid(q), a.transition(q, MarkedLetter::begin()), "BEGIN", target);
    auto groups = group<TwoPbf>(
        a.ap().letter_count(), a.ap(), [&](std::uint32_t l) { return a.transition(q, MarkedLetter::letter(l)); }, pkey);
    for (const auto& [img, labels] : groups) w.pbf(sid(q), img, join_labels(labels), target);
    w.pbf(sid(q), a.transition(q, MarkedLetter::end()), "END", target);
  }
  return w.finish();
}

std::string run_to_dot(const TwoAfa& a, const Trace& t) {
  const TwoAfaRun run = twafa_run(a, t);
  const std::size_t len = t.size();
  auto position_name = [&](std::size_t c) {
    if (c == 0) return std::string("BEGIN");
    if (c == len + 1) return std::string("END");
    return std::to_string(c - 1);
  };
  auto cid = [](std::size_t q, std::size_t c) { return "c" + std::to_string(q) + "_" + std::to_string(c); };

  Writer w("run");
  std::set<std::pair<std::size_t, std::size_t>> seen{{a.initial(), 1}};
  std::vector<std::pair<std::size_t, std::size_t>> order{{a.initial(), 1}};
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto [q, c] = order[k];
    run.transitions[c][q].for_each_leaf([&](const TwoAfaLeaf& l) {
      std::size_t to = c;
      if (l.move == Move::L) --to;
      if (l.move == Move::R) ++to;
      if (seen.insert({l.state, to}).second) order.emplace_back(l.state, to);
    });
  }
  for (auto [q, c] : order) {
    const bool value = run.value[c][q];
    w.node(cid(q, c), format_state(a.state(q)) + " @ " + position_name(c), false,
           value ? ", style=filled, fillcolor=palegreen" : "");
  }
  w.start(cid(a.initial(), 1));
  for (auto [q, c] : order) {
    const std::size_t from_c = c;
    const std::function<std::pair<std::string, std::string>(const TwoAfaLeaf&)> target = [&](const TwoAfaLeaf& l) {
      std::size_t to = from_c;
      if (l.move == Move::L) --to;
      if (l.move == Move::R) ++to;
      return std::pair<std::string, std::string>{cid(l.state, to), std::string(1, move_char(l.move))};
    };
    w.pbf(cid(q, c), run.transitions[c][q], "", target);
  }
  return w.finish();
}

}  // namespace ldlf
