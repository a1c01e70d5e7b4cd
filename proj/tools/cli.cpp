#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ldlf/afa.hpp"
#include "ldlf/batch.hpp"
#include "ldlf/dot.hpp"
#include "ldlf/fa.hpp"
#include "ldlf/formula.hpp"
#include "ldlf/metric.hpp"
#include "ldlf/oracle.hpp"
#include "ldlf/parser.hpp"
#include "ldlf/trace.hpp"
#include "ldlf/twafa.hpp"

namespace ldlf::cli {

namespace {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// An input given either inline or as a file, never both.
struct Source {
  std::string text;
  std::string path;

  void add(CLI::App* app, const std::string& inline_flag, const std::string& file_flag, const std::string& what,
           bool required = true) {
    auto* a = app->add_option(inline_flag, text, what);
    auto* b = app->add_option(file_flag, path, what + " read from a file");
    a->excludes(b);
    b->excludes(a);
    required_ = required;
    name_ = inline_flag;
  }
  bool given() const { return !text.empty() || !path.empty(); }
  std::string get() const {
    if (!path.empty()) return slurp(path);
    if (text.empty() && required_) throw InputError(name_ + " is required");
    return text;
  }

private:
  bool required_ = true;
  std::string name_;
};

std::set<std::string> split_atoms(const std::string& list) {
  std::set<std::string> out;
  std::stringstream s(list);
  for (std::string item; std::getline(s, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (!is_valid_atom_name(item)) throw InputError("invalid atom name '" + item + "'");
    out.insert(item);
  }
  return out;
}

Backend auto_backend(const Formula& f) {
  if (has_metric(f)) return Backend::Oracle;
  if (has_past(f)) return Backend::TwoAfa;
  return Backend::Dfa;
}

Backend backend_option(const std::string& name, const Formula& f) {
  if (name == "auto") return auto_backend(f);
  auto b = parse_backend(name);
  if (!b) throw InputError("unknown backend '" + name + "'");
  return *b;
}

bool is_timed(const AnyTrace& t) { return std::holds_alternative<TimedTrace>(t); }

Trace untimed(const AnyTrace& t) {
  if (const auto* timed = std::get_if<TimedTrace>(&t)) return timed->untimed();
  return std::get<Trace>(t);
}

bool verdict(const Formula& f, const AnyTrace& t, Backend backend) {
  if (backend == Backend::Oracle) {
    if (const auto* timed = std::get_if<TimedTrace>(&t)) return holds(f, *timed);
    return holds(f, std::get<Trace>(t));
  }
  return Acceptor(f, backend).accepts(untimed(t));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::size_t afa_transitions(const Afa& a) {
  std::size_t n = 0;
  for (std::size_t q = 0; q < a.size(); ++q)
    for (std::uint32_t l = 0; l < a.ap().letter_count(); ++l)
      if (a.delta(q, l).kind() != Pbf::Kind::False) ++n;
  return n;
}

std::size_t twafa_transitions(const TwoAfa& a) {
  std::size_t n = 0;
  auto count = [&](std::size_t q, MarkedLetter m) {
    if (a.transition(q, m).kind() != TwoPbf::Kind::False) ++n;
  };
  for (std::size_t q = 0; q < a.size(); ++q) {
    count(q, MarkedLetter::begin());
    for (std::uint32_t l = 0; l < a.ap().letter_count(); ++l) count(q, MarkedLetter::letter(l));
    count(q, MarkedLetter::end());
  }
  return n;
}

std::string format_constraint(const DiffConstraint& c) {
  std::string s = std::to_string(c.lo) + " <= t" + std::to_string(c.to) + " - t" + std::to_string(c.from);
  if (c.hi) s += " <= " + std::to_string(*c.hi);
  return s;
}

std::string format_violation(const Violation& v) {
  return "rule " + std::to_string(v.rule) + " at step " + std::to_string(v.position);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LDLf and metric logic program toolkit", "ldlf"};
  app.require_subcommand(1);

  // parse
  Source parse_f;
  auto* parse_cmd = app.add_subcommand("parse", "print the canonical form of a formula");
  parse_f.add(parse_cmd, "-f,--formula", "-F,--formula-file", "formula");

  // compile
  Source compile_f;
  std::string compile_to;
  std::string compile_dot;
  auto* compile_cmd = app.add_subcommand("compile", "build an automaton and report its size");
  compile_f.add(compile_cmd, "-f,--formula", "-F,--formula-file", "formula");
  compile_cmd->add_option("--to", compile_to, "afa, nfa, dfa, min-dfa or 2afa")
      ->required()
      ->check(CLI::IsMember({"afa", "nfa", "dfa", "min-dfa", "2afa"}));
  compile_cmd->add_option("--dot", compile_dot, "write the automaton as a DOT file");

  // accepts
  Source accepts_f, accepts_t;
  std::string accepts_backend = "oracle";
  std::string accepts_run_dot;
  auto* accepts_cmd = app.add_subcommand("accepts", "check one trace; exit 0 if accepted, 1 if not");
  accepts_f.add(accepts_cmd, "-f,--formula", "-F,--formula-file", "formula");
  accepts_t.add(accepts_cmd, "-t,--trace", "-T,--trace-file", "trace");
  accepts_cmd->add_option("--backend", accepts_backend, "oracle, afa, nfa, dfa, 2afa or auto")->capture_default_str();
  accepts_cmd->add_option("--run-dot", accepts_run_dot, "write the 2AFA run graph as a DOT file");

  // filter
  Source filter_f;
  std::string filter_traces;
  std::string filter_backend = "auto";
  bool filter_negate = false;
  auto* filter_cmd = app.add_subcommand("filter", "keep the traces of a file that satisfy a formula");
  filter_f.add(filter_cmd, "-f,--formula", "-F,--formula-file", "formula");
  filter_cmd->add_option("--traces", filter_traces, "file with one trace per line")->required();
  filter_cmd->add_flag("--negate", filter_negate, "keep the traces that violate the formula instead");
  filter_cmd->add_option("--backend", filter_backend, "oracle, afa, nfa, dfa, 2afa or auto")->capture_default_str();

  // enumerate
  Source enum_f;
  std::string enum_ap;
  std::size_t enum_max_len = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "list accepted traces up to a length");
  enum_f.add(enum_cmd, "-f,--formula", "-F,--formula-file", "formula");
  enum_cmd->add_option("--ap", enum_ap, "comma-separated atoms (default: atoms of the formula)");
  enum_cmd->add_option("--max-len", enum_max_len, "maximum trace length")->required();

  // equiv
  Source equiv_f, equiv_g;
  auto* equiv_cmd = app.add_subcommand("equiv", "compare two formulas; exit 0 if equivalent");
  equiv_f.add(equiv_cmd, "-f,--formula", "-F,--formula-file", "first formula");
  equiv_g.add(equiv_cmd, "-g,--other", "-G,--other-file", "second formula");

  // metric
  auto* metric_cmd = app.add_subcommand("metric", "metric logic programs");
  metric_cmd->require_subcommand(1);
  Source mcheck_p, mcheck_t;
  auto* mcheck_cmd = metric_cmd->add_subcommand("check", "list rule violations of a timed trace");
  mcheck_p.add(mcheck_cmd, "-P,--program-text", "-p,--program", "program");
  mcheck_t.add(mcheck_cmd, "-t,--trace", "-T,--trace-file", "timed trace");
  Source mtimes_p, mtimes_t;
  bool mtimes_strict = false;
  auto* mtimes_cmd = metric_cmd->add_subcommand("times", "least timestamps for an untimed trace");
  mtimes_p.add(mtimes_cmd, "-P,--program-text", "-p,--program", "program");
  mtimes_t.add(mtimes_cmd, "-t,--trace", "-T,--trace-file", "untimed trace");
  mtimes_cmd->add_flag("--strict", mtimes_strict, "require strictly increasing timestamps");
  Source menum_p;
  std::string menum_ap;
  std::size_t menum_horizon = 0;
  bool menum_strict = false;
  auto* menum_cmd = metric_cmd->add_subcommand("enumerate", "all models of a fixed horizon with least timestamps");
  menum_p.add(menum_cmd, "-P,--program-text", "-p,--program", "program");
  menum_cmd->add_option("--ap", menum_ap, "comma-separated atoms (default: atoms of the program)");
  menum_cmd->add_option("--horizon", menum_horizon, "trace length")->required();
  menum_cmd->add_flag("--strict", menum_strict, "require strictly increasing timestamps");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*parse_cmd) {
      out << format(parse_formula(parse_f.get())) << "\n";
      return ok;
    }

    if (*compile_cmd) {
      const Formula f = parse_formula(compile_f.get());
      const Alphabet ap(atoms(f));
      std::string dot;
      if (compile_to == "2afa") {
        const TwoAfa a = translate_2afa(normalize(f), ap);
        out << "2afa: " << a.size() << " states, " << twafa_transitions(a) << " transitions\n";
        if (!compile_dot.empty()) dot = to_dot(a);
      } else {
        const Afa a = translate_afa(normalize(f), ap);
        if (compile_to == "afa") {
          out << "afa: " << a.size() << " states, " << afa_transitions(a) << " transitions\n";
          if (!compile_dot.empty()) dot = to_dot(a);
        } else {
          const Nfa n = dealternate(a);
          if (compile_to == "nfa") {
            out << "nfa: " << n.size() << " states, " << n.transition_count() << " transitions\n";
            if (!compile_dot.empty()) dot = to_dot(n);
          } else {
            Dfa d = determinize(n);
            if (compile_to == "min-dfa") d = minimize(d);
            out << compile_to << ": " << d.size() << " states, " << d.transition_count() << " transitions\n";
            if (!compile_dot.empty()) dot = to_dot(d);
          }
        }
      }
      if (!compile_dot.empty()) write_file(compile_dot, dot);
      return ok;
    }

    if (*accepts_cmd) {
      const Formula f = parse_formula(accepts_f.get());
      const AnyTrace t = parse_trace(accepts_t.get());
      const Backend backend = backend_option(accepts_backend, f);
      if (!accepts_run_dot.empty()) {
        if (backend != Backend::TwoAfa) throw InputError("--run-dot needs --backend 2afa");
        const TwoAfa a = translate_2afa(normalize(f));
        Trace projected;
        for (const Letter& l : untimed(t).letters) {
          std::vector<std::string> kept;
          for (const std::string& x : l.atoms())
            if (a.ap().index(x)) kept.push_back(x);
          projected.letters.emplace_back(std::move(kept));
        }
        write_file(accepts_run_dot, run_to_dot(a, projected));
      }
      const bool yes = verdict(f, t, backend);
      out << (yes ? "ACCEPTED" : "REJECTED") << "\n";
      return yes ? ok : negative;
    }

    if (*filter_cmd) {
      const Formula f = parse_formula(filter_f.get());
      const Backend backend = backend_option(filter_backend, f);
      std::istringstream lines(slurp(filter_traces));
      std::vector<std::string> originals;
      std::vector<AnyTrace> parsed;
      std::size_t line_no = 0;
      for (std::string line; std::getline(lines, line);) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
          parsed.push_back(parse_trace(line));
        } catch (const ParseError& e) {
          throw InputError(filter_traces + ":" + std::to_string(line_no) + ": " + e.what());
        }
        originals.push_back(line);
      }
      std::vector<bool> keep;
      const bool timed = std::any_of(parsed.begin(), parsed.end(), is_timed);
      if (backend == Backend::Oracle && timed) {
        for (const AnyTrace& t : parsed) keep.push_back(verdict(f, t, backend));
      } else {
        std::vector<Trace> traces;
        for (const AnyTrace& t : parsed) traces.push_back(untimed(t));
        keep = verdicts(Acceptor(f, backend), traces);
      }
      std::size_t kept = 0;
      for (std::size_t k = 0; k < originals.size(); ++k)
        if (keep[k] != filter_negate) {
          out << originals[k] << "\n";
          ++kept;
        }
      err << "kept " << kept << " of " << originals.size() << "\n";
      return ok;
    }

    if (*enum_cmd) {
      const Formula f = parse_formula(enum_f.get());
      std::set<std::string> ap = enum_ap.empty() ? atoms(f) : split_atoms(enum_ap);
      for (const std::string& a : atoms(f))
        if (!ap.count(a)) throw InputError("--ap is missing formula atom '" + a + "'");
      const Alphabet alphabet(ap);
      trace_count(ap.size(), enum_max_len);
      if (!has_past(f) && !has_metric(f)) {
        for (const Trace& t : enumerate_accepted(compile_dfa(f, alphabet), enum_max_len)) out << format_trace(t) << "\n";
      } else {
        const Acceptor acc(f, auto_backend(f));
        for_each_trace(alphabet, 0, enum_max_len, [&](const Trace& t) {
          if (acc.accepts(t)) out << format_trace(t) << "\n";
        });
      }
      return ok;
    }

    if (*equiv_cmd) {
      const Formula f = parse_formula(equiv_f.get());
      const Formula g = parse_formula(equiv_g.get());
      const Equivalence e = equivalent(f, g);
      if (e.equivalent) {
        out << "EQUIVALENT\n";
        return ok;
      }
      out << "NOT EQUIVALENT\ncounterexample: " << format_trace(*e.counterexample) << "\n";
      return negative;
    }

    if (*mcheck_cmd) {
      const MetricProgram p = parse_program(mcheck_p.get());
      const AnyTrace t = parse_trace(mcheck_t.get());
      const auto* timed = std::get_if<TimedTrace>(&t);
      if (!timed && !std::get<Trace>(t).empty()) throw InputError("metric check needs a timed trace");
      const std::vector<Violation> v = check_program(p, timed ? *timed : TimedTrace{});
      for (const Violation& x : v) out << format_violation(x) << "\n";
      if (v.empty()) out << "SATISFIED\n";
      return v.empty() ? ok : negative;
    }

    if (*mtimes_cmd) {
      const MetricProgram p = parse_program(mtimes_p.get());
      const AnyTrace t = parse_trace(mtimes_t.get());
      if (is_timed(t)) throw InputError("metric times needs an untimed trace");
      const Trace& trace = std::get<Trace>(t);
      const Extraction ex = extract_constraints(p, trace, {mtimes_strict});
      if (const auto* v = std::get_if<Violation>(&ex)) {
        out << "VIOLATED " << format_violation(*v) << "\n";
        return negative;
      }
      const auto& sys = std::get<ConstraintSystem>(ex);
      const Feasibility fe = feasible(sys);
      if (const auto* w = std::get_if<Witness>(&fe)) {
        out << format_trace(TimedTrace{trace.letters, w->times}) << "\n";
        return ok;
      }
      out << "INFEASIBLE\n";
      for (const CycleEdge& e : std::get<Infeasible>(fe).cycle) {
        if (e.constraint) {
          out << "  constraint " << *e.constraint << " (" << (e.upper ? "upper" : "lower")
              << "): " << format_constraint(sys.constraints[*e.constraint]) << "\n";
        } else {
          out << "  t" << e.to << " >= 0\n";
        }
      }
      return negative;
    }

    if (*menum_cmd) {
      const MetricProgram p = parse_program(menum_p.get());
      std::set<std::string> ap = menum_ap.empty() ? p.universe() : split_atoms(menum_ap);
      EnumerateOptions options;
      options.extract.strict = menum_strict;
      for (const TimedTrace& t : enumerate_models(p, ap, menum_horizon, options)) out << format_trace(t) << "\n";
      return ok;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return limit_error;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return limit_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace ldlf::cli
