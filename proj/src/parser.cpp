#include "ldlf/parser.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace ldlf {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected, std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
                         ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  End,
  Ident,
  Number,
  MetricX,   // `X[`
  MetricWX,  // `WX[`
  LParen,
  RParen,
  LAngle,
  RAngle,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Semi,
  Plus,
  Star,
  Question,
  Comma,
  Bang,
  Amp,
  Pipe,
  Arrow,
  At,
  Dot,
  If,  // `:-`
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto is_ident_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      if ((word == "X" || word == "WX") && j < src.size() && src[j] == '[') {
        out.push_back({word == "X" ? Tok::MetricX : Tok::MetricWX, word + "[", l, cl});
        advance(j - i + 1);
      } else {
        out.push_back({Tok::Ident, word, l, cl});
        advance(j - i);
      }
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", l, cl});
      advance(2);
      continue;
    }
    if (c == ':' && i + 1 < src.size() && src[i + 1] == '-') {
      out.push_back({Tok::If, ":-", l, cl});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '<': kind = Tok::LAngle; break;
      case '>': kind = Tok::RAngle; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ';': kind = Tok::Semi; break;
      case '+': kind = Tok::Plus; break;
      case '*': kind = Tok::Star; break;
      case '?': kind = Tok::Question; break;
      case ',': kind = Tok::Comma; break;
      case '!': kind = Tok::Bang; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Pipe; break;
      case '@': kind = Tok::At; break;
      case '.': kind = Tok::Dot; break;
      default:
        throw ParseError(l, cl, "token", "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& w) {
  return w == "X" || w == "WX" || w == "F" || w == "G" || w == "Y" || w == "WY" || w == "U" ||
         w == "R" || w == "S" || w == "T";
}

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  // --- formulas ---

  Formula formula() { return implies(); }

  Formula implies() {
    Formula l = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(l, implies());
    return l;
  }

  Formula disjunction() {
    Formula l = conjunction();
    while (accept(Tok::Pipe)) l = Formula::disj(l, conjunction());
    return l;
  }

  Formula conjunction() {
    Formula l = temporal();
    while (accept(Tok::Amp)) l = Formula::conj(l, temporal());
    return l;
  }

  Formula temporal() {
    Formula l = unary();
    if (peek().kind == Tok::Ident) {
      const std::string w = peek().text;
      if (w == "U" || w == "R" || w == "S" || w == "T") {
        ++pos_;
        Formula r = temporal();
        if (w == "U") return Formula::until(l, r);
        if (w == "R") return Formula::release(l, r);
        if (w == "S") return Formula::since(l, r);
        return Formula::trigger(l, r);
      }
    }
    return l;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bang:
        ++pos_;
        return Formula::negate(unary());
      case Tok::MetricX:
      case Tok::MetricWX: {
        ++pos_;
        auto [lo, hi] = interval(t);
        Formula body = unary();
        return t.kind == Tok::MetricX ? Formula::metric_next(lo, hi, body)
                                      : Formula::weak_metric_next(lo, hi, body);
      }
      case Tok::LAngle: {
        ++pos_;
        Path p = path();
        expect(Tok::RAngle, "'>'");
        return Formula::diamond(p, unary());
      }
      case Tok::LBracket: {
        ++pos_;
        Path p = path();
        expect(Tok::RBracket, "']'");
        return Formula::box(p, unary());
      }
      case Tok::Ident: {
        const std::string& w = t.text;
        if (w == "X") return ++pos_, Formula::next(unary());
        if (w == "WX") return ++pos_, Formula::weak_next(unary());
        if (w == "F") return ++pos_, Formula::eventually(unary());
        if (w == "G") return ++pos_, Formula::always(unary());
        if (w == "Y") return ++pos_, Formula::prev(unary());
        if (w == "WY") return ++pos_, Formula::weak_prev(unary());
        return primary();
      }
      default:
        return primary();
    }
  }

  Formula primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos_;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Ident && !is_keyword(t.text)) {
      if (t.text == "tt") return ++pos_, Formula::top();
      if (t.text == "ff") return ++pos_, Formula::bottom();
      if (is_valid_atom_name(t.text)) return ++pos_, Formula::atom(t.text);
    }
    fail(t, "formula");
  }

  std::pair<std::uint64_t, Bound> interval(const Token& opener) {
    std::uint64_t lo = number();
    expect(Tok::Comma, "','");
    Bound hi;
    if (peek().kind == Tok::Ident && peek().text == "inf") {
      ++pos_;
    } else {
      hi = number();
    }
    expect(Tok::RParen, "')'");
    if (hi && lo >= *hi) fail(opener, "interval with lower bound below upper bound", "[" + std::to_string(lo) + "," + std::to_string(*hi) + ")");
    return {lo, hi};
  }

  std::uint64_t number() {
    const Token& t = peek();
    std::uint64_t v = 0;
    if (t.kind == Tok::Number) {
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec == std::errc{}) {
        ++pos_;
        return v;
      }
    }
    fail(t, "natural number");
  }

  // --- paths ---

  Path path() {
    Path l = path_seq();
    while (accept(Tok::Plus)) l = Path::alt(l, path_seq());
    return l;
  }

  Path path_seq() {
    Path l = path_postfix();
    while (accept(Tok::Semi)) l = Path::seq(l, path_postfix());
    return l;
  }

  Path path_postfix() {
    const Token start = peek();
    auto [leaf, grouped] = path_primary();
    Path p;
    if (leaf) {
      if (accept(Tok::Question)) {
        p = Path::test(*leaf);
      } else {
        if (!is_propositional(*leaf)) fail(start, "propositional step guard", format(*leaf));
        p = Path::step(*leaf);
      }
    } else {
      p = grouped;
    }
    while (true) {
      if (accept(Tok::Star)) {
        p = Path::star(p);
      } else if (peek().kind == Tok::Question) {
        fail(peek(), "path operator", "'?' after a path");
      } else {
        return p;
      }
    }
  }

  // Either a formula leaf (Step or Test, decided by a trailing `?`) or a
  // parenthesized path.
  std::pair<std::optional<Formula>, Path> path_primary() {
    const std::size_t saved = pos_;
    std::optional<ParseError> first;
    try {
      return {formula(), Path()};
    } catch (const ParseError& e) {
      first = e;
    }
    const std::size_t failed_at = pos_;
    pos_ = saved;
    if (peek().kind != Tok::LParen) throw *first;
    try {
      ++pos_;
      Path p = path();
      expect(Tok::RParen, "')'");
      return {std::nullopt, p};
    } catch (const ParseError& e) {
      // report whichever reading got further
      if (pos_ >= failed_at) throw;
      throw *first;
    }
  }

  // --- traces ---

  AnyTrace trace() {
    if (peek().kind == Tok::Ident && peek().text == "eps") {
      ++pos_;
      expect(Tok::End, "end of input");
      return Trace{};
    }
    std::vector<Letter> letters;
    std::vector<std::uint64_t> times;
    std::optional<bool> timed;
    do {
      const Token step_start = peek();
      expect(Tok::LBrace, "'{'");
      std::vector<std::string> names;
      if (peek().kind != Tok::RBrace) {
        do {
          names.push_back(atom_name());
        } while (accept(Tok::Comma));
      }
      expect(Tok::RBrace, "'}'");
      const bool has_time = peek().kind == Tok::At;
      if (timed && *timed != has_time)
        fail(step_start, has_time ? "untimed step" : "timed step", "mixed timed and untimed steps");
      timed = has_time;
      if (has_time) {
        ++pos_;
        const Token time_tok = peek();
        std::uint64_t t = number();
        if (!times.empty() && t < times.back())
          fail(time_tok, "timestamp >= " + std::to_string(times.back()), std::to_string(t));
        times.push_back(t);
      }
      letters.emplace_back(std::move(names));
    } while (accept(Tok::Semi));
    expect(Tok::End, "';' or end of input");
    if (timed.value_or(false)) return TimedTrace{std::move(letters), std::move(times)};
    return Trace{std::move(letters)};
  }

  // --- programs ---

  MetricProgram program() {
    MetricProgram prog;
    while (peek().kind != Tok::End) prog.rules.push_back(rule());
    return prog;
  }

  MetricRule rule() {
    MetricRule r;
    if (accept(Tok::If)) {
      r.body = body();
      expect(Tok::Dot, "'.'");
      return r;
    }
    const Token& t = peek();
    if (t.kind == Tok::MetricX) {
      ++pos_;
      auto [lo, hi] = interval(t);
      r.head = MetricHead{lo, hi, atom_name()};
    } else if (t.kind == Tok::MetricWX || (t.kind == Tok::Ident && is_keyword(t.text))) {
      fail(t, "atom or metric next head", describe(t));
    } else {
      r.head = PlainHead{atom_name()};
    }
    if (accept(Tok::If)) r.body = body();
    expect(Tok::Dot, "'.'");
    return r;
  }

  std::vector<BodyLiteral> body() {
    std::vector<BodyLiteral> out;
    do {
      const Token& t = peek();
      if (t.kind == Tok::MetricX || t.kind == Tok::MetricWX || (t.kind == Tok::Ident && is_keyword(t.text)))
        fail(t, "plain body literal", "metric literal " + describe(t));
      bool positive = true;
      if (t.kind == Tok::Ident && t.text == "not") {
        ++pos_;
        positive = false;
      }
      out.push_back({atom_name(), positive});
    } while (accept(Tok::Comma));
    return out;
  }

  std::string atom_name() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && is_valid_atom_name(t.text) && t.text != "not") {
      ++pos_;
      return t.text;
    }
    fail(t, "atom");
  }

  void finish() { expect(Tok::End, "end of input"); }

private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail(peek(), what);
  }

  [[noreturn]] void fail(const Token& at, const std::string& expected) {
    throw ParseError(at.line, at.column, expected, describe(at));
  }

  [[noreturn]] void fail(const Token& at, const std::string& expected, const std::string& found) {
    throw ParseError(at.line, at.column, expected, found);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view src) {
  Parser p(src);
  Formula f = p.formula();
  p.finish();
  return f;
}

AnyTrace parse_trace(std::string_view src) {
  Parser p(src);
  return p.trace();
}

MetricProgram parse_program(std::string_view src) {
  Parser p(src);
  return p.program();
}

}  // namespace ldlf
