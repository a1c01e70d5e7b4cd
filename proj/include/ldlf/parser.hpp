#ifndef LDLF_PARSER_HPP
#define LDLF_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "ldlf/formula.hpp"
#include "ldlf/metric.hpp"
#include "ldlf/trace.hpp"

namespace ldlf {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
  std::string found_;
};

/// Formula grammar, loosest to tightest:
///
///   f ::= f -> f | f '|' f | f & f | f (U|R|S|T) f
///       | ! f | X f | WX f | F f | G f | Y f | WY f | X[l,u) f | WX[l,u) f
///       | <p> f | [p] f | tt | ff | atom | ( f )
///   p ::= p + p | p ; p | p* | f? | g | ( p )        (g propositional)
///
/// `->` and the binary temporal operators associate to the right. `%` starts
/// a line comment.
Formula parse_formula(std::string_view src);

using AnyTrace = std::variant<Trace, TimedTrace>;

/// `eps` or `{a,b};{};...`, each step optionally suffixed with `@t`. Either
/// every step is timed or none is; timestamps must not decrease.
AnyTrace parse_trace(std::string_view src);

/// Rules `Head :- Body.`, `Head.` and `:- Body.`, with Head an atom or
/// `X[l,u) atom` and Body a comma-separated list of `atom` / `not atom`.
MetricProgram parse_program(std::string_view src);

}  // namespace ldlf

#endif  // LDLF_PARSER_HPP
