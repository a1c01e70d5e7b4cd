#ifndef LDLF_TESTS_HELPERS_HPP
#define LDLF_TESTS_HELPERS_HPP

#include <string>
#include <variant>

#include "ldlf/parser.hpp"

namespace ldlf::testing {

inline Formula fml(const std::string& src) { return parse_formula(src); }

inline Trace tr(const std::string& src) { return std::get<Trace>(parse_trace(src)); }

inline TimedTrace timed(const std::string& src) { return std::get<TimedTrace>(parse_trace(src)); }

}  // namespace ldlf::testing

#endif  // LDLF_TESTS_HELPERS_HPP
