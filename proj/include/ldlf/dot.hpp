#ifndef LDLF_DOT_HPP
#define LDLF_DOT_HPP

#include <string>

#include "ldlf/afa.hpp"
#include "ldlf/fa.hpp"
#include "ldlf/trace.hpp"
#include "ldlf/twafa.hpp"

namespace ldlf {

/// Graphviz digraphs. Letters with identical images share one edge; a
/// universal branch goes through a small `&` node. Output depends only on
/// the automaton.
std::string to_dot(const Afa& a);
std::string to_dot(const Nfa& n);
std::string to_dot(const Dfa& d);
/// States whose END transition is `tt` are drawn as accepting.
std::string to_dot(const TwoAfa& a);

/// Configurations reachable from the start of a 2AFA run; true ones filled.
std::string run_to_dot(const TwoAfa& a, const Trace& t);

}  // namespace ldlf

#endif  // LDLF_DOT_HPP
