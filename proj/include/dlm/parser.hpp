#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dlm/action.hpp"
#include "dlm/formula.hpp"

namespace dlm {

/// Syntax error or unknown identifier, with the byte offset it was found at.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Named action models referenced as @name inside dynamic modalities.
using ActionRegistry = std::map<std::string, PointedAction>;

/// Parses a formula. Derived connectives and the macros Sim(a,b,p),
/// Dis(a,b,p), O(a,lit), Os(b,lit), Bs(b,phi), Surprise(kind,a,p) expand to
/// core constructors.
Formula parse(std::string_view text, const Signature& sig, const ActionRegistry& actions = {});

/// Parses an action expression: tell+(a,phi), show-(a, l & ~m), or @name.
PointedAction parse_action(std::string_view text, const Signature& sig, const ActionRegistry& actions = {});

/// Parses "p", "obs(a,p)" or "obs(a,~p)".
Atom parse_atom(std::string_view text, const Signature& sig);

}  // namespace dlm
