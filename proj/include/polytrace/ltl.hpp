// Linear temporal logic without the next operator: formula AST, parser, and
// an exact model checker for lasso-shaped infinite words.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polytrace/words.hpp"

namespace polytrace {

enum class formula_kind {
  tt,
  ff,
  atom,
  negation,
  conjunction,
  disjunction,
  implication,
  until,
  eventually,
  always,
};

struct formula;
using formula_ptr = std::shared_ptr<const formula>;

/// Immutable formula node. Unary operators use `lhs` only; `atom_name` is
/// set only for atoms and names a region id.
struct formula {
  formula_kind kind;
  std::string atom_name;
  formula_ptr lhs;
  formula_ptr rhs;
};

/// Parses a formula. Grammar, loosest to tightest binding:
///   implication `->` (right associative), disjunction `|`, conjunction `&`,
///   until `U` (right associative), then the unary operators `!`, `G`
///   (always), `F` (eventually), parentheses, the constants `true`/`false`,
///   and atoms matching [A-Za-z_][A-Za-z0-9_]*. `U`, `G`, `F`, `true`, and
///   `false` are reserved words. `#` starts a comment that runs to the end
///   of the line. Throws input_error with a character offset on bad input.
formula_ptr parse_formula(const std::string& text);

/// Renders a formula back to parseable text with minimal parentheses.
std::string format_formula(const formula_ptr& f);

/// Result of checking a formula on a lasso word: the verdict at position 0
/// and the truth value at every prefix and loop position.
struct ltl_verdict {
  bool satisfied = false;
  std::vector<char> per_position;
};

/// Evaluates `f` on the infinite word prefix . loop^omega. `atom_names[i]`
/// is the name bound to letter index i. Throws input_error on an empty
/// loop or an atom that names no known region.
ltl_verdict lasso_check(const formula_ptr& f, const lasso_word& w,
                        const std::vector<std::string>& atom_names);

}  // namespace polytrace
