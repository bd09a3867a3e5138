#pragma once
// Tiny polynomial-symbol parser for CLI Hamiltonian specs.
// Grammar (precedence climbing):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := rational | variable | '(' expr ')'
// Rationals are integers, a/b fractions, or decimal literals (converted
// exactly).  Variables: q, p for one spatial dimension; x, y, px, py for two.

#include "psqm/symbol.hpp"

#include <string>

namespace psqm {

// dim must be 1 or 2; throws std::invalid_argument on malformed input
PolynomialSymbol parse_hamiltonian(const std::string& src, int dim);

}  // namespace psqm
