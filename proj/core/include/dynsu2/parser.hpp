#pragma once

#include "dynsu2/algebra.hpp"

namespace dynsu2 {

struct ParseError : std::runtime_error {
  size_t column;
  ParseError(const std::string& what, size_t col)
      : std::runtime_error(what + " at column " + std::to_string(col + 1)), column(col) {}
};

/// Parses the CLI expression grammar into an element and normalizes it.
/// Letters alpha beta gamma delta; scalars f[lambda](e), f[mu](e); rational
/// literals; q; ^ integer powers; * / + -; parentheses.  Inside f[x](...)
/// the name x denotes the exponential q^x.
AlgElement parse_element(const std::string& text, Mode mode = Mode::SL2);

/// Renders a normal form; coefficients that match q^k F/G/H/I products are
/// printed by name.
std::string render(const AlgElement& e);

}  // namespace dynsu2
