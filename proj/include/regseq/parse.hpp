#pragma once

#include <string>
#include <vector>

#include "regseq/polynomial.hpp"

namespace regseq {

// Text grammar: terms joined by + / -, each term `coeff*x<i>^<e>*...` with an
// integer or a/b coefficient; omitted coefficient means 1, omitted exponent
// means 1. Example: 3*x1^2*x2 - 1/2*x3. The symbol letter is 'x' for ordinary
// polynomials and 'e' for elementary-basis output.
Polynomial parse_polynomial(const std::string& text, int nvars, char symbol = 'x');
std::string to_string(const Polynomial& f, char symbol = 'x');

// Comma-separated generator list; each item is a family token (p:3, h:12, e:2)
// or a raw polynomial in the grammar above.
std::vector<Polynomial> parse_generators(const std::string& list, int nvars);

}  // namespace regseq
