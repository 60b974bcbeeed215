#pragma once

#include <iosfwd>
#include <string>

#include "cremona/polynomial.hpp"

namespace cremona {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format, one polynomial per stream:
//   vars: x0 x1 x2 x3 x4
//   3/2 1 0 2 0 0
//   -1/1 0 0 0 0 1
// First line declares the ring, then one line per term: coefficient as
// num/den followed by one exponent per variable, terms in decreasing
// graded lexicographic order. A zero polynomial is just the header.
// Lines starting with '#' are ignored on input. print/parse round-trip
// byte-exactly for canonical input.
void print_polynomial(std::ostream& os, const Polynomial& p);
std::string polynomial_to_text(const Polynomial& p);
Polynomial parse_polynomial(std::istream& is);
Polynomial polynomial_from_text(const std::string& text);

void save_polynomial(const std::string& path, const Polynomial& p);
Polynomial load_polynomial(const std::string& path);

} // namespace cremona
