#ifndef WITTKERNEL_PARSE_HPP
#define WITTKERNEL_PARSE_HPP

// Text syntaxes accepted on the command line.  Forms are comma-separated
// rationals ("1,-2,3/5", spaces tolerated); places are "inf" or a prime;
// Brauer classes are comma-separated place:value pairs ("7:1/3,13:2/3")
// with "0" for the zero class.  Parse failures name the offending token.

#include <string>

#include "wittkernel/brauer.hpp"
#include "wittkernel/qform.hpp"
#include "wittkernel/rational.hpp"

namespace wk {

Rational parse_rational(const std::string& token);
QuadraticForm parse_form(const std::string& text);
PlaceQ parse_place(const std::string& token);
BrauerClassQ parse_brauer_class(const std::string& text);
int64_t parse_integer(const std::string& token);
bool parse_bool(const std::string& token);

} // namespace wk

#endif
