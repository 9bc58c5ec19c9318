#ifndef CTV_RATIONAL_HPP
#define CTV_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace ctv {

// Exact arithmetic everywhere: arbitrary-precision integers for chain
// coefficients and Smith normal forms, rationals for geometry and the
// intersection systems.  No floating point in the core.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/**
 * Parse a rational from "p/q" or "p".  Throws ctv::ConfigError on malformed
 * input or a zero denominator; `where` names the offending field in the
 * message.
 */
Rational parse_rational(const std::string& text, const std::string& where);

/** Format as "p/q", or "p" when the denominator is 1. */
std::string format_rational(const Rational& q);

}  // namespace ctv

#endif  // CTV_RATIONAL_HPP
