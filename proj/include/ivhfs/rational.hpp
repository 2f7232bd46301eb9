#ifndef IVHFS_RATIONAL_HPP
#define IVHFS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ivhfs {

/// Exact arbitrary-precision rational; every endpoint and degree in the
/// library is one of these.
using Rational = mpq_class;

/// Builds num/den in canonical (reduced) form. den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parses "0.35", "-1", "1/3", "+.5" exactly. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Shortest exact decimal when the value terminates ("0.3", "1", "0"),
/// otherwise "p/q". parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& value);

} // namespace ivhfs

#endif
