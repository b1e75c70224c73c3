#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace roughcm {

/// Cardinalities and matrix cells.
using Count = std::uint64_t;

/// Exact rational in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// num/den as a Rational; throws Range when den == 0 or a value overflows.
Rational make_ratio(Count num, Count den);

/// "2/3", or "1" for integral values.
std::string to_fraction_string(const Rational& r);

/// Decimal rendering rounded half-up to `places` digits, e.g. "0.666667".
std::string to_decimal_string(const Rational& r, int places = 6);

}  // namespace roughcm
