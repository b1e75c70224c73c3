#include "roughcm/rational.hpp"

#include <limits>

#include "roughcm/error.hpp"

namespace roughcm {

Rational make_ratio(Count num, Count den) {
  constexpr Count kMax = static_cast<Count>(std::numeric_limits<std::int64_t>::max());
  if (den == 0) throw Error(ErrorCode::Range, "ratio with zero denominator");
  if (num > kMax || den > kMax) throw Error(ErrorCode::Range, "ratio operand overflows int64");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::string to_fraction_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r, int places) {
  using Wide = unsigned __int128;
  const bool negative = r.numerator() < 0;
  const Wide num = static_cast<Wide>(negative ? -static_cast<__int128>(r.numerator())
                                              : static_cast<__int128>(r.numerator()));
  const Wide den = static_cast<Wide>(r.denominator());
  Wide scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half up on the magnitude
  const Wide scaled = (num * scale * 2 + den) / (den * 2);
  const auto whole = static_cast<unsigned long long>(scaled / scale);
  auto frac = static_cast<unsigned long long>(scaled % scale);

  std::string out = (negative && scaled != 0) ? "-" : "";
  out += std::to_string(whole);
  if (places > 0) {
    std::string digits(static_cast<std::size_t>(places), '0');
    for (int i = places - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    out += "." + digits;
  }
  return out;
}

}  // namespace roughcm
