#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylkit {

// All arithmetic in the library is exact. Magnitudes at desk scale stay far
// below 64-bit limits (coordinates and pairings are small integers, the only
// denominators come from the alpha/2 shift and line-polytope cuts).
using Int = long long;
using Rat = boost::rational<Int>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p" or "p/q" (exact, no floats).
inline Rat parse_rat(std::string_view s) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  };
  const auto parse_int = [&](std::string_view t) -> Int {
    if (t.empty()) bad();
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(std::string(t), &pos);
    } catch (const std::exception&) {
      bad();
    }
    if (pos != t.size()) bad();
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  const Int num = parse_int(s.substr(0, slash));
  const Int den = parse_int(s.substr(slash + 1));
  if (den == 0) bad();
  return Rat(num, den);
}

}  // namespace weylkit
