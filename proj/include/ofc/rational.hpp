#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ofc {

// Exact fraction in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Accepts "P", "P/Q" (Q > 0). Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace ofc
