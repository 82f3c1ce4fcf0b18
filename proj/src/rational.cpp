#include "vtx/rational.hpp"

#include <stdexcept>

namespace vtx {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Rational binomial(long n, long k) {
  if (k < 0) return 0;
  Rational acc = 1;
  for (long j = 0; j < k; ++j) {
    acc *= Rational(n - j, j + 1);
  }
  return acc;
}

Rational factorial(long n) {
  Integer acc = 1;
  for (long j = 2; j <= n; ++j) acc *= j;
  return Rational(acc);
}

}  // namespace vtx
