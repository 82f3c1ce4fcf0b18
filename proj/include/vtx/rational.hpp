#ifndef VTX_RATIONAL_HPP
#define VTX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace vtx {

// All arithmetic in the library is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

// Serialized form is "p" or "p/q" with q > 0 and gcd(p,q)=1.
std::string to_string(const Rational& r);
std::optional<Rational> parse_rational(const std::string& s);

// binomial(n, k) for any integer n and k >= 0.
Rational binomial(long n, long k);

Rational factorial(long n);

// Integer part accessor for rationals known to be integers.
inline long to_long(const Rational& r) {
  return numerator(r).convert_to<long>();
}

}  // namespace vtx

#endif
