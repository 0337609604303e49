#pragma once

// Exact integer and rational scalars used by every geometric routine.
//
// Rationals are always stored reduced with a positive denominator, so two
// equal values have identical numerator/denominator pairs.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bisect {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy. Every failure raised by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EqualPoints : Error {
  using Error::Error;
};
struct Collinear : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct DuplicatePoint : PreconditionViolated {
  using PreconditionViolated::PreconditionViolated;
};
struct SetTooLarge : Error {
  using Error::Error;
};
struct RangeTooSmall : Error {
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }
// n / d for any nonzero d (the two-argument Rational constructor rejects d < 0).
inline Rational ratio(const BigInt& n, const BigInt& d) {
  return d < 0 ? Rational(-n, -d) : Rational(n, d);
}

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_big(a), abs_big(b));
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs_big(a / gcd_big(a, b) * b);
}

// Parses "p/q", "-p/q" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Inverse of parse_rational: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

// Only for reporting and slope fitting.
double to_double(const Rational& r);
double to_double(const BigInt& v);

std::size_t hash_big(const BigInt& v);

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace bisect
