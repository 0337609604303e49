#include "bisect/numeric.hpp"

#include <cctype>

namespace bisect {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view top = s.substr(0, slash);
  const std::string_view bottom =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(top) || !all_digits(bottom))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt n{std::string(top)};
  BigInt d{std::string(bottom)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const BigInt& v) { return v.convert_to<double>(); }

std::size_t hash_big(const BigInt& v) {
  const auto& b = v.backend();
  std::size_t seed = b.sign() ? 0x51ed27u : 0x2545f4u;
  const auto* limbs = b.limbs();
  for (unsigned i = 0; i < b.size(); ++i) hash_combine(seed, static_cast<std::size_t>(limbs[i]));
  return seed;
}

}  // namespace bisect
