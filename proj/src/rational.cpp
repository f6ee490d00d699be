#include "vortexq/rational.hpp"

#include <regex>

namespace vortexq {

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(([+-]?[0-9]+)(?:/([0-9]+))?)");
  const std::string input(text);
  std::smatch match;
  if (!std::regex_match(input, match, pattern)) {
    throw std::invalid_argument("not a rational number: '" + input + "'");
  }
  Integer num(match[1].str(), 10);
  Integer den(1);
  if (match[2].matched) {
    den = Integer(match[2].str(), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + input + "'");
    }
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer to_integer(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (!is_integer(canonical)) {
    throw IntegralityError("expected an integer, got " + to_string(canonical));
  }
  return canonical.get_num();
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace vortexq
