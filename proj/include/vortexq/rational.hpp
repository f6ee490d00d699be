#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace vortexq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two ring values built for different (genus, points) meet.
class RingMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonNilpotentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IntegralityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent computation paths disagreed. Indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parses `n`, `-n` or `p/q` into a canonical rational. Throws
/// std::invalid_argument on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical decimal form: `7`, `-3/2`.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Requires is_integer(value).
Integer to_integer(const Rational& value);

Integer factorial(unsigned long n);

}  // namespace vortexq
