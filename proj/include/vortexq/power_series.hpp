#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "vortexq/rational.hpp"

namespace vortexq {

/// Univariate power series with exact coefficients for exponents 0..order.
/// Products are truncated at the smaller of the two orders.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order);
  /// Coefficients for exponents 0..coeffs.size()-1; must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  TruncatedSeries(std::initializer_list<Rational> coeffs);

  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int exponent) const { return coeffs_.at(exponent); }
  Rational& operator[](int exponent) { return coeffs_.at(exponent); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Same series kept only up to `order` (which must not exceed order()).
  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

inline void PrintTo(const TruncatedSeries& s, std::ostream* os) { *os << s.to_string(); }

/// Coefficients c^m / m!, m = 0..order.
TruncatedSeries exp_series(const Rational& c, int order);

/// Multiplicative inverse up to s.order(). Throws NonInvertibleError when
/// the constant term is zero.
TruncatedSeries reciprocal(const TruncatedSeries& s);

TruncatedSeries pow(const TruncatedSeries& s, unsigned m);

/// (1 - e^{-t}) / t = Σ (-1)^m t^m / (m+1)!.
TruncatedSeries todd_denominator(int order);

/// t / (1 - e^{-t}), obtained by inverting todd_denominator.
TruncatedSeries todd_series(int order);

}  // namespace vortexq
