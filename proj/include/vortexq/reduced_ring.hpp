#pragma once

// Reduced S_N-invariant model of H*(Sym^N Σ_g): polynomials in η and
// σ_1..σ_g with σ_i² = 0, truncated above complex degree N. Only the
// top-degree functional κ_N is claimed to agree with the true cohomology
// ring; the tensor-ring oracle checks exactly that.

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "vortexq/rational.hpp"

namespace vortexq {

/// Largest genus representable by the σ bitmask.
inline constexpr int kMaxGenus = 63;

struct RingParams {
  int genus = 0;   // g >= 0
  int points = 1;  // N >= 1, complex dimension of Sym^N

  RingParams() = default;
  RingParams(int genus, int points);

  friend bool operator==(const RingParams&, const RingParams&) = default;
};

/// η^q · σ_S. Complex degree q + |S|.
class Monomial {
 public:
  Monomial() = default;
  Monomial(int eta_power, std::uint64_t sigma_mask);
  /// `sigma_indices` are 1-based; duplicates are rejected.
  static Monomial from_indices(int eta_power, const std::vector<int>& sigma_indices);

  int eta_power() const { return eta_power_; }
  std::uint64_t sigma_mask() const { return sigma_mask_; }
  int sigma_count() const;
  int degree() const { return eta_power_ + sigma_count(); }
  bool has_sigma(int index) const { return (sigma_mask_ >> (index - 1)) & 1U; }
  /// Sorted, 1-based.
  std::vector<int> sigma_indices() const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Orders by η-power, then by the sorted σ index list.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  int eta_power_ = 0;
  std::uint64_t sigma_mask_ = 0;
};

/// All monomials of the ring, in canonical order.
std::vector<Monomial> ring_basis(const RingParams& params);

/// Size of ring_basis(params) without materialising it.
std::uint64_t ring_basis_size(const RingParams& params);

class RingElement {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit RingElement(RingParams params);

  static RingElement zero(const RingParams& params) { return RingElement(params); }
  static RingElement constant(const RingParams& params, const Rational& value);
  static RingElement one(const RingParams& params) { return constant(params, 1); }
  static RingElement eta(const RingParams& params);
  /// `index` is 1-based, 1 <= index <= genus.
  static RingElement sigma(const RingParams& params, int index);
  /// Monomials above the truncation degree yield zero.
  static RingElement term(const RingParams& params, const Monomial& m, const Rational& coeff);

  const RingParams& params() const { return params_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const Rational& scalar);
  RingElement& operator*=(const RingElement& other);
  RingElement operator-() const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
  friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);

  friend bool operator==(const RingElement&, const RingElement&) = default;

  /// e.g. `2*eta^2 + eta*s1 - s1*s2`; `0` for the zero element.
  std::string to_string() const;

 private:
  void accumulate(const Monomial& m, const Rational& coeff);

  RingParams params_;
  TermMap terms_;
};

inline void PrintTo(const RingElement& x, std::ostream* os) { *os << x.to_string(); }

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement pow(const RingElement& x, unsigned m);

/// Σ_{m=0..N} x^m / m!. Throws NonNilpotentError if x has a constant term.
RingElement exp(const RingElement& x);

/// κ_N: sum of top-degree coefficients, every σ_i counted as η and
/// κ_N(η^N) = 1.
Rational integrate(const RingElement& x);

}  // namespace vortexq
