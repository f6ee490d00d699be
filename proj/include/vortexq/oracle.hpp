#pragma once

// Brute-force model of H*(Σ_g)^{⊗N} with Koszul signs, used as ground
// truth for the reduced ring. A basis tuple assigns one surface class to
// each factor; labels are 0 = 1, 1..2g = α_i, 2g+1 = β.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vortexq/rational.hpp"
#include "vortexq/reduced_ring.hpp"

namespace vortexq::oracle {

/// Largest (2g+2)^N the oracle accepts.
inline constexpr std::uint64_t kMaxBasisSize = 1000000;

using Label = std::uint8_t;

/// Cohomology of a single genus-g surface.
class SurfaceBasis {
 public:
  explicit SurfaceBasis(int genus);

  int genus() const { return genus_; }
  int size() const { return 2 * genus_ + 2; }
  Label unit() const { return 0; }
  /// 1 <= i <= 2g.
  Label alpha(int i) const;
  Label beta() const { return static_cast<Label>(2 * genus_ + 1); }
  int degree(Label label) const;

  /// Product of two basis classes: {sign, label}; sign 0 means the product vanishes.
  std::pair<int, Label> multiply(Label a, Label b) const;

  std::string name(Label label) const;

 private:
  int genus_;
};

class TensorElement {
 public:
  using Tuple = std::vector<Label>;
  using TermMap = std::map<Tuple, Rational>;

  TensorElement(int genus, int points);

  static TensorElement unit(int genus, int points);
  /// coeff · (t_1 ⊗ … ⊗ t_N).
  static TensorElement basis_tuple(int genus, int points, const Tuple& tuple, const Rational& coeff = 1);
  /// α_{i,k}: α_i in factor k (both 1-based).
  static TensorElement alpha(int genus, int points, int i, int k);
  /// β_k.
  static TensorElement beta(int genus, int points, int k);

  int genus() const { return basis_.genus(); }
  int points() const { return points_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Tuple& t) const;

  /// Total real degree when every term has the same degree, otherwise -1.
  int homogeneous_degree() const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator*=(const Rational& scalar);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator*(TensorElement a, const Rational& s) { return a *= s; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.points_ == b.points_ && a.basis_.genus() == b.basis_.genus() && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void accumulate(const Tuple& t, const Rational& c);

  SurfaceBasis basis_;
  int points_;
  TermMap terms_;
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

/// ζ_i = Σ_k α_{i,k}.
TensorElement zeta(int genus, int points, int i);
/// η = Σ_k β_k.
TensorElement eta(int genus, int points);
/// σ_i = ζ_i · ζ_{i+g}.
TensorElement sigma(int genus, int points, int i);

/// Replaces η and σ_i by their tensor-ring expressions and expands.
TensorElement lift(const RingElement& x);
TensorElement lift(const Monomial& m, const RingParams& params);

/// Coefficient of β⊗…⊗β divided by N!.
Rational oracle_integrate(const TensorElement& t);

struct Discrepancy {
  Monomial left;
  Monomial right;
  Rational reduced_value;
  Rational oracle_value;
};

struct VerificationReport {
  int genus = 0;
  int points = 1;
  std::size_t monomials = 0;
  std::size_t pairs_checked = 0;
  std::vector<Discrepancy> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

/// Throws SizeBoundError when (2g+2)^N exceeds kMaxBasisSize.
void require_oracle_size(int genus, int points);

/// Compares κ_N(m1·m2) with oracle_integrate(lift(m1)·lift(m2)) for every
/// ordered pair of reduced-ring monomials.
VerificationReport verify_reduced_ring(int genus, int points);

}  // namespace vortexq::oracle
