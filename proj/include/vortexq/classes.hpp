#pragma once

// Degree-one classes on Sym^N(Σ_g) that appear in the dimension count:
// the normalised Kähler class [ω]/4π, the quantum line bundle c_1(L),
// the tangent class c_1(TX) and the canonical class, plus the predicates
// that decide when the Euler characteristic is a dimension.

#include <string>
#include <string_view>
#include <vector>

#include "vortexq/rational.hpp"
#include "vortexq/reduced_ring.hpp"

namespace vortexq {

struct ModuliParams {
  int genus = 0;
  int vortices = 1;
  /// k = A / 4π. Any positive rational; integrality is checked separately.
  Rational area_quanta = 1;

  ModuliParams() = default;
  ModuliParams(int genus, int vortices, Rational area_quanta);

  RingParams ring() const { return RingParams(genus, vortices); }
};

enum class ClassRole { kahler, quantum_line, tangent_chern, canonical, custom };

std::string_view to_string(ClassRole role);

/// a·η + Σ b_i σ_i.
struct CohomologyClass {
  Rational eta_coeff;
  std::vector<Rational> sigma_coeffs;  // one per handle, b_1..b_g
  ClassRole role = ClassRole::custom;

  int genus() const { return static_cast<int>(sigma_coeffs.size()); }
  bool is_pure_eta() const;

  RingElement to_ring(const RingParams& params) const;

  /// e.g. `2*eta + sigma_1 - sigma_2`.
  std::string to_string() const;

  /// Coefficientwise equality; the role tag is ignored.
  bool same_class(const CohomologyClass& other) const;
};

/// Result is tagged custom.
CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass operator*(const Rational& scalar, const CohomologyClass& c);

CohomologyClass pure_eta_class(int genus, const Rational& coeff);

/// [ω_MN]/4π = (k - N) η + Σ σ_i.
CohomologyClass kahler_class(const ModuliParams& p);
/// c_1(L): same class as kahler_class, tagged quantum_line.
CohomologyClass quantum_line_class(const ModuliParams& p);
/// c_1(TX) = (N - g + 1) η - Σ σ_i.
CohomologyClass tangent_chern(const ModuliParams& p);
/// c_1(K) = -c_1(TX).
CohomologyClass canonical_class(const ModuliParams& p);

/// Checks kahler_class + tangent_chern == (k - g + 1) η exactly.
bool sum_identity_check(const ModuliParams& p);

/// k is a positive integer.
bool is_integral(const ModuliParams& p);

/// Positive pure multiple of η. Mixed classes answer false.
bool is_positive_eta_multiple(const CohomologyClass& c);

/// is_integral and k > max(N, g - 1).
bool vanishing_guaranteed(const ModuliParams& p);

}  // namespace vortexq
