#pragma once

// Hirzebruch–Riemann–Roch on Sym^N(Σ_g) and the vortex Hilbert-space
// dimension. Two independent routes are provided: integration of
// ch(L)·td(X) in the reduced ring, and the binomial closed form C(k, N)
// (itself cross-checked by a raw series expansion of the residue).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vortexq/classes.hpp"
#include "vortexq/power_series.hpp"
#include "vortexq/rational.hpp"
#include "vortexq/reduced_ring.hpp"

namespace vortexq {

/// Limits on the ring path.
inline constexpr std::uint64_t kMaxRingMonomials = 20000;
inline constexpr int kMaxRingPoints = 500;

enum class Method { hrr_ring, closed_form };

std::string_view to_string(Method method);
/// Accepts `hrr_ring` and `closed_form`.
Method parse_method(std::string_view text);

/// Σ_m s_m x^m for nilpotent x. Needs s.order() >= N.
RingElement substitute(const TruncatedSeries& s, const RingElement& x);

/// c(TX) = (1 + η)^{N-2g+1} · Π_i (1 + η - σ_i).
RingElement total_chern_class(const RingParams& ring);

/// td(X) = Q(η)^{N-2g+1} · Π_i Q(η - σ_i) with Q(t) = t / (1 - e^{-t}),
/// the Todd class attached to the Chern roots of total_chern_class.
RingElement todd_class(const RingParams& ring);

RingElement chern_character(const CohomologyClass& c, const RingParams& ring);

/// χ(X, L) = κ_N(ch(L)·td(X)) for the line bundle with c_1(L) = c.
/// Throws RingMismatchError if c does not have p.genus σ-coefficients.
Rational euler_characteristic(const CohomologyClass& c, const ModuliParams& p);

/// Rank-r version: ch(E) = Σ_i e^{δ_i} over the given Chern roots.
Rational euler_characteristic(std::span<const CohomologyClass> chern_roots, const ModuliParams& p);

/// The collapsed single-variable form κ_N{e^{(a+Σb_i)η} e^{-gη} (η/(1-e^{-η}))^{N+1}}
/// obtained by first trading every σ_i in c for η. Agrees with
/// euler_characteristic when every b_i is 0 or 1, which covers c_1(L).
Rational eta_form_euler_characteristic(const CohomologyClass& c, const ModuliParams& p);

/// C(k, N). Throws IntegralityError unless k is a positive integer.
Integer closed_form_dimension(const ModuliParams& p);

/// Coefficient of ε^N in (1 - ε)^{-K0-1}, by multiplying out the series.
Integer residue_coefficient(long k0, int n);

struct DimensionReport {
  ModuliParams params;
  /// Present only when vanishing_guaranteed.
  std::optional<Integer> dimension;
  Method method = Method::hrr_ring;
  bool vanishing_guaranteed = false;
  /// Integer whenever k is; a rational otherwise.
  Rational euler_characteristic;
  /// Present whenever k is integral.
  std::optional<Integer> closed_form;
  std::vector<std::string> notes;
};

/// Runs both routes, cross-checks them (ConsistencyError on mismatch) and
/// fills the vanishing diagnostics. `method` selects which route the
/// reported value is attributed to; closed_form requires integral k.
DimensionReport vortex_dimension(const ModuliParams& p, Method method = Method::hrr_ring);

}  // namespace vortexq
