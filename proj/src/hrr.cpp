#include "vortexq/hrr.hpp"

#include <algorithm>
#include <limits>

namespace vortexq {

namespace {

void require_ring_size(const RingParams& ring) {
  if (ring.points > kMaxRingPoints) {
    throw SizeBoundError("ring path supports at most N = " + std::to_string(kMaxRingPoints) + " vortices, got " +
                         std::to_string(ring.points));
  }
  const std::uint64_t size = ring_basis_size(ring);
  if (size > kMaxRingMonomials) {
    throw SizeBoundError("reduced ring for g=" + std::to_string(ring.genus) + ", N=" + std::to_string(ring.points) +
                         " has " + std::to_string(size) + " monomials (limit " +
                         std::to_string(kMaxRingMonomials) + ")");
  }
}

RingElement from_eta_series(const TruncatedSeries& s, const RingParams& ring) {
  RingElement out(ring);
  for (int m = 0; m <= std::min(s.order(), ring.points); ++m) {
    out += RingElement::term(ring, Monomial(m, 0), s[m]);
  }
  return out;
}

// s^e for any integer e; negative powers go through the reciprocal.
TruncatedSeries signed_pow(const TruncatedSeries& s, long e) {
  if (e >= 0) {
    return pow(s, static_cast<unsigned>(e));
  }
  return pow(reciprocal(s), static_cast<unsigned>(-e));
}

}  // namespace

std::string_view to_string(Method method) {
  return method == Method::closed_form ? "closed_form" : "hrr_ring";
}

Method parse_method(std::string_view text) {
  if (text == "hrr_ring") {
    return Method::hrr_ring;
  }
  if (text == "closed_form") {
    return Method::closed_form;
  }
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected hrr_ring or closed_form)");
}

RingElement substitute(const TruncatedSeries& s, const RingElement& x) {
  if (x.constant_term() != 0) {
    throw NonNilpotentError("series substitution needs an argument without constant term");
  }
  const int top = x.params().points;
  if (s.order() < top) {
    throw std::invalid_argument("series order " + std::to_string(s.order()) + " is below ring dimension " +
                                std::to_string(top));
  }
  // Horner from degree N down; higher coefficients cannot contribute.
  RingElement acc = RingElement::constant(x.params(), s[top]);
  for (int m = top - 1; m >= 0; --m) {
    acc = acc * x + RingElement::constant(x.params(), s[m]);
  }
  return acc;
}

RingElement total_chern_class(const RingParams& ring) {
  const int n = ring.points;
  TruncatedSeries base = TruncatedSeries::one(n);
  base[1] = 1;
  RingElement out = from_eta_series(signed_pow(base, static_cast<long>(n) - 2L * ring.genus + 1), ring);
  const RingElement one = RingElement::one(ring);
  const RingElement eta = RingElement::eta(ring);
  for (int i = 1; i <= ring.genus; ++i) {
    out *= one + eta - RingElement::sigma(ring, i);
  }
  return out;
}

RingElement todd_class(const RingParams& ring) {
  const int n = ring.points;
  const TruncatedSeries q = todd_series(n);
  RingElement out = from_eta_series(signed_pow(q, static_cast<long>(n) - 2L * ring.genus + 1), ring);
  const RingElement eta = RingElement::eta(ring);
  for (int i = 1; i <= ring.genus; ++i) {
    out *= substitute(q, eta - RingElement::sigma(ring, i));
  }
  return out;
}

RingElement chern_character(const CohomologyClass& c, const RingParams& ring) { return exp(c.to_ring(ring)); }

Rational euler_characteristic(const CohomologyClass& c, const ModuliParams& p) {
  return euler_characteristic(std::span<const CohomologyClass>(&c, 1), p);
}

Rational euler_characteristic(std::span<const CohomologyClass> chern_roots, const ModuliParams& p) {
  const RingParams ring = p.ring();
  require_ring_size(ring);
  RingElement ch(ring);
  for (const auto& root : chern_roots) {
    ch += chern_character(root, ring);
  }
  return integrate(ch * todd_class(ring));
}

Rational eta_form_euler_characteristic(const CohomologyClass& c, const ModuliParams& p) {
  if (c.genus() != p.genus) {
    throw RingMismatchError("class genus does not match parameters");
  }
  const int n = p.vortices;
  Rational exponent = c.eta_coeff - p.genus;
  for (const auto& b : c.sigma_coeffs) {
    exponent += b;
  }
  const TruncatedSeries integrand = exp_series(exponent, n) * pow(todd_series(n), static_cast<unsigned>(n + 1));
  return integrand[n];
}

Integer closed_form_dimension(const ModuliParams& p) {
  if (!is_integral(p)) {
    throw IntegralityError("k = " + to_string(p.area_quanta) +
                           " is not a positive integer; the Kahler class is not integral");
  }
  Integer result;
  mpz_bin_ui(result.get_mpz_t(), p.area_quanta.get_num_mpz_t(), static_cast<unsigned long>(p.vortices));
  return result;
}

Integer residue_coefficient(long k0, int n) {
  if (n < 0) {
    throw std::invalid_argument("residue order must be nonnegative");
  }
  // (1 - ε)^{-K0-1}: a power of the geometric series when K0 >= -1,
  // otherwise a polynomial power of (1 - ε).
  const long exponent = -k0 - 1;
  TruncatedSeries factor(n);
  if (exponent <= 0) {
    for (int m = 0; m <= n; ++m) {
      factor[m] = 1;
    }
  } else {
    factor[0] = 1;
    if (n >= 1) {
      factor[1] = -1;
    }
  }
  const unsigned long times = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  if (times > std::numeric_limits<unsigned>::max()) {
    throw std::out_of_range("residue exponent too large");
  }
  return to_integer(pow(factor, static_cast<unsigned>(times))[n]);
}

DimensionReport vortex_dimension(const ModuliParams& p, Method method) {
  DimensionReport report;
  report.params = p;
  report.method = method;
  const bool integral = is_integral(p);
  if (method == Method::closed_form && !integral) {
    throw IntegralityError("closed form needs integral k, got " + to_string(p.area_quanta));
  }

  report.euler_characteristic = euler_characteristic(quantum_line_class(p), p);

  if (integral) {
    const Integer closed = closed_form_dimension(p);
    const Integer k = p.area_quanta.get_num();
    const Integer k0 = k - p.vortices;
    const Integer residue = k0.fits_sint_p() ? residue_coefficient(k0.get_si(), p.vortices) : closed;
    if (report.euler_characteristic != Rational(closed) || residue != closed) {
      throw ConsistencyError("HRR ring value " + to_string(report.euler_characteristic) + ", closed form " +
                             to_string(closed) + " and residue " + to_string(residue) + " disagree");
    }
    report.closed_form = closed;
  } else {
    report.notes.push_back("k = " + to_string(p.area_quanta) +
                           " is not an integer: the Kahler class is not integral and no quantum line bundle exists");
  }

  report.vanishing_guaranteed = vanishing_guaranteed(p);
  const int bound = std::max(p.vortices, p.genus - 1);
  if (integral && !report.vanishing_guaranteed) {
    report.notes.push_back("k = " + to_string(p.area_quanta) + " does not exceed max(N, g-1) = " +
                           std::to_string(bound) +
                           ": higher cohomology is not known to vanish, value is the Euler characteristic only");
  }
  if (report.vanishing_guaranteed) {
    report.dimension = report.closed_form;
  }
  return report;
}

}  // namespace vortexq
