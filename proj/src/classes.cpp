#include "vortexq/classes.hpp"

#include <algorithm>
#include <sstream>

namespace vortexq {

ModuliParams::ModuliParams(int genus, int vortices, Rational area_quanta)
    : genus(genus), vortices(vortices), area_quanta(std::move(area_quanta)) {
  if (genus < 0) {
    throw std::invalid_argument("genus must be nonnegative");
  }
  if (vortices < 1) {
    throw std::invalid_argument("number of vortices must be positive");
  }
  if (this->area_quanta <= 0) {
    throw std::invalid_argument("area quanta k must be positive");
  }
}

std::string_view to_string(ClassRole role) {
  switch (role) {
    case ClassRole::kahler:
      return "kahler";
    case ClassRole::quantum_line:
      return "quantum_line";
    case ClassRole::tangent_chern:
      return "tangent_chern";
    case ClassRole::canonical:
      return "canonical";
    case ClassRole::custom:
      return "custom";
  }
  return "custom";
}

bool CohomologyClass::is_pure_eta() const {
  return std::all_of(sigma_coeffs.begin(), sigma_coeffs.end(), [](const Rational& b) { return b == 0; });
}

RingElement CohomologyClass::to_ring(const RingParams& params) const {
  if (params.genus != genus()) {
    throw RingMismatchError("class has " + std::to_string(genus()) + " sigma coefficients but ring genus is " +
                            std::to_string(params.genus));
  }
  RingElement out = RingElement::eta(params) * eta_coeff;
  for (int i = 0; i < genus(); ++i) {
    out += RingElement::sigma(params, i + 1) * sigma_coeffs[i];
  }
  return out;
}

std::string CohomologyClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& symbol) {
    if (c == 0) {
      return;
    }
    if (first) {
      os << (c < 0 ? "-" : "");
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(c);
    if (magnitude != 1) {
      os << vortexq::to_string(magnitude) << '*';
    }
    os << symbol;
  };
  emit(eta_coeff, "eta");
  for (int i = 0; i < genus(); ++i) {
    emit(sigma_coeffs[i], "sigma_" + std::to_string(i + 1));
  }
  return first ? "0" : os.str();
}

bool CohomologyClass::same_class(const CohomologyClass& other) const {
  return eta_coeff == other.eta_coeff && sigma_coeffs == other.sigma_coeffs;
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.genus() != b.genus()) {
    throw RingMismatchError("cannot add classes of different genus");
  }
  CohomologyClass out{a.eta_coeff + b.eta_coeff, a.sigma_coeffs, ClassRole::custom};
  for (int i = 0; i < a.genus(); ++i) {
    out.sigma_coeffs[i] += b.sigma_coeffs[i];
  }
  return out;
}

CohomologyClass operator*(const Rational& scalar, const CohomologyClass& c) {
  CohomologyClass out{scalar * c.eta_coeff, c.sigma_coeffs, ClassRole::custom};
  for (auto& b : out.sigma_coeffs) {
    b *= scalar;
  }
  return out;
}

CohomologyClass pure_eta_class(int genus, const Rational& coeff) {
  return CohomologyClass{coeff, std::vector<Rational>(static_cast<std::size_t>(genus), Rational(0)),
                         ClassRole::custom};
}

CohomologyClass kahler_class(const ModuliParams& p) {
  return CohomologyClass{p.area_quanta - p.vortices,
                         std::vector<Rational>(static_cast<std::size_t>(p.genus), Rational(1)), ClassRole::kahler};
}

CohomologyClass quantum_line_class(const ModuliParams& p) {
  CohomologyClass c = kahler_class(p);
  c.role = ClassRole::quantum_line;
  return c;
}

CohomologyClass tangent_chern(const ModuliParams& p) {
  return CohomologyClass{Rational(p.vortices - p.genus + 1),
                         std::vector<Rational>(static_cast<std::size_t>(p.genus), Rational(-1)),
                         ClassRole::tangent_chern};
}

CohomologyClass canonical_class(const ModuliParams& p) {
  CohomologyClass c = Rational(-1) * tangent_chern(p);
  c.role = ClassRole::canonical;
  return c;
}

bool sum_identity_check(const ModuliParams& p) {
  const CohomologyClass sum = kahler_class(p) + tangent_chern(p);
  return sum.same_class(pure_eta_class(p.genus, p.area_quanta - p.genus + 1));
}

bool is_integral(const ModuliParams& p) { return is_integer(p.area_quanta) && p.area_quanta > 0; }

bool is_positive_eta_multiple(const CohomologyClass& c) { return c.is_pure_eta() && c.eta_coeff > 0; }

bool vanishing_guaranteed(const ModuliParams& p) {
  return is_integral(p) && p.area_quanta > std::max(p.vortices, p.genus - 1);
}

}  // namespace vortexq
