#include "vortexq/oracle.hpp"

#include <sstream>

namespace vortexq::oracle {

namespace {

void require_same_space(const TensorElement& a, const TensorElement& b) {
  if (a.genus() != b.genus() || a.points() != b.points()) {
    throw RingMismatchError("tensor elements live in different rings");
  }
}

TensorElement single_slot(int genus, int points, int k, Label label) {
  if (k < 1 || k > points) {
    throw std::out_of_range("factor index " + std::to_string(k) + " outside 1.." + std::to_string(points));
  }
  TensorElement::Tuple tuple(static_cast<std::size_t>(points), 0);
  tuple[k - 1] = label;
  return TensorElement::basis_tuple(genus, points, tuple);
}

}  // namespace

SurfaceBasis::SurfaceBasis(int genus) : genus_(genus) {
  if (genus < 0 || 2 * genus + 1 > 255) {
    throw std::invalid_argument("oracle genus out of range");
  }
}

Label SurfaceBasis::alpha(int i) const {
  if (i < 1 || i > 2 * genus_) {
    throw std::out_of_range("alpha index " + std::to_string(i) + " outside 1.." + std::to_string(2 * genus_));
  }
  return static_cast<Label>(i);
}

int SurfaceBasis::degree(Label label) const {
  if (label == 0) {
    return 0;
  }
  return label == beta() ? 2 : 1;
}

std::pair<int, Label> SurfaceBasis::multiply(Label a, Label b) const {
  if (a == 0) {
    return {1, b};
  }
  if (b == 0) {
    return {1, a};
  }
  if (a == beta() || b == beta()) {
    return {0, 0};
  }
  // α_i α_{i+g} = β = -α_{i+g} α_i; every other pair of α's vanishes.
  if (b == a + genus_ && a <= genus_) {
    return {1, beta()};
  }
  if (a == b + genus_ && b <= genus_) {
    return {-1, beta()};
  }
  return {0, 0};
}

std::string SurfaceBasis::name(Label label) const {
  if (label == 0) {
    return "1";
  }
  if (label == beta()) {
    return "b";
  }
  return "a" + std::to_string(label);
}

TensorElement::TensorElement(int genus, int points) : basis_(genus), points_(points) {
  if (points < 1) {
    throw std::invalid_argument("number of factors must be positive");
  }
}

TensorElement TensorElement::unit(int genus, int points) {
  return basis_tuple(genus, points, Tuple(static_cast<std::size_t>(points), 0));
}

TensorElement TensorElement::basis_tuple(int genus, int points, const Tuple& tuple, const Rational& coeff) {
  TensorElement out(genus, points);
  if (tuple.size() != static_cast<std::size_t>(points)) {
    throw std::invalid_argument("basis tuple has the wrong number of factors");
  }
  for (Label l : tuple) {
    if (l > out.basis_.beta()) {
      throw std::out_of_range("basis label out of range");
    }
  }
  out.accumulate(tuple, coeff);
  return out;
}

TensorElement TensorElement::alpha(int genus, int points, int i, int k) {
  return single_slot(genus, points, k, SurfaceBasis(genus).alpha(i));
}

TensorElement TensorElement::beta(int genus, int points, int k) {
  return single_slot(genus, points, k, SurfaceBasis(genus).beta());
}

Rational TensorElement::coefficient(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

int TensorElement::homogeneous_degree() const {
  int degree = -2;
  for (const auto& [tuple, c] : terms_) {
    int d = 0;
    for (Label l : tuple) {
      d += basis_.degree(l);
    }
    if (degree == -2) {
      degree = d;
    } else if (degree != d) {
      return -1;
    }
  }
  return degree == -2 ? 0 : degree;
}

void TensorElement::accumulate(const Tuple& t, const Rational& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  require_same_space(*this, other);
  for (const auto& [t, c] : other.terms_) {
    accumulate(t, c);
  }
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  require_same_space(a, b);
  const SurfaceBasis& basis = a.basis_;
  const int n = a.points_;
  TensorElement out(a.genus(), n);
  TensorElement::Tuple product(static_cast<std::size_t>(n));
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      // Koszul sign: factor b_j travels left past a_{j+1}, ..., a_N.
      int odd_a_after = 0;
      int sign = 1;
      for (int j = n - 1; j >= 0; --j) {
        if (basis.degree(tb[j]) % 2 == 1 && odd_a_after % 2 == 1) {
          sign = -sign;
        }
        if (basis.degree(ta[j]) % 2 == 1) {
          ++odd_a_after;
        }
      }
      bool vanishes = false;
      for (int j = 0; j < n && !vanishes; ++j) {
        const auto [s, label] = basis.multiply(ta[j], tb[j]);
        if (s == 0) {
          vanishes = true;
        }
        sign *= s;
        product[j] = label;
      }
      if (!vanishes) {
        Rational c = ca * cb;
        if (sign < 0) {
          c = -c;
        }
        out.accumulate(product, c);
      }
    }
  }
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [tuple, c] : terms_) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << vortexq::to_string(c) << '*';
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      os << (j == 0 ? "" : "(x)") << basis_.name(tuple[j]);
    }
  }
  return os.str();
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) { return a * b; }

TensorElement zeta(int genus, int points, int i) {
  TensorElement out(genus, points);
  for (int k = 1; k <= points; ++k) {
    out += TensorElement::alpha(genus, points, i, k);
  }
  return out;
}

TensorElement eta(int genus, int points) {
  TensorElement out(genus, points);
  for (int k = 1; k <= points; ++k) {
    out += TensorElement::beta(genus, points, k);
  }
  return out;
}

TensorElement sigma(int genus, int points, int i) {
  if (i < 1 || i > genus) {
    throw std::out_of_range("sigma index out of range");
  }
  return zeta(genus, points, i) * zeta(genus, points, i + genus);
}

TensorElement lift(const Monomial& m, const RingParams& params) {
  TensorElement out = TensorElement::unit(params.genus, params.points);
  const TensorElement eta_lift = eta(params.genus, params.points);
  for (int q = 0; q < m.eta_power(); ++q) {
    out = out * eta_lift;
  }
  for (int i : m.sigma_indices()) {
    out = out * sigma(params.genus, params.points, i);
  }
  return out;
}

TensorElement lift(const RingElement& x) {
  const RingParams& params = x.params();
  TensorElement out(params.genus, params.points);
  for (const auto& [m, c] : x.terms()) {
    out += lift(m, params) * c;
  }
  return out;
}

Rational oracle_integrate(const TensorElement& t) {
  const SurfaceBasis basis(t.genus());
  const TensorElement::Tuple top(static_cast<std::size_t>(t.points()), basis.beta());
  return t.coefficient(top) / Rational(factorial(static_cast<unsigned long>(t.points())));
}

void require_oracle_size(int genus, int points) {
  if (genus < 0 || points < 1) {
    throw std::invalid_argument("oracle needs g >= 0 and N >= 1");
  }
  Integer size;
  mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(2 * genus + 2), static_cast<unsigned long>(points));
  if (size > kMaxBasisSize) {
    throw SizeBoundError("tensor basis (2g+2)^N = " + to_string(size) + " exceeds oracle limit " +
                         std::to_string(kMaxBasisSize));
  }
}

VerificationReport verify_reduced_ring(int genus, int points) {
  require_oracle_size(genus, points);
  const RingParams params(genus, points);
  const std::vector<Monomial> basis = ring_basis(params);

  std::vector<TensorElement> lifts;
  lifts.reserve(basis.size());
  for (const auto& m : basis) {
    lifts.push_back(lift(m, params));
  }

  VerificationReport report;
  report.genus = genus;
  report.points = points;
  report.monomials = basis.size();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const RingElement left = RingElement::term(params, basis[i], 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Rational reduced = integrate(left * RingElement::term(params, basis[j], 1));
      const Rational truth = oracle_integrate(lifts[i] * lifts[j]);
      ++report.pairs_checked;
      if (reduced != truth) {
        report.discrepancies.push_back({basis[i], basis[j], reduced, truth});
      }
    }
  }
  return report;
}

}  // namespace vortexq::oracle
