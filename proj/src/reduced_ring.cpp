#include "vortexq/reduced_ring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace vortexq {

namespace {

void require_same_ring(const RingParams& a, const RingParams& b) {
  if (!(a == b)) {
    throw RingMismatchError("ring elements belong to distinct rings (g=" + std::to_string(a.genus) +
                            ", N=" + std::to_string(a.points) + ") vs (g=" + std::to_string(b.genus) +
                            ", N=" + std::to_string(b.points) + ")");
  }
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace

RingParams::RingParams(int genus, int points) : genus(genus), points(points) {
  if (genus < 0 || genus > kMaxGenus) {
    throw std::invalid_argument("genus must lie in [0, " + std::to_string(kMaxGenus) + "]");
  }
  if (points < 1) {
    throw std::invalid_argument("number of points must be positive");
  }
}

Monomial::Monomial(int eta_power, std::uint64_t sigma_mask)
    : eta_power_(eta_power), sigma_mask_(sigma_mask) {
  if (eta_power < 0) {
    throw std::invalid_argument("negative eta power");
  }
}

Monomial Monomial::from_indices(int eta_power, const std::vector<int>& sigma_indices) {
  std::uint64_t mask = 0;
  for (int index : sigma_indices) {
    if (index < 1 || index > kMaxGenus) {
      throw std::invalid_argument("sigma index out of range: " + std::to_string(index));
    }
    const std::uint64_t bit = std::uint64_t{1} << (index - 1);
    if (mask & bit) {
      throw std::invalid_argument("repeated sigma index " + std::to_string(index));
    }
    mask |= bit;
  }
  return Monomial(eta_power, mask);
}

int Monomial::sigma_count() const { return std::popcount(sigma_mask_); }

std::vector<int> Monomial::sigma_indices() const {
  std::vector<int> out;
  for (std::uint64_t rest = sigma_mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.eta_power_ <=> b.eta_power_; c != 0) {
    return c;
  }
  // Lexicographic comparison of sorted index lists, walking lowest bits.
  std::uint64_t x = a.sigma_mask_;
  std::uint64_t y = b.sigma_mask_;
  while (x != 0 && y != 0) {
    const int ix = std::countr_zero(x);
    const int iy = std::countr_zero(y);
    if (ix != iy) {
      return ix <=> iy;
    }
    x &= x - 1;
    y &= y - 1;
  }
  return (x != 0) <=> (y != 0);
}

std::string Monomial::to_string() const {
  std::string out;
  if (eta_power_ == 1) {
    out = "eta";
  } else if (eta_power_ > 1) {
    out = "eta^" + std::to_string(eta_power_);
  }
  for (int index : sigma_indices()) {
    if (!out.empty()) {
      out += '*';
    }
    out += "s" + std::to_string(index);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> ring_basis(const RingParams& params) {
  std::vector<std::uint64_t> masks{0};
  // Grow subsets one index at a time, keeping only those of size <= N.
  for (int i = 0; i < params.genus; ++i) {
    const std::size_t count = masks.size();
    for (std::size_t j = 0; j < count; ++j) {
      if (std::popcount(masks[j]) < params.points) {
        masks.push_back(masks[j] | (std::uint64_t{1} << i));
      }
    }
  }
  std::vector<Monomial> basis;
  for (std::uint64_t mask : masks) {
    for (int q = 0; q + std::popcount(mask) <= params.points; ++q) {
      basis.emplace_back(q, mask);
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::uint64_t ring_basis_size(const RingParams& params) {
  Integer total = 0;
  for (int s = 0; s <= std::min(params.genus, params.points); ++s) {
    total += binomial(params.genus, s) * (params.points - s + 1);
  }
  if (!total.fits_ulong_p()) {
    return ~std::uint64_t{0};
  }
  return total.get_ui();
}

RingElement::RingElement(RingParams params) : params_(params) {}

RingElement RingElement::constant(const RingParams& params, const Rational& value) {
  return term(params, Monomial{}, value);
}

RingElement RingElement::eta(const RingParams& params) { return term(params, Monomial(1, 0), 1); }

RingElement RingElement::sigma(const RingParams& params, int index) {
  if (index < 1 || index > params.genus) {
    throw std::out_of_range("sigma index " + std::to_string(index) + " outside 1.." +
                            std::to_string(params.genus));
  }
  return term(params, Monomial(0, std::uint64_t{1} << (index - 1)), 1);
}

RingElement RingElement::term(const RingParams& params, const Monomial& m, const Rational& coeff) {
  if (m.sigma_mask() != 0 && std::bit_width(m.sigma_mask()) > static_cast<unsigned>(params.genus)) {
    throw std::out_of_range("monomial " + m.to_string() + " uses a sigma beyond genus " +
                            std::to_string(params.genus));
  }
  RingElement out(params);
  if (m.degree() <= params.points) {
    out.accumulate(m, coeff);
  }
  return out;
}

Rational RingElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::accumulate(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(params_, other.params_);
  for (const auto& [m, c] : other.terms_) {
    accumulate(m, c);
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(params_, other.params_);
  for (const auto& [m, c] : other.terms_) {
    accumulate(m, -c);
  }
  return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  *this = *this * other;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& [m, c] : out.terms_) {
    c = -c;
  }
  return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a.params_, b.params_);
  RingElement out(a.params_);
  const int top = a.params_.points;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if ((ma.sigma_mask() & mb.sigma_mask()) != 0) {
        continue;  // σ_i² = 0
      }
      if (ma.degree() + mb.degree() > top) {
        continue;
      }
      out.accumulate(Monomial(ma.eta_power() + mb.eta_power(), ma.sigma_mask() | mb.sigma_mask()),
                     ca * cb);
    }
  }
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) {
        os << '-';
      }
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = m.degree() == 0;
    if (magnitude != 1 || unit_monomial) {
      os << vortexq::to_string(Rational(magnitude));
      if (!unit_monomial) {
        os << '*';
      }
    }
    if (!unit_monomial) {
      os << m.to_string();
    }
  }
  return os.str();
}

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }

RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }

RingElement pow(const RingElement& x, unsigned m) {
  RingElement result = RingElement::one(x.params());
  RingElement base = x;
  while (m != 0) {
    if (m & 1U) {
      result *= base;
    }
    m >>= 1U;
    if (m != 0) {
      base *= base;
    }
  }
  return result;
}

RingElement exp(const RingElement& x) {
  if (x.constant_term() != 0) {
    throw NonNilpotentError("exp requires zero constant term, got " + to_string(x.constant_term()));
  }
  RingElement result = RingElement::one(x.params());
  RingElement power = RingElement::one(x.params());
  for (int m = 1; m <= x.params().points; ++m) {
    power *= x;
    if (power.is_zero()) {
      break;
    }
    power *= Rational(1, m);
    result += power;  // power now holds x^m / m!
  }
  return result;
}

Rational integrate(const RingElement& x) {
  Rational total = 0;
  for (const auto& [m, c] : x.terms()) {
    if (m.degree() == x.params().points) {
      total += c;
    }
  }
  return total;
}

}  // namespace vortexq
