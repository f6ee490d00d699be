#include "vortexq/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace vortexq {

namespace {

void require_order(int order) {
  if (order < 0) {
    throw std::invalid_argument("series order must be nonnegative");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("a truncated series needs at least one coefficient");
  }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Rational> coeffs)
    : TruncatedSeries(std::vector<Rational>(coeffs)) {}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  require_order(order);
  if (order > this->order()) {
    throw std::invalid_argument("cannot extend a truncated series");
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() < order()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (int j = 0; i + j <= order; ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) {
      os << ", ";
    }
    os << vortexq::to_string(coeffs_[i]);
  }
  os << ']';
  return os.str();
}

TruncatedSeries exp_series(const Rational& c, int order) {
  TruncatedSeries out(order);
  Rational term = 1;
  for (int m = 0; m <= order; ++m) {
    out[m] = term;
    term = term * c / (m + 1);
  }
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  if (s[0] == 0) {
    throw NonInvertibleError("series with zero constant term has no reciprocal");
  }
  const int order = s.order();
  TruncatedSeries t(order);
  const Rational inv0 = 1 / s[0];
  t[0] = inv0;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) {
      acc += s[i] * t[n - i];
    }
    t[n] = -acc * inv0;
  }
  return t;
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned m) {
  TruncatedSeries result = TruncatedSeries::one(s.order());
  TruncatedSeries base = s;
  while (m != 0) {
    if (m & 1U) {
      result = result * base;
    }
    m >>= 1U;
    if (m != 0) {
      base = base * base;
    }
  }
  return result;
}

TruncatedSeries todd_denominator(int order) {
  TruncatedSeries out(order);
  Integer fact = 1;
  for (int m = 0; m <= order; ++m) {
    fact *= m + 1;  // (m+1)!
    out[m] = Rational((m % 2 == 0) ? Integer(1) : Integer(-1), fact);
  }
  return out;
}

TruncatedSeries todd_series(int order) { return reciprocal(todd_denominator(order)); }

}  // namespace vortexq
