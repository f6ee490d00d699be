#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "vortexq/oracle.hpp"

using namespace vortexq;
using namespace vortexq::oracle;

namespace {

TensorElement a(int g, int n, int i, int k) { return TensorElement::alpha(g, n, i, k); }
TensorElement b(int g, int n, int k) { return TensorElement::beta(g, n, k); }

// Random homogeneous element: a sum of products of `factors` generators.
TensorElement random_homogeneous(int g, int n, int real_degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> slot(1, n);
  std::uniform_int_distribution<int> alpha_index(1, 2 * g);
  std::uniform_int_distribution<int> coin(0, 1);
  TensorElement out(g, n);
  for (int term = 0; term < 3; ++term) {
    TensorElement product = TensorElement::unit(g, n);
    int remaining = real_degree;
    while (remaining > 0) {
      if (remaining >= 2 && (g == 0 || coin(rng) == 0)) {
        product = product * b(g, n, slot(rng));
        remaining -= 2;
      } else {
        product = product * a(g, n, alpha_index(rng), slot(rng));
        remaining -= 1;
      }
    }
    out += product * vortexq::testing::random_small_rational(rng);
  }
  return out;
}

}  // namespace

TEST(SurfaceBasis, InSlotRelations) {
  const SurfaceBasis s(2);
  EXPECT_EQ(s.multiply(s.alpha(1), s.alpha(3)), std::make_pair(1, s.beta()));
  EXPECT_EQ(s.multiply(s.alpha(3), s.alpha(1)), std::make_pair(-1, s.beta()));
  EXPECT_EQ(s.multiply(s.alpha(1), s.alpha(2)).first, 0);
  EXPECT_EQ(s.multiply(s.alpha(2), s.alpha(2)).first, 0);
  EXPECT_EQ(s.multiply(s.beta(), s.alpha(1)).first, 0);
  EXPECT_EQ(s.multiply(s.unit(), s.beta()), std::make_pair(1, s.beta()));
}

TEST(Oracle, TensorMulExamples) {
  const int g = 1;
  const int n = 2;
  EXPECT_EQ(tensor_mul(a(g, n, 1, 1), a(g, n, 1 + g, 1)), b(g, n, 1));
  EXPECT_EQ(tensor_mul(a(g, n, 1, 1), a(g, n, 1, 2)), tensor_mul(a(g, n, 1, 2), a(g, n, 1, 1)) * Rational(-1));
  EXPECT_TRUE(tensor_mul(b(g, n, 1), b(g, n, 1)).is_zero());
  EXPECT_THROW(tensor_mul(b(1, 2, 1), b(1, 3, 1)), RingMismatchError);
}

TEST(Oracle, LiftExamples) {
  const RingParams p(1, 2);
  EXPECT_EQ(lift(RingElement::eta(p)), b(1, 2, 1) + b(1, 2, 2));
  EXPECT_EQ(lift(RingElement::one(p)), TensorElement::unit(1, 2));

  const TensorElement expected = b(1, 2, 1) + b(1, 2, 2) + tensor_mul(a(1, 2, 1, 1), a(1, 2, 2, 2)) +
                                 tensor_mul(a(1, 2, 2, 1), a(1, 2, 1, 2)) * Rational(-1);
  EXPECT_EQ(lift(RingElement::sigma(p, 1)), expected);
}

TEST(Oracle, IntegrateExamples) {
  const RingParams p(1, 2);
  const RingElement eta = RingElement::eta(p);
  EXPECT_EQ(oracle_integrate(lift(eta * eta)), 1);
  EXPECT_EQ(lift(eta * eta).coefficient({SurfaceBasis(1).beta(), SurfaceBasis(1).beta()}), 2);
  EXPECT_EQ(oracle_integrate(lift(eta) * lift(RingElement::sigma(p, 1))), 1);
  EXPECT_EQ(oracle_integrate(lift(eta)), 0);
}

TEST(Oracle, SigmaSquaredVanishesInTensorRing) {
  for (int g = 1; g <= 2; ++g) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 1; i <= g; ++i) {
        EXPECT_TRUE((sigma(g, n, i) * sigma(g, n, i)).is_zero()) << "g=" << g << " N=" << n;
      }
    }
  }
}

TEST(Oracle, SigmaProductIntegratesToOne) {
  const RingParams p(2, 2);
  const TensorElement product = lift(RingElement::sigma(p, 1) * RingElement::sigma(p, 2));
  EXPECT_EQ(product.coefficient({SurfaceBasis(2).beta(), SurfaceBasis(2).beta()}), 2);
  EXPECT_EQ(oracle_integrate(product), integrate(RingElement::sigma(p, 1) * RingElement::sigma(p, 2)));
}

TEST(Oracle, TopEtaPowerIntegratesToOne) {
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 4; ++n) {
      const RingParams p(g, n);
      EXPECT_EQ(oracle_integrate(lift(pow(RingElement::eta(p), n))), 1);
    }
  }
}

TEST(Oracle, TopMonomialsMatchSubstitutionRule) {
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 3; ++n) {
      const RingParams p(g, n);
      for (const auto& m : ring_basis(p)) {
        EXPECT_EQ(oracle_integrate(lift(m, p)), integrate(RingElement::term(p, m, 1))) << m.to_string();
      }
    }
  }
}

TEST(Oracle, KoszulSignsAndAssociativity) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> degree(0, 3);
  for (int it = 0; it < 60; ++it) {
    const int g = 1 + it % 2;
    const int n = 2 + it % 2;
    const int da = degree(rng);
    const int db = degree(rng);
    const TensorElement x = random_homogeneous(g, n, da, rng);
    const TensorElement y = random_homogeneous(g, n, db, rng);
    const TensorElement z = random_homogeneous(g, n, degree(rng), rng);
    const Rational sign = (da * db) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(x * y, (y * x) * sign);
    EXPECT_EQ((x * y) * z, x * (y * z));
    if (!(x * y).is_zero()) {
      EXPECT_EQ((x * y).homogeneous_degree(), da + db);
    }
  }
}

TEST(Oracle, VerifyExamples) {
  for (auto [g, n] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{0, 3}}) {
    const VerificationReport report = verify_reduced_ring(g, n);
    EXPECT_TRUE(report.ok()) << "g=" << g << " N=" << n;
    EXPECT_EQ(report.pairs_checked, report.monomials * report.monomials);
  }
}

TEST(Oracle, SizeGuard) {
  EXPECT_THROW(verify_reduced_ring(5, 8), SizeBoundError);
  EXPECT_NO_THROW(require_oracle_size(4, 6));  // 10^6 exactly
  EXPECT_THROW(require_oracle_size(4, 7), SizeBoundError);
}
