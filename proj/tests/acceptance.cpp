// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support/oracles.hpp"
#include "vortexq/classes.hpp"
#include "vortexq/cli.hpp"
#include "vortexq/hrr.hpp"
#include "vortexq/oracle.hpp"
#include "vortexq/power_series.hpp"

using namespace vortexq;
using vortexq::testing::pascal_binomial;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) {
      detail = why;
    }
    pass = false;
  }
};

Rational hrr_value(const ModuliParams& p) { return euler_characteristic(quantum_line_class(p), p); }

Outcome theorem_grid() {
  Outcome o;
  int points = 0;
  for (int g = 0; g <= 4; ++g) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = std::max(n, g - 1) + 1; k <= n + 8; ++k) {
        const ModuliParams p(g, n, k);
        ++points;
        if (hrr_value(p) != Rational(pascal_binomial(k, n))) {
          o.fail("HRR != C(k,N) at g=" + std::to_string(g) + " N=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(points) + " grid points" : o.detail;
  return o;
}

Outcome genus_zero() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 1; l <= 8; ++l) {
      const DimensionReport r = vortex_dimension(ModuliParams(0, n, n + l));
      if (!r.dimension || *r.dimension != pascal_binomial(n + l, l)) {
        o.fail("dimension != C(N+l, l) at N=" + std::to_string(n) + " l=" + std::to_string(l));
      }
    }
  }
  return o;
}

Outcome sum_identity() {
  Outcome o;
  std::mt19937 rng(500);
  std::uniform_int_distribution<int> g(0, 6);
  std::uniform_int_distribution<int> n(1, 8);
  std::uniform_int_distribution<int> num(1, 80);
  std::uniform_int_distribution<int> den(1, 9);
  int rational_count = 0;
  for (int i = 0; i < 500; ++i) {
    Rational k(num(rng), den(rng));
    k.canonicalize();
    rational_count += is_integer(k) ? 0 : 1;
    const ModuliParams p(g(rng), n(rng), k);
    const CohomologyClass sum = kahler_class(p) + tangent_chern(p);
    if (sum.eta_coeff != k - p.genus + 1 || !sum.is_pure_eta() || !sum_identity_check(p)) {
      o.fail("identity fails at k=" + to_string(k));
    }
  }
  if (rational_count == 0) {
    o.fail("no non-integral k sampled");
  }
  o.detail = o.pass ? "500 triples, " + std::to_string(rational_count) + " with non-integral k" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const std::pair<int, int> cases[] = {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}};
  std::size_t pairs = 0;
  for (auto [g, n] : cases) {
    const oracle::VerificationReport report = oracle::verify_reduced_ring(g, n);
    pairs += report.pairs_checked;
    if (!report.ok()) {
      o.fail(std::to_string(report.discrepancies.size()) + " discrepancies at g=" + std::to_string(g) +
             " N=" + std::to_string(n));
    }
    const RingParams ring(g, n);
    for (const auto& m : ring_basis(ring)) {
      if (m.degree() != n) {
        continue;
      }
      const oracle::TensorElement lifted = oracle::lift(m, ring);
      if (integrate(RingElement::term(ring, m, 1)) != 1 || oracle::oracle_integrate(lifted) != 1) {
        o.fail("top monomial " + m.to_string() + " does not integrate to 1");
      }
    }
  }
  o.detail = o.pass ? std::to_string(pairs) + " monomial pairs" : o.detail;
  return o;
}

Outcome curve_riemann_roch() {
  Outcome o;
  for (int g = 0; g <= 4; ++g) {
    for (int k = std::max(1, g - 1) + 1; k <= 14; ++k) {
      const ModuliParams p(g, 1, k);
      const Rational degree = integrate(quantum_line_class(p).to_ring(p.ring()));
      const Rational value = hrr_value(p);
      if (degree != k - 1 + g || value != k || value != degree - g + 1) {
        o.fail("Riemann-Roch mismatch at g=" + std::to_string(g) + " k=" + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome todd_coefficients() {
  Outcome o;
  const TruncatedSeries todd = todd_series(12);
  const auto expected = vortexq::testing::todd_coefficients_from_bernoulli(12);
  for (int m = 0; m <= 12; ++m) {
    if (todd[m] != expected[m]) {
      o.fail("coefficient " + std::to_string(m) + " differs from Bernoulli recurrence");
    }
    if (m >= 3 && m % 2 == 1 && todd[m] != 0) {
      o.fail("odd coefficient " + std::to_string(m) + " nonzero");
    }
  }
  return o;
}

Outcome residue_independence() {
  Outcome o;
  for (int k0 = 0; k0 <= 10; ++k0) {
    for (int n = 0; n <= 10; ++n) {
      if (residue_coefficient(k0, n) != pascal_binomial(k0 + n, n)) {
        o.fail("residue != C(K0+N, N) at K0=" + std::to_string(k0) + " N=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome hypothesis_boundary() {
  Outcome o;
  auto check = [&](int g, int n, int k) {
    const DimensionReport r = vortex_dimension(ModuliParams(g, n, k));
    const std::string where = "g=" + std::to_string(g) + " N=" + std::to_string(n) + " k=" + std::to_string(k);
    if (r.vanishing_guaranteed || r.dimension.has_value()) {
      o.fail("vanishing claimed at " + where);
    }
    if (r.euler_characteristic != Rational(pascal_binomial(k, n))) {
      o.fail("Euler characteristic missing or wrong at " + where);
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"dimension", "-g", std::to_string(g), "-n", std::to_string(n), "-k",
                               std::to_string(k), "--format", "json"},
                              out, err);
    if (code != cli::kExitUnguaranteed) {
      o.fail("CLI exit " + std::to_string(code) + " (expected 2) at " + where);
    }
    if (out.str().find("\"euler_characteristic\"") == std::string::npos) {
      o.fail("CLI did not emit the Euler characteristic at " + where);
    }
  };
  int cases = 0;
  for (int g = 0; g <= 4; ++g) {
    for (int n = 1; n <= 6; ++n) {
      if (n >= g - 1) {
        check(g, n, n);  // k = N
        ++cases;
      }
    }
  }
  for (int g = 3; g <= 8; ++g) {
    for (int n = 1; n <= g - 1; ++n) {
      check(g, n, g - 1);  // k = g - 1 >= N
      ++cases;
    }
  }
  o.detail = o.pass ? std::to_string(cases) + " boundary points" : o.detail;
  return o;
}

Outcome genus_independence() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int k = std::max(n, 3) + 1; k <= n + 8; ++k) {
      const Rational reference = hrr_value(ModuliParams(0, n, k));
      for (int g = 1; g <= 4; ++g) {
        if (hrr_value(ModuliParams(g, n, k)) != reference) {
          o.fail("value depends on g at N=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const Criterion criteria[] = {
      {"1 HRR ring value equals C(k,N) on the hypothesis grid", theorem_grid, 30.0},
      {"2 genus-0 dimension equals C(N+l,l)", genus_zero, 0.0},
      {"3 Kahler + tangent class is (k-g+1) eta", sum_identity, 0.0},
      {"4 reduced ring agrees with tensor-ring oracle", oracle_equivalence, 60.0},
      {"5 curve Riemann-Roch at N=1", curve_riemann_roch, 0.0},
      {"6 Todd series matches Bernoulli recurrence", todd_coefficients, 0.0},
      {"7 residue expansion equals C(K0+N,N)", residue_independence, 0.0},
      {"8 hypothesis boundary flagged, CLI exit 2", hypothesis_boundary, 0.0},
      {"9 Euler characteristic independent of genus", genus_independence, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  [" << c.name << "]";
    if (!outcome.detail.empty()) {
      std::cout << "  " << outcome.detail;
    }
    std::cout << "  (" << seconds << " s)\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
