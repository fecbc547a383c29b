#include "hol/jets.hpp"
#include "support.hpp"

using namespace hol;

namespace {

// Small-argument oracle with 64-bit arithmetic.
long long choose(int top, int bottom) {
  if (bottom < 0 || bottom > top) return 0;
  long long v = 1;
  for (int i = 1; i <= bottom; ++i) v = v * (top - bottom + i) / i;
  return v;
}

long long metric_oracle(int n, int k) {
  long long s = 0;
  for (int i = 0; i <= k; ++i) s += static_cast<long long>(n) * (n + 1) / 2 * choose(n + i - 1, i);
  return s;
}

long long hessian_oracle(int n, int k) {
  long long s = 0;
  for (int i = 0; i <= k + 2; ++i) s += static_cast<long long>(n + 1) * choose(n + i - 1, i);
  return s;
}

}  // namespace

TEST_CASE("jet dimension examples") {
  CHECK(jet_dim_metric(3, 0) == 6);
  CHECK(jet_dim_metric(2, 1) == 9);
  CHECK(jet_dim_metric(4, 0) == 10);
  CHECK(jet_dim_hessian_data(2, 0) == 18);
  CHECK(jet_dim_hessian_data(3, 0) == 40);
}

TEST_CASE("jet dimensions agree with a direct 64-bit summation") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= 12; ++k) {
      CHECK(jet_dim_metric(n, k) == BigInt(std::to_string(metric_oracle(n, k))));
      CHECK(jet_dim_hessian_data(n, k) == BigInt(std::to_string(hessian_oracle(n, k))));
      CHECK(jet_deficit(n, k) == jet_dim_metric(n, k) - jet_dim_hessian_data(n, k));
    }
  }
}

TEST_CASE("jet dimensions are monotone in k") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < 30; ++k) {
      CHECK(jet_dim_metric(n, k) < jet_dim_metric(n, k + 1));
      CHECK(jet_dim_hessian_data(n, k) < jet_dim_hessian_data(n, k + 1));
    }
  }
}

TEST_CASE("crossover orders") {
  CHECK(crossover(3, 50) == 12);
  CHECK_FALSE(crossover(2, 200).has_value());
  CHECK(crossover(4, 50) == 9);
  CHECK(crossover(5, 50) == 8);
  CHECK(crossover(3, 11) == std::nullopt);
  for (int k = 0; k <= 200; ++k) CHECK(jet_deficit(2, k) < 0);
}

TEST_CASE("n=3 crossover matches the integer inequality") {
  for (int k = 0; k <= 60; ++k) {
    const bool direct = 3LL * (k + 1) * (k + 2) > 2LL * (k + 4) * (k + 5);
    CHECK(crossover_inequality_n3(k) == direct);
    CHECK((jet_deficit(3, k) > 0) == direct);
  }
}

TEST_CASE("deficit factorization for n = 2..8, k = 0..30") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= 30; ++k) {
      CHECK(deficit_factorization_holds(n, k));
      // explicit form: 2 deficit = (n+1) [(n-2) S - 2 C(n+k,k+1) - 2 C(n+k+1,k+2)]
      BigInt s = 0;
      for (int i = 0; i <= k; ++i) s += binomial(n + i - 1, i);
      const BigInt rhs = (n + 1) * ((n - 2) * s - 2 * binomial(n + k, k + 1) - 2 * binomial(n + k + 1, k + 2));
      CHECK(2 * jet_deficit(n, k) == rhs);
    }
  }
}

TEST_CASE("report: positivity and growth after the crossover") {
  for (int n = 3; n <= 8; ++n) {
    const JetReport r = jet_report(n, 60);
    REQUIRE(r.crossover.has_value());
    CHECK(r.positive_after_crossover);
    CHECK(r.increasing_after_crossover);
    CHECK(r.failures.empty());
    CHECK(r.rows.size() == 61);
    for (const auto& row : r.rows) {
      CHECK(row.metric >= 0);
      CHECK(row.hessian_data >= 0);
      if (row.k >= *r.crossover) CHECK(row.deficit > 0);
    }
    REQUIRE(r.metric_exponent.has_value());
    CHECK(*r.metric_exponent > 0);
  }
  const JetReport two = jet_report(2, 200);
  CHECK_FALSE(two.crossover.has_value());
  CHECK(two.failures.empty());
}

TEST_CASE("report records the binomial closed-form discrepancy") {
  const JetReport r = jet_report(4, 20);
  CHECK_FALSE(r.binomial_closed_form_agrees);
  CHECK(r.binomial_closed_form_first_mismatch == 0);
}

TEST_CASE("binomials are exact beyond 64 bits") {
  CHECK(binomial(70, 35) == BigInt("112186277816662845432"));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(0, 0) == 1);
}
