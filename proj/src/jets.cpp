#include "hol/jets.hpp"

#include <cmath>
#include <stdexcept>

namespace hol {

namespace {

void check_args(int n, int k) {
  if (n < 2) throw std::invalid_argument("jet dimensions need n >= 2");
  if (k < 0) throw std::invalid_argument("jet order must be >= 0");
}

// sum_{i=0}^{m} C(n+i-1, i)
BigInt symmetric_power_sum(int n, int m) {
  BigInt s = 0;
  for (int i = 0; i <= m; ++i) s += binomial(n + i - 1, i);
  return s;
}

double log_ratio_exponent(const BigInt& hi, const BigInt& lo, int k_hi, int k_lo) {
  return std::log(hi.get_d() / lo.get_d()) / std::log(static_cast<double>(k_hi) / static_cast<double>(k_lo));
}

}  // namespace

BigInt binomial(int top, int bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

BigInt jet_dim_metric(int n, int k) {
  check_args(n, k);
  return BigInt(n * (n + 1) / 2) * symmetric_power_sum(n, k);
}

BigInt jet_dim_hessian_data(int n, int k) {
  check_args(n, k);
  return BigInt(n + 1) * symmetric_power_sum(n, k + 2);
}

BigInt jet_deficit(int n, int k) { return jet_dim_metric(n, k) - jet_dim_hessian_data(n, k); }

bool deficit_factorization_holds(int n, int k) {
  check_args(n, k);
  const BigInt s = symmetric_power_sum(n, k);
  const BigInt b = binomial(n + k, k + 1) + binomial(n + k + 1, k + 2);
  const BigInt d = jet_deficit(n, k);
  if (2 * d != BigInt(n + 1) * (BigInt(n - 2) * s - 2 * b)) return false;
  if (n % 2 == 0 && d != BigInt(n + 1) * (BigInt(n / 2 - 1) * s - b)) return false;
  return true;
}

bool crossover_inequality_n3(int k) { return 3 * (k + 1) * (k + 2) > 2 * (k + 4) * (k + 5); }

std::optional<int> crossover(int n, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  for (int k = 0; k <= cap; ++k) {
    if (jet_deficit(n, k) > 0) return k;
  }
  return std::nullopt;
}

JetReport jet_report(int n, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  check_args(n, 0);
  JetReport rep;
  rep.n = n;
  rep.cap = cap;
  BigInt binomial_sum = 0;
  for (int k = 0; k <= cap; ++k) {
    JetRow row{k, jet_dim_metric(n, k), jet_dim_hessian_data(n, k), 0};
    row.deficit = row.metric - row.hessian_data;
    if (!rep.crossover && row.deficit > 0) rep.crossover = k;

    if (k >= 1) binomial_sum += binomial(n + 1 - k, k);
    const BigInt b = binomial(n + k, k + 1) + binomial(n + k + 1, k + 2);
    const BigInt binomial_twice = BigInt(n + 1) * (BigInt(n - 2) * binomial_sum - 2 * b);
    if (rep.binomial_closed_form_agrees && binomial_twice != 2 * row.deficit) {
      rep.binomial_closed_form_agrees = false;
      rep.binomial_closed_form_first_mismatch = k;
    }
    rep.rows.push_back(std::move(row));
  }

  if (rep.crossover) {
    for (int k = *rep.crossover; k <= cap; ++k) {
      const BigInt& d = rep.rows[static_cast<std::size_t>(k)].deficit;
      if (d <= 0) rep.positive_after_crossover = false;
      if (k > *rep.crossover && d <= rep.rows[static_cast<std::size_t>(k - 1)].deficit) {
        rep.increasing_after_crossover = false;
      }
    }
    if (!rep.positive_after_crossover) {
      rep.failures.push_back("deficit turns nonpositive after the crossover");
    }
  } else if (n >= 3) {
    rep.positive_after_crossover = false;
    rep.increasing_after_crossover = false;
  }

  const int lo = cap / 2;
  if (lo >= 1) {
    const JetRow& a = rep.rows[static_cast<std::size_t>(cap)];
    const JetRow& b = rep.rows[static_cast<std::size_t>(lo)];
    rep.metric_exponent = log_ratio_exponent(a.metric, b.metric, cap, lo);
    rep.hessian_data_exponent = log_ratio_exponent(a.hessian_data, b.hessian_data, cap, lo);
    if (a.deficit > 0 && b.deficit > 0) rep.deficit_exponent = log_ratio_exponent(a.deficit, b.deficit, cap, lo);
  }
  return rep;
}

}  // namespace hol
