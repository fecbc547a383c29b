#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hol/rational.hpp"

namespace hol {

/// C(top, bottom); zero when bottom < 0 or top < bottom, and for top < 0.
BigInt binomial(int top, int bottom);

/// dim J_k(g) = sum_{i=0}^{k} n(n+1)/2 * C(n+i-1, i).
BigInt jet_dim_metric(int n, int k);

/// dim J_{k+2}(x, phi) = sum_{i=0}^{k+2} (n+1) * C(n+i-1, i).
BigInt jet_dim_hessian_data(int n, int k);

/// dim J_k(g) - dim J_{k+2}(x, phi).
BigInt jet_deficit(int n, int k);

struct JetRow {
  int k = 0;
  BigInt metric;
  BigInt hessian_data;
  BigInt deficit;
};

struct JetReport {
  int n = 0;
  int cap = 0;
  std::vector<JetRow> rows;  // k = 0..cap
  std::optional<int> crossover;
  /// Deficit stays positive (and strictly increases) on [crossover, cap].
  bool positive_after_crossover = true;
  bool increasing_after_crossover = true;
  /// log(v(cap) / v(cap/2)) / log 2; absent when not defined.
  std::optional<double> metric_exponent;
  std::optional<double> hessian_data_exponent;
  std::optional<double> deficit_exponent;
  /// Whether (n+1)(a - b) with a = (n/2 - 1) sum_{i=1}^{k} C(n+1-i, i)
  /// reproduces the deficit for every k in the table.
  bool binomial_closed_form_agrees = true;
  std::optional<int> binomial_closed_form_first_mismatch;
  std::vector<std::string> failures;
};

/// Table for k = 0..cap with crossover and growth diagnostics.
JetReport jet_report(int n, int cap);

/// Smallest k <= cap with positive deficit.
std::optional<int> crossover(int n, int cap);

/// 2 * deficit == (n+1) [(n-2) S_k - 2 C(n+k, k+1) - 2 C(n+k+1, k+2)],
/// S_k = sum_{i=0}^{k} C(n+i-1, i); for even n also the undoubled form.
bool deficit_factorization_holds(int n, int k);

/// 3(k+1)(k+2) > 2(k+4)(k+5): positivity of the n = 3 deficit after
/// cancelling the common factor (k+3).
bool crossover_inequality_n3(int k);

}  // namespace hol
