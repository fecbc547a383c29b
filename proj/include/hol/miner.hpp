#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hol/curvature.hpp"

namespace hol {

/// One full contraction of `degree` copies of R with four free slots.
///
/// Slot 4f+q is position q of factor f. partner[s] is the slot contracted
/// with s, or -1 when s is free. Free slots carry the labels i, j, k, l in
/// increasing slot order; the value of a pattern is the antisymmetrization
/// of the contraction over those four labels.
struct ContractionPattern {
  int degree = 0;
  std::vector<int> partner;

  std::vector<int> free_slots() const;
  /// e.g. "R(i,a,j,b) R(k,b,c,d) R(l,d,a,c)".
  std::string notation() const;

  friend auto operator<=>(const ContractionPattern&, const ContractionPattern&) = default;
};

/// Builds a pattern from per-factor label strings such as {"iajb", "kbcd",
/// "ldac"}: i, j, k, l are free, every other letter must occur exactly twice.
/// Returns the pattern together with the sign relating the given free-label
/// order to the slot-order convention.
struct SignedPattern {
  ContractionPattern pattern;
  int sign = 1;  // 0 when the pattern vanishes identically
};
SignedPattern pattern_from_labels(const std::vector<std::string>& factors);

/// Canonical representative under the symmetries of R (pair antisymmetries,
/// pair exchange) and factor reordering; value(input) = sign * value(result).
SignedPattern canonicalize(const ContractionPattern& pattern);

/// All nonvanishing canonical patterns of degree p in {2, 3}, sorted.
std::vector<ContractionPattern> enumerate_patterns(int p);

/// Raw contraction (before antisymmetrization) with free labels in slot order.
template <class T>
BasicTensor<T> contract_pattern(const ContractionPattern& pattern, const BasicTensor<T>& r);

extern template BasicTensor<Rational> contract_pattern(const ContractionPattern&, const BasicTensor<Rational>&);
extern template BasicTensor<CheckedInt> contract_pattern(const ContractionPattern&, const BasicTensor<CheckedInt>&);

/// The antisymmetrized pattern value. Requires n >= 4.
Tensor evaluate_pattern(const ContractionPattern& pattern, const CurvTensor& r);

/// Unnormalized alternating sums of the contraction at each i<j<k<l.
std::vector<CheckedInt> alternating_components(const ContractionPattern& pattern, const BasicTensor<CheckedInt>& r);

struct MinerConfig {
  int n = 4;
  int degree = 2;
  std::uint64_t seed = 1;
  int initial_samples = 0;     // 0: pattern count + 5
  int max_samples = 0;         // 0: 4 * pattern count + 50
  int stable_additions = 5;    // consecutive rank-neutral samples that end sampling
  std::int64_t sample_bound = 3;
  int fresh_samples = 50;      // post-hoc soundness check on unseen rho samples
};

struct MinedIdentityBasis {
  int n = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  std::vector<ContractionPattern> patterns;
  /// Conditions vanishing on every rho sample (N1) and on every generic
  /// curvature sample (N2); coefficient vectors over `patterns`.
  std::vector<std::vector<Rational>> image_identities;
  std::vector<std::vector<Rational>> universal_identities;
  /// Representatives of N1 / N2.
  std::vector<std::vector<Rational>> quotient;
  std::size_t rho_rank = 0;
  std::size_t generic_rank = 0;
  int rho_samples = 0;
  int generic_samples = 0;
  bool stabilized = false;
  bool nested = false;
  std::vector<std::string> failures;

  std::size_t quotient_dim() const { return quotient.size(); }
};

MinedIdentityBasis mine(const MinerConfig& config);

struct IdentityMembership {
  bool image = false;      // in span(N1)
  bool universal = false;  // in span(N2)
  bool quotient() const { return image && !universal; }
};
IdentityMembership classify(const MinedIdentityBasis& basis, const std::vector<Rational>& v);

/// Coefficient vector over `patterns` of sum_t coeff_t * pattern_t, where each
/// term is given by label strings as in pattern_from_labels.
struct PatternTerm {
  Rational coefficient;
  std::vector<std::string> factors;
};
std::vector<Rational> pattern_vector(const std::vector<ContractionPattern>& patterns,
                                     const std::vector<PatternTerm>& terms);

/// Value of sum_a v_a * pattern_a on R (antisymmetrized, exact).
Tensor evaluate_combination(const std::vector<ContractionPattern>& patterns, const std::vector<Rational>& v,
                            const CurvTensor& r);

}  // namespace hol
