#include <map>
#include <set>

#include "hol/curvature.hpp"
#include "hol/hessian_map.hpp"
#include "hol/identities.hpp"
#include "hol/miner.hpp"
#include "support.hpp"

using namespace hol;
using hol::test::axes;

namespace {

const std::vector<PatternTerm> kQuadTerms{{1, {"ijab", "klba"}}};
const std::vector<PatternTerm> kCubicTerms{{1, {"iajb", "kbcd", "ldac"}}, {-2, {"iajb", "kcad", "ldbc"}}};

// Tensor with the pair antisymmetries and pair exchange of R but no Bianchi
// constraint; this is exactly the symmetry group used for canonical forms.
Tensor pair_symmetric(int n, std::uint64_t seed) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  Tensor t(n, 4);
  std::uint64_t counter = 0;
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x; y < pairs.size(); ++y) {
      const Rational v = CounterRng(seed, counter++).uniform_rational(9);
      const auto [i, j] = pairs[x];
      const auto [k, l] = pairs[y];
      for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
          const int a = s1 ? j : i;
          const int b = s1 ? i : j;
          const int c = s2 ? l : k;
          const int d = s2 ? k : l;
          const Rational sv = (s1 ^ s2) ? Rational(-v) : v;
          t(a, b, c, d) = sv;
          t(c, d, a, b) = sv;
        }
      }
    }
  }
  return t;
}

// Degree-2 contraction given by label strings, alternated over i,j,k,l.
Tensor brute_degree2(const std::string& f1, const std::string& f2, const Tensor& r) {
  const int n = r.dim();
  Tensor raw(n, 4);
  std::map<char, int> val;
  std::array<int, 4> free{};
  for (free[0] = 0; free[0] < n; ++free[0]) {
    for (free[1] = 0; free[1] < n; ++free[1]) {
      for (free[2] = 0; free[2] < n; ++free[2]) {
        for (free[3] = 0; free[3] < n; ++free[3]) {
          Rational acc;
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              val = {{'i', free[0]}, {'j', free[1]}, {'k', free[2]}, {'l', free[3]}, {'a', a}, {'b', b}};
              acc += r(val[f1[0]], val[f1[1]], val[f1[2]], val[f1[3]]) *
                     r(val[f2[0]], val[f2[1]], val[f2[2]], val[f2[3]]);
            }
          }
          raw(free[0], free[1], free[2], free[3]) = acc;
        }
      }
    }
  }
  return antisymmetrize(raw, axes({0, 1, 2, 3}));
}

// Concatenated values on the samples, scaled so the first nonzero entry is positive.
std::vector<Rational> signature(const std::vector<Tensor>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.insert(out.end(), v.entries().begin(), v.entries().end());
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : out) y = -y;
    }
    break;
  }
  return out;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

TEST_CASE("pattern counts") {
  CHECK(enumerate_patterns(2).size() == 5);
  CHECK(enumerate_patterns(3).size() == 35);
  CHECK_THROWS_AS(enumerate_patterns(1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_patterns(4), std::invalid_argument);
  CHECK(enumerate_patterns(2) == enumerate_patterns(2));
}

TEST_CASE("degree-2 count agrees with brute-force enumeration and evaluation dedup") {
  const int n = 5;
  const std::vector<Tensor> samples{pair_symmetric(n, 1), pair_symmetric(n, 2), pair_symmetric(n, 3)};
  std::set<std::vector<Rational>> classes;
  // every choice of 4 free slots among 8 and every matching of the other 4
  for (int mask = 0; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 4) continue;
    std::vector<int> internal;
    std::string labels(8, '?');
    const char free_names[] = {'i', 'j', 'k', 'l'};
    int next_free = 0;
    for (int s = 0; s < 8; ++s) {
      if (mask >> s & 1) {
        labels[static_cast<std::size_t>(s)] = free_names[next_free++];
      } else {
        internal.push_back(s);
      }
    }
    const std::array<std::array<int, 4>, 3> matchings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& m : matchings) {
      std::string l = labels;
      l[static_cast<std::size_t>(internal[static_cast<std::size_t>(m[0])])] = 'a';
      l[static_cast<std::size_t>(internal[static_cast<std::size_t>(m[1])])] = 'a';
      l[static_cast<std::size_t>(internal[static_cast<std::size_t>(m[2])])] = 'b';
      l[static_cast<std::size_t>(internal[static_cast<std::size_t>(m[3])])] = 'b';
      std::vector<Tensor> values;
      for (const auto& r : samples) values.push_back(brute_degree2(l.substr(0, 4), l.substr(4, 4), r));
      const auto sig = signature(values);
      if (!all_zero(sig)) classes.insert(sig);
    }
  }
  const auto patterns = enumerate_patterns(2);
  CHECK(classes.size() == patterns.size());
  // and each enumerated pattern hits one of those classes
  for (const auto& p : patterns) {
    std::vector<Tensor> values;
    for (const auto& r : samples) values.push_back(antisymmetrize(contract_pattern(p, r), axes({0, 1, 2, 3})));
    CHECK(classes.count(signature(values)) == 1);
  }
}

TEST_CASE("the known identities' patterns are enumerated") {
  const auto p2 = enumerate_patterns(2);
  const SignedPattern quad = canonicalize(pattern_from_labels({"ijab", "klba"}).pattern);
  CHECK(quad.sign != 0);
  CHECK(std::find(p2.begin(), p2.end(), quad.pattern) != p2.end());
  const auto p3 = enumerate_patterns(3);
  for (const auto& t : kCubicTerms) {
    const SignedPattern c = canonicalize(pattern_from_labels(t.factors).pattern);
    CHECK(c.sign != 0);
    CHECK(std::find(p3.begin(), p3.end(), c.pattern) != p3.end());
  }
}

TEST_CASE("canonicalization is idempotent and slot maps are perfect") {
  for (int p : {2, 3}) {
    for (const auto& pat : enumerate_patterns(p)) {
      const SignedPattern c = canonicalize(pat);
      CHECK(c.pattern == pat);
      CHECK(c.sign == 1);
      CHECK(pat.free_slots().size() == 4);
      for (std::size_t s = 0; s < pat.partner.size(); ++s) {
        const int t = pat.partner[s];
        if (t < 0) continue;
        CHECK(t != static_cast<int>(s));
        CHECK(pat.partner[static_cast<std::size_t>(t)] == static_cast<int>(s));
      }
    }
  }
}

TEST_CASE("canonicalize preserves values up to its sign") {
  const CurvTensor r = random_curvature(5, 4);
  const SignedPattern raw = pattern_from_labels({"kbcd", "iajb", "ldac"});
  const SignedPattern c = canonicalize(raw.pattern);
  CHECK(evaluate_pattern(raw.pattern, r) == Rational(c.sign) * evaluate_pattern(c.pattern, r));
}

TEST_CASE("evaluate_pattern") {
  const auto patterns = enumerate_patterns(2);
  for (const auto& p : patterns) CHECK(evaluate_pattern(p, CurvTensor(Tensor(4, 4))).is_zero());

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const CurvTensor r = random_curvature(4, seed);
    CHECK(evaluate_combination(patterns, pattern_vector(patterns, kQuadTerms), r) == pontryagin_quadratic(r));
    const auto p3 = enumerate_patterns(3);
    CHECK(evaluate_combination(p3, pattern_vector(p3, kCubicTerms), r) == cubic_identity(r));
  }

  // degree-2 patterns are quadratic forms: check the polarization is bilinear
  const CurvTensor r1 = random_curvature(5, 1);
  const CurvTensor r2 = random_curvature(5, 2);
  const CurvTensor r3 = random_curvature(5, 3);
  auto sum = [](const CurvTensor& a, const CurvTensor& b) { return CurvTensor(a.tensor() + b.tensor()); };
  for (const auto& p : patterns) {
    auto pol = [&](const CurvTensor& a, const CurvTensor& b) {
      return evaluate_pattern(p, sum(a, b)) - evaluate_pattern(p, a) - evaluate_pattern(p, b);
    };
    CHECK(pol(sum(r1, r3), r2) == pol(r1, r2) + pol(r3, r2));
    CHECK(pol(r1, r2) == pol(r2, r1));
    CHECK(evaluate_pattern(p, CurvTensor(Rational(3) * r1.tensor())) == Rational(9) * evaluate_pattern(p, r1));
  }
}

TEST_CASE("integer and rational evaluation agree") {
  const auto p3 = enumerate_patterns(3);
  const auto ri = random_integer_curvature(4, 5, 3);
  Tensor rq(4, 4);
  for (std::size_t f = 0; f < rq.size(); ++f) rq[f] = Rational(static_cast<long>(ri[f].value()));
  const CurvTensor r(rq);
  for (std::size_t k = 0; k < p3.size(); k += 7) {
    const auto ints = alternating_components(p3[k], ri);
    const Tensor v = evaluate_pattern(p3[k], r);
    REQUIRE(ints.size() == 1);
    // alternating components carry the 4! normalization
    CHECK(Rational(static_cast<long>(ints[0].value())) == 24 * v(0, 1, 2, 3));
  }
}

namespace {

void check_basis_properties(const MinedIdentityBasis& b, int fresh) {
  CHECK(b.stabilized);
  CHECK(b.nested);
  CHECK(b.failures.empty());
  // N2 is inside N1
  for (const auto& v : b.universal_identities) CHECK(classify(b, v).image);
  // soundness on fresh image samples never used by the miner
  for (int t = 0; t < fresh; ++t) {
    const CurvTensor r = rho(random_sym3(b.n, derive_seed(0xf00d, static_cast<std::uint64_t>(t)), 10));
    for (const auto& v : b.image_identities) CHECK(evaluate_combination(b.patterns, v, r).is_zero());
  }
  // quotient representatives are nonzero on some generic sample
  for (const auto& v : b.quotient) {
    bool hit = false;
    for (std::uint64_t s = 1; s <= 5 && !hit; ++s) {
      hit = !evaluate_combination(b.patterns, v, random_curvature(b.n, s)).is_zero();
    }
    CHECK(hit);
  }
}

}  // namespace

TEST_CASE("mining degree 2 at n=4 recovers the quadratic identity") {
  MinerConfig c;
  c.n = 4;
  c.degree = 2;
  const MinedIdentityBasis b = mine(c);
  CHECK(b.quotient_dim() >= 1);
  const IdentityMembership m = classify(b, pattern_vector(b.patterns, kQuadTerms));
  CHECK(m.image);
  CHECK_FALSE(m.universal);
  CHECK(m.quotient());
  check_basis_properties(b, 50);

  const MinedIdentityBasis again = mine(c);
  CHECK(again.image_identities == b.image_identities);
  CHECK(again.universal_identities == b.universal_identities);
  CHECK(again.quotient == b.quotient);
}

TEST_CASE("mining degree 3 at n=4 recovers the cubic identity") {
  MinerConfig c;
  c.n = 4;
  c.degree = 3;
  const MinedIdentityBasis b = mine(c);
  CHECK(b.quotient_dim() >= 1);
  const IdentityMembership m = classify(b, pattern_vector(b.patterns, kCubicTerms));
  CHECK(m.quotient());
  check_basis_properties(b, 50);
}

TEST_CASE("mining degree 3 at n=5 excludes the cubic identity") {
  MinerConfig c;
  c.n = 5;
  c.degree = 3;
  const MinedIdentityBasis b = mine(c);
  const IdentityMembership m = classify(b, pattern_vector(b.patterns, kCubicTerms));
  CHECK_FALSE(m.image);
  check_basis_properties(b, 10);
}

TEST_CASE("miner rejects unsupported configurations") {
  MinerConfig c;
  c.n = 3;
  CHECK_THROWS_AS(mine(c), std::invalid_argument);
  c.n = 4;
  c.degree = 4;
  CHECK_THROWS_AS(mine(c), std::invalid_argument);
}
