#include "hol/cartan2d.hpp"
#include "hol/curvature.hpp"
#include "hol/hessian_map.hpp"
#include "support.hpp"

using namespace hol;
using hol::test::q;

namespace {

TwoDSym3 random_two(std::uint64_t seed) {
  return {CounterRng(seed, 0).uniform_rational(10), CounterRng(seed, 1).uniform_rational(10),
          CounterRng(seed, 2).uniform_rational(10), CounterRng(seed, 3).uniform_rational(10)};
}

Rational relation_value(const TwoDSym3& t) {
  return Rational(4, 9) * (3 * t.a * t.c + 3 * t.b * t.d - t.b * t.b - t.c * t.c);
}

SymbolParameters random_params(std::uint64_t seed) {
  return {CounterRng(seed, 0).uniform_rational(10), CounterRng(seed, 1).uniform_rational(10),
          CounterRng(seed, 2).uniform_rational(10)};
}

}  // namespace

TEST_CASE("TwoDSym3 corresponds bijectively to n=2 S^3 tensors") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TwoDSym3 t = random_two(seed);
    const Sym3Tensor a = to_sym3(t);
    CHECK(from_sym3(a) == t);
    CHECK(to_sym3(from_sym3(a)) == a);
    CHECK(monomial_coefficient(a, 0, 0, 1) == t.b);
    CHECK(monomial_coefficient(a, 0, 1, 1) == t.c);
  }
  CHECK_THROWS_AS(from_sym3(Sym3Tensor(3)), std::invalid_argument);
}

TEST_CASE("scalar relation examples") {
  CHECK(scalar_relation_residual({0, 0, 0, 0}, 0) == 0);
  CHECK(scalar_relation_residual({1, 0, 1, 0}, q(8, 9)) == 0);
  CHECK(scalar_relation_residual({1, 0, 1, 0}, q(4, 3)) == q(4, 9));
}

TEST_CASE("scalar relation against the curvature of rho at n=2") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TwoDSym3 t = random_two(seed);
    const Rational scal = scalar_curvature(rho(to_sym3(t)));
    CHECK(relation_value(t) == kScalarRelationFactor * scal);
    CHECK(scalar_relation_residual(t, kScalarRelationFactor * scal) == 0);
  }
  CHECK(kScalarRelationFactor == -2);
}

TEST_CASE("residual vanishes exactly when the reconciled contracted condition does") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TwoDSym3 t = random_two(seed);
    const Sym3Tensor a = to_sym3(t);
    const Rational s_on = relation_value(t);
    CHECK(contracted_condition(a, s_on, -1, 1) == 0);
    const Rational s_off = s_on + CounterRng(seed, 9).uniform_rational(10) + 11;
    CHECK(scalar_relation_residual(t, s_off) != 0);
    CHECK(contracted_condition(a, s_off, -1, 1) != 0);
  }
  const auto choices = consistent_sign_choices(50, 1);
  CHECK(choices == std::vector<std::pair<int, int>>{{-1, 1}});
}

TEST_CASE("solve_a") {
  CHECK(solve_a(0, 1, 0, 0) == q(1, 3));
  CHECK(solve_a(3, 1, 1, 0) == q(1, 3));
  CHECK_THROWS_AS(solve_a(1, 0, 1, 1), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TwoDSym3 t = random_two(seed);
    if (t.c == 0) continue;
    const Rational s = CounterRng(seed, 7).uniform_rational(10);
    t.a = solve_a(t.b, t.c, t.d, s);
    CHECK(scalar_relation_residual(t, s) == 0);
  }
}

TEST_CASE("symbol matrices") {
  const SymbolParameters zero{0, 0, 0};
  const RationalMatrix s = symbol_matrix(zero);
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 6);
  const RationalMatrix expected{{1, 0, 0, 0, 0, 0}, {0, 1, 0, -1, 0, 0}, {0, 0, 3, 0, -1, 0}};
  CHECK(s == expected);
  CHECK(rank(s) == 3);
  const RationalMatrix s1 = prolonged_symbol_matrix(zero);
  CHECK(s1.rows() == 6);
  CHECK(s1.cols() == 9);
  CHECK(rank(s1) == 6);

  const SymbolParameters p{q(2, 3), q(-5), q(7, 2)};
  const RationalMatrix sp = symbol_matrix(p);
  CHECK(sp(0, 3) == q(2, 3));
  CHECK(sp(0, 4) == -5);
  CHECK(sp(0, 5) == q(7, 2));
  CHECK(nullspace(sp).size() == 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(rank(symbol_matrix(random_params(seed))) == 3);
    CHECK(rank(prolonged_symbol_matrix(random_params(seed))) == 6);
  }
}

TEST_CASE("cartan test report") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CartanReport r = cartan_test(random_params(seed));
    CHECK(r.rank_sigma == 3);
    CHECK(r.rank_sigma1 == 6);
    CHECK(r.g01 == 0);
    CHECK(r.g02 == 3);
    CHECK(r.g12 == 3);
    CHECK(r.g02 == 6 - static_cast<int>(r.rank_sigma));
    CHECK(r.g12 == 9 - static_cast<int>(r.rank_sigma1));
    CHECK(r.involutive == (r.g12 == r.g01 + r.g02));
    CHECK(r.involutive);
  }
  // the e^1 block of sigma alone is injective
  const RationalMatrix e1 = symbol_matrix({1, 2, 3}).select_columns({0, 1, 2});
  CHECK(nullspace(e1).empty());
}

TEST_CASE("parameter sweep gives identical reports") {
  const CartanSweep sw = cartan_sweep(100, 1);
  CHECK(sw.reports.size() == 100);
  CHECK(sw.identical);
  CHECK(sw.failures.empty());
  for (const auto& r : sw.reports) CHECK(r.same_ranks(sw.reports.front()));
}

TEST_CASE("column permutation brings the prolonged symbol to echelon form") {
  const auto perm = echelon_column_permutation();
  REQUIRE(perm.has_value());
  CHECK(perm->size() == 9);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RationalMatrix m = prolonged_symbol_matrix(random_params(seed)).select_columns(*perm);
    CHECK(is_row_echelon(m));
  }
  CHECK(is_row_echelon(prolonged_symbol_matrix({0, 0, 0}).select_columns(*perm)));
  CHECK_FALSE(is_row_echelon(RationalMatrix{{0, 1}, {1, 0}}));
}

TEST_CASE("n=2 image rank matches the scalar relation") {
  CHECK(image_rank_census(2, 5, 1, 10).max_rank == 1);
  // any A off the relation's zero set maps to a nonzero curvature
  const TwoDSym3 t{1, 0, 1, 0};
  CHECK(relation_value(t) != 0);
  CHECK_FALSE(rho(to_sym3(t)).tensor().is_zero());
}
