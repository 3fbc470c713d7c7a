#include <random>
#include <stdexcept>

#include "doctest.h"
#include "heptaspec/charpoly.hpp"
#include "heptaspec/chain_graph.hpp"
#include "heptaspec/symmetry.hpp"

using namespace heptaspec;

namespace {

DecomposedPair pair_for(int n) { return decompose(extract_blocks(build_chain(n))); }

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("L_S at n = 1") {
  const auto pair = pair_for(1);
  const CharPoly p = charpoly(pair.ls);
  CHECK(p.to_string() == "x^5 - 13x^4 + 63x^3 - 139x^2 + 135x - 45");
  CHECK(p.minor_sum(5) == 45);
  CHECK(p.minor_sum(4) == 135);
  CHECK(determinant(pair.ls) == 45);
}

TEST_CASE("1x1 matrix") {
  const IntMatrix m(1, 1, Integer(7));
  const CharPoly p = charpoly(m);
  REQUIRE(p.degree() == 1);
  CHECK(p.coefficients[0] == 1);
  CHECK(p.coefficients[1] == -7);
}

TEST_CASE("coefficient_a examples") {
  const auto pair = pair_for(1);
  CHECK(coefficient_a(pair, 5) == 11);
  CHECK(coefficient_a(pair, 6) == 0);
  CHECK(coefficient_a(pair, 0) == 1);
  CHECK(coefficient_a(pair_for(2), 10) == 40);
}

TEST_CASE("det_tridiagonal examples") {
  const std::vector<Rational> d5{3, 2, 3, 2, 3};
  const std::vector<Rational> o4(4, Rational(-1));
  CHECK(det_tridiagonal(d5, o4) == 45);
  CHECK(det_tridiagonal(std::vector<Rational>{3}, std::vector<Rational>{}) == 3);
  const std::vector<Rational> d2{4, 5};
  const std::vector<Rational> o1{1};
  CHECK(det_tridiagonal(d2, o1) == 19);
}

TEST_CASE("leading principal minors of L_S at n = 1") {
  const auto pair = pair_for(1);
  const std::vector<Integer> expect{3, 5, 12, 19, 45};
  CHECK(leading_principal_minors(pair.ls) == expect);
  CHECK(leading_principal_minors_fast(pair.ls) == expect);
}

TEST_CASE("minor_case_formula examples and range errors") {
  CHECK(minor_case_formula({1, 1, std::nullopt}) == Rational(1));
  CHECK(minor_case_formula({1, 2, std::nullopt}) == Rational(2));
  CHECK(minor_case_formula({2, 1, 2}) == Rational(6));
  CHECK_FALSE(minor_case_formula({1, 2, 6}).has_value());
  CHECK_THROWS_AS(minor_case_formula({1, 0, std::nullopt}), std::out_of_range);
  CHECK_THROWS_AS(minor_case_formula({1, 7, std::nullopt}), std::out_of_range);
  CHECK_THROWS_AS(minor_case_formula({1, 3, 3}), std::out_of_range);
}

TEST_CASE("minor audit at n = 1") {
  const MinorAudit a = audit_minor_formulas(pair_for(1));
  CHECK(a.matches + a.mismatches + a.uncovered == a.entries.size());
  CHECK(a.uncovered == 1);
}

TEST_CASE("Berkowitz agrees with brute-force minor sums on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const IntMatrix m = random_int_matrix(rng, n);
    const auto raw = detail::berkowitz(m);
    for (std::size_t k = 0; k <= n; ++k) {
      Integer e = raw[k];
      if (k % 2 == 1) e = -e;
      CHECK(e == principal_minor_sum(m, k));
    }
    CHECK(charpoly(m).minor_sum(n) == determinant(m));
  }
}

TEST_CASE("det_tridiagonal matches the general determinant") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<Rational> diag(n), off(n - 1);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i] = d(rng);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = off[i] = d(rng);
    CHECK(det_tridiagonal(diag, off) == determinant(m));
  }
}

TEST_CASE("charpoly of L is the product of the halves, with integer coefficients") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto g = build_chain(n);
    const auto pair = pair_for(n);
    const CharPoly whole = charpoly(laplacian(g));
    CHECK(whole == charpoly(pair.la) * charpoly(pair.ls));
    for (const Rational& c : whole.coefficients) CHECK(is_integer(c));
    for (const Rational& c : charpoly(pair.la).coefficients) CHECK(is_integer(c));
  }
}
