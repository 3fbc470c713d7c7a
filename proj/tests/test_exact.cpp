#include <random>

#include "doctest.h"
#include "heptaspec/exact.hpp"

using namespace heptaspec;

namespace {

constexpr Radicand kR3 = Radicand::Three;

// Random element of Q(sqrt d) with small numerators/denominators.
QuadExt random_quad(std::mt19937& rng, Radicand d) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  return {d, make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("quad_pow examples") {
  const QuadExt x(kR3, 2, 1);
  CHECK(quad_pow(x, 2) == QuadExt(kR3, 7, 4));
  CHECK(quad_pow(x, 0) == QuadExt(1));
  CHECK(quad_pow(x, 4) == QuadExt(kR3, 97, 56));
}

TEST_CASE("quad_pow equals repeated multiplication") {
  std::mt19937 rng(7);
  for (auto d : {Radicand::Two, Radicand::Three}) {
    for (int trial = 0; trial < 10; ++trial) {
      const QuadExt x = random_quad(rng, d);
      QuadExt acc(d, 1);
      for (std::uint64_t k = 0; k <= 16; ++k) {
        CHECK(quad_pow(x, k) == acc);
        acc *= x;
      }
    }
  }
}

TEST_CASE("conjugate_pair_sum") {
  CHECK(conjugate_pair_sum(QuadExt(kR3, 720, 416), QuadExt(kR3, 720, -416)) == 1440);
  CHECK(conjugate_pair_sum(QuadExt::sqrt(kR3), -QuadExt::sqrt(kR3)) == 0);
  CHECK(conjugate_pair_sum(QuadExt(5), QuadExt(5)) == 10);
  CHECK_THROWS_AS(conjugate_pair_sum(QuadExt(kR3, 1, 1), QuadExt(kR3, 1, 1)), ArithmeticError);
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(2024);
  for (auto d : {Radicand::Two, Radicand::Three}) {
    for (int trial = 0; trial < 200; ++trial) {
      const QuadExt x = random_quad(rng, d), y = random_quad(rng, d), z = random_quad(rng, d);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
      if (!y.is_zero()) CHECK((x / y) * y == x);
      // conjugation is a ring homomorphism
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
      CHECK(x.norm() == (x * x.conjugate()).rational_part());
    }
  }
}

TEST_CASE("mixing irrational elements of different fields throws") {
  const QuadExt r2 = QuadExt::sqrt(Radicand::Two);
  const QuadExt r3 = QuadExt::sqrt(kR3);
  CHECK_THROWS_AS(r2 + r3, ArithmeticError);
  CHECK_THROWS_AS(r2 * r3, ArithmeticError);
  // rationals combine with either field
  CHECK(r2 * QuadExt(3) == QuadExt(Radicand::Two, 0, 3));
  CHECK(r3 * r3 == QuadExt(3));
  CHECK_THROWS_AS(QuadExt().inverse(), ArithmeticError);
}

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK(make_rational(0, 5).get_den() == 1);
  CHECK_THROWS_AS(make_rational(1, 0), ArithmeticError);
  CHECK(pow2(-3) == make_rational(1, 8));
  CHECK(pow2(10) == 1024);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(to_decimal(make_rational(317, 4), 2) == "79.25");
  CHECK(to_decimal(make_rational(1, 8), 2) == "0.12");
  CHECK(to_decimal(make_rational(3, 8), 2) == "0.38");
  CHECK(to_decimal(make_rational(-1, 3), 3) == "-0.333");
  CHECK(to_decimal(make_rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(Rational(84), 2) == "84.00");
  CHECK(to_decimal(make_rational(7, 2), 0) == "4");
  CHECK(to_decimal(make_rational(5, 2), 0) == "2");
}

TEST_CASE("exact string rendering") {
  CHECK(QuadExt(kR3, 7, 4).to_string() == "7 + 4*sqrt(3)");
  CHECK(QuadExt(Radicand::Two, 0, -1).to_string() == "-1*sqrt(2)");
  CHECK(QuadExt(kR3, make_rational(1, 2), make_rational(-3, 2)).to_string() == "1/2 - 3/2*sqrt(3)");
  CHECK(QuadExt(5).to_string() == "5");
}
