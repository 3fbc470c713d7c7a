#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heptaspec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an exact-arithmetic precondition is violated
/// (zero denominator, mixed radicands, non-conjugate pair, ...).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Builds num/den in canonical form. Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// 2^k as an exact rational; k may be negative.
Rational pow2(long k);

bool is_integer(const Rational& q);

/// Exact decimal rendering, rounded half-to-even at `places` digits.
std::string to_decimal(const Rational& q, unsigned places);

/// Rendering that is "p" for integers and "p/q" otherwise.
std::string to_exact_string(const Rational& q);

/// Radicand of a real quadratic field.
enum class Radicand : int { Two = 2, Three = 3 };

/// Element a + b*sqrt(d) of Q(sqrt d), d in {2, 3}.
///
/// An element with b == 0 is rational and combines with elements of either
/// field; mixing two genuinely irrational elements of different fields
/// throws ArithmeticError.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Radicand d, Rational a, Rational b = 0);
  // NOLINTNEXTLINE(google-explicit-constructor)
  QuadExt(const Rational& a) : a_(a) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}

  static QuadExt sqrt(Radicand d) { return {d, 0, 1}; }

  Radicand radicand() const { return d_; }
  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt conjugate() const { return {d_, a_, -b_}; }
  /// Field norm a^2 - d*b^2.
  Rational norm() const;
  QuadExt inverse() const;

  double to_double() const;
  /// "a + b*sqrt(d)"; rational elements render as "a".
  std::string to_string() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  QuadExt operator-() const { return {d_, -a_, -b_}; }

  friend bool operator==(const QuadExt& x, const QuadExt& y);
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  Radicand common_radicand(const QuadExt& o) const;

  Radicand d_ = Radicand::Two;
  Rational a_ = 0;
  Rational b_ = 0;
};

/// x^k by binary exponentiation.
QuadExt quad_pow(const QuadExt& x, std::uint64_t k);

/// p + q for a conjugate pair; throws ArithmeticError unless q == conj(p).
Rational conjugate_pair_sum(const QuadExt& p, const QuadExt& q);

}  // namespace heptaspec
