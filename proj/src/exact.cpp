#include "heptaspec/exact.hpp"

#include <cmath>
#include <sstream>

namespace heptaspec {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? make_rational(1, p) : Rational(p);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_decimal(const Rational& q, unsigned places) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const Rational scaled = q * scale;
  const Integer num = abs(scaled.get_num());
  const Integer den = scaled.get_den();

  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const Integer twice = 2 * rem;
  if (twice > den || (twice == den && mpz_odd_p(quot.get_mpz_t()))) ++quot;

  std::string digits = quot.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (scaled < 0 && quot != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - places);
  }
  return out;
}

std::string to_exact_string(const Rational& q) { return q.get_str(); }

QuadExt::QuadExt(Radicand d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d != Radicand::Two && d != Radicand::Three) throw ArithmeticError("radicand must be 2 or 3");
}

Radicand QuadExt::common_radicand(const QuadExt& o) const {
  if (b_ == 0) return o.d_;
  if (o.b_ == 0 || o.d_ == d_) return d_;
  throw ArithmeticError("mixed quadratic fields Q(sqrt 2) and Q(sqrt 3)");
}

Rational QuadExt::norm() const {
  return a_ * a_ - static_cast<int>(d_) * b_ * b_;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  const Rational nrm = norm();
  return {d_, a_ / nrm, -b_ / nrm};
}

double QuadExt::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(static_cast<int>(d_)));
}

std::string QuadExt::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::ostringstream os;
  if (a_ == 0)
    os << (b_ < 0 ? "-" : "");
  else
    os << a_.get_str() << (b_ < 0 ? " - " : " + ");
  os << Rational(abs(b_)).get_str() << "*sqrt("
     << static_cast<int>(d_) << ")";
  return os.str();
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  d_ = common_radicand(o);
  const int d = static_cast<int>(d_);
  Rational a = a_ * o.a_ + d * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  common_radicand(o);
  return *this *= o.inverse();
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
}

QuadExt quad_pow(const QuadExt& x, std::uint64_t k) {
  QuadExt result(x.radicand(), 1);
  QuadExt base = x;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Rational conjugate_pair_sum(const QuadExt& p, const QuadExt& q) {
  if (q != p.conjugate()) {
    throw ArithmeticError("conjugate_pair_sum: " + q.to_string() + " is not the conjugate of " +
                          p.to_string());
  }
  const QuadExt sum = p + q;
  if (!sum.is_rational()) throw ArithmeticError("irrational part did not cancel");
  return sum.rational_part();
}

}  // namespace heptaspec
