#include "heptaspec/closed_forms.hpp"

#include <stdexcept>

namespace heptaspec {

namespace {

constexpr Radicand kR3 = Radicand::Three;

void require_n(int n) {
  if (n < 1) throw std::domain_error("closed forms are defined for n >= 1");
}

Rational cubic(int n) {
  const Integer k = n;
  return Rational(108 * k * k * k + 66 * k * k + 7 * k + 4);
}

// (√2 ± √6)^{4n} = (8 ± 4√3)^{2n}, which lives in Q(√3).
QuadExt root_pair_power(int n, int sign) {
  return quad_pow(QuadExt(kR3, 8, 4 * sign), 2 * static_cast<std::uint64_t>(n));
}

// The common numerator (3+2√3)(√2+√6)^{4n} + (3-2√3)(√2-√6)^{4n}.
Rational det_numerator(int n) {
  const QuadExt plus = QuadExt(kR3, 3, 2) * root_pair_power(n, +1);
  const QuadExt minus = QuadExt(kR3, 3, -2) * root_pair_power(n, -1);
  return conjugate_pair_sum(plus, minus);
}

// A value of the form √2 * q with q in Q(√3). The odd branch of m_s is a sum
// of products of two such values, and √2 * √2 = 2 brings it back into Q(√3).
struct Sqrt2Multiple {
  QuadExt q;
  QuadExt operator*(const Sqrt2Multiple& o) const { return QuadExt(2) * q * o.q; }
};

}  // namespace

const std::vector<Quantity>& all_quantities() {
  static const std::vector<Quantity> all{
      Quantity::A5n,        Quantity::A5nMinus1, Quantity::SumInvAlpha,    Quantity::MSequence,
      Quantity::DetLS,      Quantity::B4n,       Quantity::SumInvBeta,     Quantity::KfVertexFactor,
      Quantity::KfTwentyFactor, Quantity::Tau};
  return all;
}

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::A5n: return "a_5n";
    case Quantity::A5nMinus1: return "a_5n-1";
    case Quantity::SumInvAlpha: return "sum_inv_alpha";
    case Quantity::MSequence: return "m_4n";
    case Quantity::DetLS: return "det_LS";
    case Quantity::B4n: return "b_4n";
    case Quantity::SumInvBeta: return "sum_inv_beta";
    case Quantity::KfVertexFactor: return "kf_9n+2";
    case Quantity::KfTwentyFactor: return "kf_20n+2";
    case Quantity::Tau: return "tau";
  }
  return "?";
}

Rational a5n_closed(int n) {
  require_n(n);
  return Rational(9 * n + 2) * pow2(n - 1);
}

Rational a5n_minus1_closed(int n) {
  require_n(n);
  return cubic(n) * pow2(n - 3);
}

Rational sum_inv_alpha_closed(int n) {
  require_n(n);
  return cubic(n) / Rational(36 * n + 8);
}

Rational m_closed(int s) {
  if (s < 0) throw std::domain_error("m_s requires s >= 0");
  if (s == 0) return 1;
  const QuadExt unit(kR3, 2, 1);  // ((√2+√6)/2)^2 = 2+√3
  const auto k = static_cast<std::uint64_t>(s / 2);
  const QuadExt up = quad_pow(unit, k);
  const QuadExt down = quad_pow(unit.conjugate(), k);
  if (s % 2 == 0) {
    const QuadExt c(kR3, make_rational(1, 2), make_rational(1, 2));  // (1+√3)/2
    return conjugate_pair_sum(c * up, c.conjugate() * down);
  }
  // (√6+3√2)/4 = √2 (3+√3)/4 and (√2+√6)/2 = √2 (1+√3)/2; the minus branch is the conjugate.
  const Sqrt2Multiple coeff{QuadExt(kR3, make_rational(3, 4), make_rational(1, 4))};
  const Sqrt2Multiple base{QuadExt(kR3, make_rational(1, 2), make_rational(1, 2))};
  const Sqrt2Multiple coeff_bar{coeff.q.conjugate()};
  const Sqrt2Multiple base_bar{base.q.conjugate()};
  return conjugate_pair_sum((coeff * base) * up, (coeff_bar * base_bar) * down);
}

Rational m_recurrence(int s) {
  if (s < 0) throw std::domain_error("m_s requires s >= 0");
  Rational before = 1;  // m_0
  Rational current = 3;  // m_1
  if (s == 0) return before;
  for (int k = 2; k <= s; ++k) {
    Rational next = Rational(k % 2 == 0 ? 2 : 3) * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

Rational det_ls_closed(int n) {
  require_n(n);
  return det_numerator(n) / pow2(4 * n + 1);
}

Rational b4n_closed(int n) {
  require_n(n);
  const auto four_n = 4 * static_cast<std::uint64_t>(n);
  const QuadExt bracket = QuadExt(kR3, 120 * n + 6, 60 * n + 5) +
                          QuadExt(kR3, 6, 7) * quad_pow(QuadExt(kR3, 2, -1), four_n);
  const QuadExt bracket_bar = QuadExt(kR3, 120 * n + 6, -(60 * n + 5)) +
                              QuadExt(kR3, 6, -7) * quad_pow(QuadExt(kR3, 2, 1), four_n);
  const Rational numerator =
      conjugate_pair_sum(bracket * root_pair_power(n, +1), bracket_bar * root_pair_power(n, -1));
  return numerator / (Rational(24) * pow2(4 * n));
}

Rational sum_inv_beta_closed(int n) { return b4n_closed(n) / det_ls_closed(n); }

Rational kf_closed(int n) {
  return Rational(9 * n + 2) * (sum_inv_alpha_closed(n) + sum_inv_beta_closed(n));
}

Rational kf_closed_twenty(int n) {
  return Rational(20 * n + 2) * (sum_inv_alpha_closed(n) + sum_inv_beta_closed(n));
}

Integer tau_closed(int n) {
  require_n(n);
  const Rational tau = det_numerator(n) / pow2(3 * n + 2);
  if (!is_integer(tau) || tau <= 0)
    throw std::logic_error("spanning-tree closed form is not a positive integer at n = " +
                           std::to_string(n));
  return tau.get_num();
}

std::vector<ClosedFormValue> closed_form_values(int n) {
  require_n(n);
  return {
      {Quantity::A5n, a5n_closed(n), "(9n+2)*2^(n-1)"},
      {Quantity::A5nMinus1, a5n_minus1_closed(n), "(108n^3+66n^2+7n+4)*2^(n-3)"},
      {Quantity::SumInvAlpha, sum_inv_alpha_closed(n), "(108n^3+66n^2+7n+4)/(36n+8)"},
      {Quantity::MSequence, m_closed(4 * n), "m_s closed form at s=4n"},
      {Quantity::DetLS, det_ls_closed(n),
       "[(3+2sqrt3)(sqrt2+sqrt6)^(4n)+(3-2sqrt3)(sqrt2-sqrt6)^(4n)]/2^(4n+1)"},
      {Quantity::B4n, b4n_closed(n), "b_4n closed form over 24*2^(4n)"},
      {Quantity::SumInvBeta, sum_inv_beta_closed(n), "b_4n/det_LS"},
      {Quantity::KfVertexFactor, kf_closed(n), "(9n+2)*(sum_inv_alpha+sum_inv_beta)"},
      {Quantity::KfTwentyFactor, kf_closed_twenty(n), "(20n+2)*(sum_inv_alpha+sum_inv_beta)"},
      {Quantity::Tau, Rational(tau_closed(n)),
       "[(3+2sqrt3)(sqrt2+sqrt6)^(4n)+(3-2sqrt3)(sqrt2-sqrt6)^(4n)]/2^(3n+2)"},
  };
}

}  // namespace heptaspec
