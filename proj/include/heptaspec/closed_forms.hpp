#pragma once

#include <string>
#include <vector>

#include "heptaspec/exact.hpp"

namespace heptaspec {

// Published closed forms for H_n, evaluated exactly and verbatim (including
// the suspected misprints). Whether they hold is decided by the oracles.

/// Quantities that have a published closed form.
enum class Quantity {
  A5n,             // e_{5n}(L_A)
  A5nMinus1,       // e_{5n-1}(L_A)
  SumInvAlpha,     // sum of 1/alpha over nonzero eigenvalues of L_A
  MSequence,       // m_{4n}, leading principal minor of L_S
  DetLS,           // det L_S
  B4n,             // e_{4n}(L_S)
  SumInvBeta,      // sum of 1/beta over eigenvalues of L_S
  KfVertexFactor,  // Kf with the (9n+2) prefactor
  KfTwentyFactor,  // Kf with the (20n+2) prefactor
  Tau,             // spanning-tree count
};

const std::vector<Quantity>& all_quantities();
std::string quantity_name(Quantity q);

struct ClosedFormValue {
  Quantity quantity;
  Rational value;
  std::string formula;  // the evaluated expression, as text
};

/// (9n+2) * 2^(n-1)
Rational a5n_closed(int n);
/// (108n^3 + 66n^2 + 7n + 4) * 2^(n-3); not an integer at n = 1.
Rational a5n_minus1_closed(int n);
/// (108n^3 + 66n^2 + 7n + 4) / (36n + 8)
Rational sum_inv_alpha_closed(int n);

/// m_s from the two-branch closed form (even / odd s). m_0 = 1.
Rational m_closed(int s);
/// m_s from m_s = 2 m_{s-1} - m_{s-2} (s even), 3 m_{s-1} - m_{s-2} (s odd),
/// seeded with m_0 = 1, m_1 = 3.
Rational m_recurrence(int s);

/// [(3+2√3)(√2+√6)^{4n} + (3-2√3)(√2-√6)^{4n}] / 2^{4n+1}
Rational det_ls_closed(int n);
/// Closed form for e_{4n}(L_S) with denominator 24 * 2^{4n}.
Rational b4n_closed(int n);
/// b4n_closed / det_ls_closed
Rational sum_inv_beta_closed(int n);

/// (9n+2) * (sum_inv_alpha_closed + sum_inv_beta_closed)
Rational kf_closed(int n);
/// Same bracket with the (20n+2) prefactor.
Rational kf_closed_twenty(int n);

/// Same numerator as det_ls_closed over 2^{3n+2}; checked to be a positive integer.
Integer tau_closed(int n);

/// Every quantity's published value at n.
std::vector<ClosedFormValue> closed_form_values(int n);

}  // namespace heptaspec
