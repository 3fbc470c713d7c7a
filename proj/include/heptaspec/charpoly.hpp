#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heptaspec/matrix.hpp"
#include "heptaspec/symmetry.hpp"

namespace heptaspec {

/// Coefficients of det(xI - M), ordered from x^N down to x^0.
struct CharPoly {
  std::vector<Rational> coefficients;

  std::size_t degree() const { return coefficients.size() - 1; }
  /// e_k = (-1)^k * coefficient of x^{N-k}: the sum of all k x k principal minors.
  Rational minor_sum(std::size_t k) const;
  CharPoly operator*(const CharPoly& other) const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;

  /// JSON array of exact coefficient strings, degree-descending.
  std::string to_json() const;
  /// Human-readable "x^5 - 13x^4 + ... - 45".
  std::string to_string() const;
};

namespace detail {

// Berkowitz: division-free, works over any commutative ring.
template <class T>
std::vector<T> berkowitz(const ExactMatrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<T> poly{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column for the leading (r+1)-block, built from the r-block.
    std::vector<T> col(r + 2, T(0));
    col[0] = T(1);
    col[1] = -m(r, r);
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      T dot(0);
      for (std::size_t i = 0; i < r; ++i)
        if (!is_zero(v[i]) && !is_zero(m(r, i))) dot += m(r, i) * v[i];
      col[k] = -dot;
      if (k == r + 1) break;
      std::vector<T> next(r, T(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!is_zero(v[j]) && !is_zero(m(i, j))) next[i] += m(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<T> out(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (!is_zero(col[i - j])) out[i] += col[i - j] * poly[j];
    poly = std::move(out);
  }
  return poly;
}

Rational to_rational(const Integer& x);
Rational to_rational(const Rational& x);
Rational to_rational(const QuadExt& x);  // throws unless rational

}  // namespace detail

/// Sum of all k x k principal minors by direct enumeration. Exponential; oracle use only.
template <class T>
T principal_minor_sum(const ExactMatrix<T>& m, std::size_t k) {
  const std::size_t n = m.rows();
  if (k == 0) return T(1);
  if (k > n) return T(0);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  T total(0);
  while (true) {
    total += determinant(m.principal(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

inline constexpr std::size_t kBruteForceCheckLimit = 7;

/// Exact characteristic polynomial. The coefficients must be rational (true
/// for integer and rational matrices and for symmetric-closed Q(sqrt d) ones
/// such as L_A). For N <= 7 every coefficient is cross-checked against the
/// brute-force principal-minor sums; a disagreement throws std::logic_error.
template <class T>
CharPoly charpoly(const ExactMatrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly of a non-square matrix");
  const std::vector<T> raw = detail::berkowitz(m);
  CharPoly p;
  p.coefficients.reserve(raw.size());
  for (const T& c : raw) p.coefficients.push_back(detail::to_rational(c));
  if (m.rows() <= kBruteForceCheckLimit) {
    for (std::size_t k = 0; k <= m.rows(); ++k)
      if (p.minor_sum(k) != detail::to_rational(principal_minor_sum(m, k)))
        throw std::logic_error("charpoly disagrees with principal-minor enumeration");
  }
  return p;
}

/// e_k(L_A), computed on the integerized similarity. Throws if not integral.
Rational coefficient_a(const DecomposedPair& pair, std::size_t k);

/// Determinant of a tridiagonal matrix by d_k = a_k d_{k-1} - off_{k-1}^2 d_{k-2}.
/// `off` holds the sub/super-diagonal (symmetric), size diag.size() - 1.
Rational det_tridiagonal(std::span<const Rational> diag, std::span<const Rational> off);

/// m_1..m_N, the determinants of the leading s x s submatrices.
template <class T>
std::vector<T> leading_principal_minors(const ExactMatrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("leading minors of a non-square matrix");
  std::vector<T> out;
  out.reserve(m.rows());
  for (std::size_t s = 1; s <= m.rows(); ++s) out.push_back(determinant(m.block(0, 0, s, s)));
  return out;
}

/// Leading principal minors of an integer matrix via a single Bareiss pass
/// (pivot k equals m_k); falls back to direct determinants on a zero pivot.
std::vector<Integer> leading_principal_minors_fast(const IntMatrix& m);

/// Which published deleted-minor formula to evaluate. Indices are 1-based
/// positions in L_A (Bar rows 1..n, Top rows n+1..5n+1).
struct MinorQuery {
  int n;
  int s;
  std::optional<int> t;  // absent: single deletion L_A[s]
};

/// The closed-form value of det L_A[s] or det L_A[s,t] as published, or
/// nullopt when no published case covers the pair (s = n+1, t = 5n+1).
/// Throws std::out_of_range for indices outside 1..5n+1 or t <= s.
std::optional<Rational> minor_case_formula(const MinorQuery& q);

struct MinorAuditEntry {
  MinorQuery query;
  std::optional<Rational> formula;
  Integer exact;
  bool match;
};

struct MinorAudit {
  int n = 0;
  std::vector<MinorAuditEntry> entries;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t uncovered = 0;
};

/// Compares minor_case_formula against exact deleted-minor determinants of
/// the integerized L_A. Full index range when n <= 4, otherwise
/// `sample_size` pairs drawn with a fixed seed plus every single deletion.
MinorAudit audit_minor_formulas(const DecomposedPair& pair, std::size_t sample_size = 200);

}  // namespace heptaspec
