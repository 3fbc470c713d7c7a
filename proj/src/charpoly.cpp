#include "heptaspec/charpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace heptaspec {

namespace detail {

Rational to_rational(const Integer& x) { return Rational(x); }
Rational to_rational(const Rational& x) { return x; }
Rational to_rational(const QuadExt& x) {
  if (!x.is_rational()) throw std::logic_error("irrational charpoly coefficient: " + x.to_string());
  return x.rational_part();
}

}  // namespace detail

Rational CharPoly::minor_sum(std::size_t k) const {
  if (k > degree()) return 0;
  const Rational& c = coefficients[k];
  return (k % 2 == 0) ? c : Rational(-c);
}

CharPoly CharPoly::operator*(const CharPoly& other) const {
  CharPoly out;
  out.coefficients.assign(coefficients.size() + other.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    for (std::size_t j = 0; j < other.coefficients.size(); ++j)
      out.coefficients[i + j] += coefficients[i] * other.coefficients[j];
  return out;
}

std::string CharPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coefficients) arr.push_back(c.get_str());
  return arr.dump();
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  const std::size_t n = degree();
  bool first = true;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational& c = coefficients[k];
    if (c == 0) continue;
    const std::size_t power = n - k;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || power == 0) os << mag.get_str();
    if (power >= 1) os << 'x';
    if (power >= 2) os << '^' << power;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

Rational coefficient_a(const DecomposedPair& pair, std::size_t k) {
  const IntMatrix la = integerized_la(pair);
  if (k > la.rows()) throw std::out_of_range("coefficient_a: order exceeds matrix size");
  const Rational e = charpoly(la).minor_sum(k);
  if (!is_integer(e)) throw std::logic_error("e_k(L_A) is not an integer");
  return e;
}

Rational det_tridiagonal(std::span<const Rational> diag, std::span<const Rational> off) {
  if (diag.empty()) return 1;
  if (off.size() + 1 != diag.size())
    throw std::invalid_argument("det_tridiagonal: off-diagonal must have size N-1");
  Rational before = 1;
  Rational current = diag[0];
  for (std::size_t k = 1; k < diag.size(); ++k) {
    Rational next = diag[k] * current - off[k - 1] * off[k - 1] * before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

std::vector<Integer> leading_principal_minors_fast(const IntMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("leading minors of a non-square matrix");
  IntMatrix m = input;
  const std::size_t n = m.rows();
  std::vector<Integer> out;
  out.reserve(n);
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(m(k, k));
    if (m(k, k) == 0) return leading_principal_minors(input);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return out;
}

std::optional<Rational> minor_case_formula(const MinorQuery& q) {
  const int n = q.n;
  const int last = 5 * n + 1;
  if (n < 1 || q.s < 1 || q.s > last) throw std::out_of_range("minor_case_formula: s out of range");
  if (!q.t) return q.s <= n ? pow2(n - 1) : pow2(n);

  const int s = q.s;
  const int t = *q.t;
  if (t <= s || t > last) throw std::out_of_range("minor_case_formula: need s < t <= 5n+1");
  if (t <= n) return Rational(4 * (t - s) + 2) * pow2(n - 2);
  if (s <= n) return Rational(std::abs(t - 4 * s + 1 - n) + 1) * pow2(n - 1);
  if (s == n + 1 && t <= 5 * n) return Rational(t - 1 - n) * pow2(n - 2);
  if (t == last && s >= n + 2) return Rational(5 * n - s + 1) * pow2(n);
  if (s >= n + 2 && t <= 5 * n) return Rational(t - s) * pow2(n);
  return std::nullopt;
}

MinorAudit audit_minor_formulas(const DecomposedPair& pair, std::size_t sample_size) {
  const IntMatrix la = integerized_la(pair);
  const int n = pair.n;
  const int last = 5 * n + 1;

  std::vector<MinorQuery> queries;
  for (int s = 1; s <= last; ++s) queries.push_back({n, s, std::nullopt});
  if (n <= 4) {
    for (int s = 1; s <= last; ++s)
      for (int t = s + 1; t <= last; ++t) queries.push_back({n, s, t});
  } else {
    std::mt19937_64 rng(0x5eed'0000ULL + static_cast<unsigned>(n));
    std::uniform_int_distribution<int> pick(1, last);
    std::set<std::pair<int, int>> seen;
    while (seen.size() < sample_size) {
      int s = pick(rng), t = pick(rng);
      if (s == t) continue;
      if (s > t) std::swap(s, t);
      if (seen.emplace(s, t).second) queries.push_back({n, s, t});
    }
  }

  MinorAudit audit;
  audit.n = n;
  for (const auto& q : queries) {
    std::vector<std::size_t> drop{static_cast<std::size_t>(q.s - 1)};
    if (q.t) drop.push_back(static_cast<std::size_t>(*q.t - 1));
    MinorAuditEntry entry{q, minor_case_formula(q), determinant(la.delete_rows_cols(drop)), false};
    if (!entry.formula) {
      ++audit.uncovered;
    } else if (*entry.formula == Rational(entry.exact)) {
      entry.match = true;
      ++audit.matches;
    } else {
      ++audit.mismatches;
    }
    audit.entries.push_back(std::move(entry));
  }
  return audit;
}

}  // namespace heptaspec
