#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "heptaspec/exact.hpp"

namespace heptaspec {

// Scalar helpers shared by the exact domains.

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

inline std::string scalar_string(const Integer& x) { return x.get_str(); }
inline std::string scalar_string(const Rational& x) { return x.get_str(); }
inline std::string scalar_string(const QuadExt& x) { return x.to_string(); }

inline double scalar_double(const Integer& x) { return x.get_d(); }
inline double scalar_double(const Rational& x) { return x.get_d(); }
inline double scalar_double(const QuadExt& x) { return x.to_double(); }

/// True for the exact fields (division always exact); Integer is a ring only.
template <class T>
inline constexpr bool is_field_v = !std::is_same_v<T, Integer>;

/// Dense row-major matrix over an exact scalar domain.
template <class T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Rows/columns [r0, r0+nr) x [c0, c0+nc).
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    ExactMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  /// Principal submatrix on the given (sorted, distinct) indices.
  ExactMatrix principal(std::span<const std::size_t> keep) const {
    ExactMatrix p(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) p(i, j) = (*this)(keep[i], keep[j]);
    return p;
  }

  /// Deletes the listed rows and the same-numbered columns.
  ExactMatrix delete_rows_cols(std::span<const std::size_t> drop) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows_; ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    return principal(keep);
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  std::vector<double> to_doubles() const {
    std::vector<double> out(data_.size());
    for (std::size_t k = 0; k < data_.size(); ++k) out[k] = scalar_double(data_[k]);
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_shape(a, b);
    ExactMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_shape(a, b);
    ExactMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }

  friend ExactMatrix operator*(const T& s, const ExactMatrix& a) {
    ExactMatrix r = a;
    for (auto& x : r.data_) x = s * x;
    return r;
  }

  // Zero entries of the left operand are skipped; the transform and Laplacian
  // products are sparse, which keeps the exact Q(sqrt 2) check affordable.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!is_zero(bkj)) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

 private:
  static void check_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = ExactMatrix<Integer>;
using RatMatrix = ExactMatrix<Rational>;
using QuadMatrix = ExactMatrix<QuadExt>;

template <class To, class From>
ExactMatrix<To> convert(const ExactMatrix<From>& m) {
  ExactMatrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Exact determinant: fraction-free Bareiss elimination over Integer,
/// Gaussian elimination over the fields.
template <class T>
T determinant(ExactMatrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if constexpr (is_field_v<T>) {
        if (is_zero(m(i, k))) continue;
        const T factor = m(i, k) / m(k, k);
        for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
      } else {
        for (std::size_t j = k + 1; j < n; ++j) {
          Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          m(i, j) = std::move(v);
        }
        m(i, k) = 0;
      }
    }
    if constexpr (!is_field_v<T>) prev = m(k, k);
  }
  T det(1);
  if constexpr (is_field_v<T>) {
    for (std::size_t k = 0; k < n; ++k) det *= m(k, k);
  } else {
    det = m(n - 1, n - 1);
  }
  return negate ? T(-det) : det;
}

/// "r,c,value" coordinate dump of the nonzero entries (0-based).
template <class T>
std::string to_coordinate_text(const ExactMatrix<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) os << i << ' ' << j << ' ' << scalar_string(m(i, j)) << '\n';
  return os.str();
}

/// Dense CSV with exact entries, one matrix row per line.
template <class T>
std::string to_csv(const ExactMatrix<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      const std::string s = scalar_string(m(i, j));
      if (s.find(',') != std::string::npos || s.find(' ') != std::string::npos)
        os << '"' << s << '"';
      else
        os << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace heptaspec
