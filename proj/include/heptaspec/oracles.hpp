#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heptaspec/chain_graph.hpp"
#include "heptaspec/matrix.hpp"

namespace heptaspec {

// Independent ground truth for the closed forms: exact linear algebra on the
// Laplacian, brute-force enumeration, and floating-point spectra.

/// Thrown when an oracle's input guard is violated (disconnected graph, too many edges).
class OracleInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact effective resistances of a connected graph with unit resistors.
///
/// Stores adj(L_g) and det(L_g) of the Laplacian grounded at `ground`;
/// r(u, v) = X_uu + X_vv - 2 X_uv with X = adj/det padded by a zero row and
/// column at the ground vertex.
class ResistanceTable {
 public:
  ResistanceTable(const SimpleGraph& g, std::size_t ground);

  std::size_t num_vertices() const { return n_; }
  std::size_t ground() const { return ground_; }
  Rational operator()(std::size_t u, std::size_t v) const;

  /// Sum over all unordered pairs.
  Rational kirchhoff_index() const;
  /// "u,v,r" for u < v, header row "u,v,resistance".
  std::string to_csv() const;

 private:
  Integer x(std::size_t u, std::size_t v) const;  // det * X_uv

  std::size_t n_ = 0;
  std::size_t ground_ = 0;
  IntMatrix adj_;  // (n-1)-square, grounded indices
  Integer det_;
};

/// Fraction-free Gauss-Jordan: returns adj(A) and sets det = det(A).
/// Requires all leading principal minors of A to be nonzero.
IntMatrix adjugate(const IntMatrix& a, Integer& det);

/// Grounding vertex used for H_n: Top(1).
std::size_t default_ground(const HeptagonalChain& chain);

ResistanceTable resistance_table(const HeptagonalChain& chain);

/// Exact Kf = sum_{i<j} r_ij. Throws OracleInputError if disconnected.
Rational kirchhoff_resistance(const SimpleGraph& g);
Rational kirchhoff_resistance(const HeptagonalChain& chain);

struct SpectralSummary {
  std::vector<double> eigenvalues;  // ascending
  double reciprocal_sum_nonzero = 0;  // sum of 1/lambda over |lambda| > zero_tol
  double max_residual = 0;            // max ||M v - lambda v|| over the computed pairs
};

inline constexpr double kZeroEigenTol = 1e-9;

/// Symmetric eigenproblem in double precision.
SpectralSummary numeric_spectrum(std::size_t n, const std::vector<double>& row_major);

template <class T>
SpectralSummary numeric_spectrum(const ExactMatrix<T>& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("numeric_spectrum needs a symmetric matrix");
  return numeric_spectrum(m.rows(), m.to_doubles());
}

/// |V| * sum of 1/mu over nonzero Laplacian eigenvalues.
double kirchhoff_spectral(const SimpleGraph& g);
double kirchhoff_spectral(const HeptagonalChain& chain);

/// Any Laplacian cofactor (row/column 0 deleted), exact.
Integer spanning_trees_matrix_tree(const SimpleGraph& g);
Integer spanning_trees_matrix_tree(const HeptagonalChain& chain);

inline constexpr std::size_t kEnumerationEdgeLimit = 25;

/// Counts spanning trees by testing every (|V|-1)-edge subset.
/// Throws OracleInputError when |E| > 25.
Integer spanning_trees_enumerate(const SimpleGraph& g);
Integer spanning_trees_enumerate(const HeptagonalChain& chain);

/// Greedy nearest-pair matching of `whole` against the multiset union of
/// `left` and `right`. Returns the largest paired gap, or +inf if the sizes
/// differ or some eigenvalue finds no partner within `window`.
double spectrum_union_gap(const std::vector<double>& whole, const std::vector<double>& left,
                          const std::vector<double>& right, double window = 1e-8);

}  // namespace heptaspec
