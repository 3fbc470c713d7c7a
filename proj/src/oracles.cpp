#include "heptaspec/oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace heptaspec {

IntMatrix adjugate(const IntMatrix& a, Integer& det) {
  if (!a.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) {
    det = 1;
    return {};
  }
  // Augmented [A | I]; after elimination the left half is det*I, the right half adj(A).
  IntMatrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = 1;
  }
  Integer prev = 1;
  Integer v;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer pivot = w(k, k);
    if (pivot == 0) throw std::domain_error("adjugate: zero leading principal minor");
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer factor = w(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        v = pivot * w(i, j);
        if (factor != 0 && w(k, j) != 0) v -= factor * w(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        w(i, j) = v;
      }
      w(i, k) = 0;
    }
    prev = pivot;
  }
  det = prev;
  return w.block(0, n, n, n);
}

ResistanceTable::ResistanceTable(const SimpleGraph& g, std::size_t ground)
    : n_(g.num_vertices), ground_(ground) {
  if (ground >= n_) throw std::out_of_range("ground vertex out of range");
  if (!is_connected(g)) throw OracleInputError("resistance oracle needs a connected graph");
  const std::vector<std::size_t> drop{ground};
  adj_ = adjugate(laplacian(g).delete_rows_cols(drop), det_);
}

Integer ResistanceTable::x(std::size_t u, std::size_t v) const {
  if (u == ground_ || v == ground_) return 0;
  const std::size_t gu = u > ground_ ? u - 1 : u;
  const std::size_t gv = v > ground_ ? v - 1 : v;
  return adj_(gu, gv);
}

Rational ResistanceTable::operator()(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("resistance: vertex out of range");
  return make_rational(x(u, u) + x(v, v) - 2 * x(u, v), det_);
}

Rational ResistanceTable::kirchhoff_index() const {
  // sum_{i<j} r_ij = n tr(X) - 1'X1
  Integer trace = 0;
  Integer total = 0;
  for (std::size_t i = 0; i < adj_.rows(); ++i) {
    trace += adj_(i, i);
    for (std::size_t j = 0; j < adj_.cols(); ++j) total += adj_(i, j);
  }
  return make_rational(Integer(static_cast<unsigned long>(n_)) * trace - total, det_);
}

std::string ResistanceTable::to_csv() const {
  std::ostringstream os;
  os << "u,v,resistance\n";
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v) os << u << ',' << v << ',' << (*this)(u, v).get_str() << '\n';
  return os.str();
}

std::size_t default_ground(const HeptagonalChain& chain) {
  return chain.position({VertexClass::Top, 1});
}

ResistanceTable resistance_table(const HeptagonalChain& chain) {
  return {as_simple_graph(chain), default_ground(chain)};
}

Rational kirchhoff_resistance(const SimpleGraph& g) {
  return ResistanceTable(g, 0).kirchhoff_index();
}

Rational kirchhoff_resistance(const HeptagonalChain& chain) {
  return resistance_table(chain).kirchhoff_index();
}

SpectralSummary numeric_spectrum(std::size_t n, const std::vector<double>& row_major) {
  if (row_major.size() != n * n) throw std::invalid_argument("numeric_spectrum: size mismatch");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * n + j];
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");

  SpectralSummary out;
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    const double residual = (m * vectors.col(k) - values(k) * vectors.col(k)).norm();
    out.max_residual = std::max(out.max_residual, residual);
    if (std::abs(values(k)) > kZeroEigenTol) out.reciprocal_sum_nonzero += 1.0 / values(k);
  }
  return out;
}

double kirchhoff_spectral(const SimpleGraph& g) {
  if (!is_connected(g)) throw OracleInputError("spectral Kf needs a connected graph");
  const SpectralSummary spec = numeric_spectrum(laplacian(g));
  return static_cast<double>(g.num_vertices) * spec.reciprocal_sum_nonzero;
}

double kirchhoff_spectral(const HeptagonalChain& chain) {
  return kirchhoff_spectral(as_simple_graph(chain));
}

Integer spanning_trees_matrix_tree(const SimpleGraph& g) {
  if (g.num_vertices <= 1) return 1;
  const std::vector<std::size_t> drop{0};
  return determinant(laplacian(g).delete_rows_cols(drop));
}

Integer spanning_trees_matrix_tree(const HeptagonalChain& chain) {
  return spanning_trees_matrix_tree(as_simple_graph(chain));
}

Integer spanning_trees_enumerate(const SimpleGraph& g) {
  const std::size_t m = g.edges.size();
  if (m > kEnumerationEdgeLimit)
    throw OracleInputError("enumeration oracle limited to " +
                           std::to_string(kEnumerationEdgeLimit) + " edges, got " +
                           std::to_string(m));
  if (g.num_vertices <= 1) return 1;
  const std::size_t k = g.num_vertices - 1;
  if (k > m) return 0;

  std::vector<std::size_t> parent(g.num_vertices);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Integer count = 0;
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (std::size_t e : idx) {
      const std::size_t a = find(g.edges[e].first), b = find(g.edges[e].second);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    // k acyclic edges on k+1 vertices always span.
    if (acyclic) ++count;

    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

Integer spanning_trees_enumerate(const HeptagonalChain& chain) {
  return spanning_trees_enumerate(as_simple_graph(chain));
}

double spectrum_union_gap(const std::vector<double>& whole, const std::vector<double>& left,
                          const std::vector<double>& right, double window) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (whole.size() != left.size() + right.size()) return kInf;
  std::vector<double> pool(left);
  pool.insert(pool.end(), right.begin(), right.end());
  std::vector<bool> used(pool.size(), false);
  double worst = 0;
  for (double w : whole) {
    std::size_t best = pool.size();
    double gap = kInf;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(pool[j] - w);
      if (d < gap) {
        gap = d;
        best = j;
      }
    }
    if (best == pool.size() || gap > window) return kInf;
    used[best] = true;
    worst = std::max(worst, gap);
  }
  return worst;
}

}  // namespace heptaspec
