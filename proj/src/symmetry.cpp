#include "heptaspec/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace heptaspec {

namespace {

std::size_t size_of(int n) { return static_cast<std::size_t>(n); }

// (T L T')_{ij} from the two nonzeros per row of T.
QuadExt transformed_entry(const QuadMatrix& t, const IntMatrix& lap, std::size_t i,
                          std::size_t j) {
  auto support = [&t](std::size_t r) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < t.cols(); ++k)
      if (!is_zero(t(r, k))) cols.push_back(k);
    return cols;
  };
  QuadExt sum;
  for (std::size_t k : support(i))
    for (std::size_t l : support(j))
      if (lap(k, l) != 0) sum += t(i, k) * QuadExt(Rational(lap(k, l))) * t(j, l);
  return sum;
}

QuadExt expected_entry(const DecomposedPair& pair, std::size_t i, std::size_t j) {
  const std::size_t a = pair.la.rows();
  if (i < a && j < a) return pair.la(i, j);
  if (i >= a && j >= a) return QuadExt(Rational(pair.ls(i - a, j - a)));
  return QuadExt();
}

}  // namespace

IntMatrix BlockLaplacian::reassemble() const {
  const std::size_t b = size_of(n);
  const std::size_t m = v1v1.rows();
  IntMatrix lap(b + 2 * m, b + 2 * m);
  auto put = [&lap](const IntMatrix& blk, std::size_t r0, std::size_t c0, bool transpose) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) {
        if (transpose)
          lap(r0 + j, c0 + i) = blk(i, j);
        else
          lap(r0 + i, c0 + j) = blk(i, j);
      }
  };
  put(v0v0, 0, 0, false);
  put(v0v1, 0, b, false);
  put(v0v1, 0, b + m, false);
  put(v0v1, b, 0, true);
  put(v0v1, b + m, 0, true);
  put(v1v1, b, b, false);
  put(v1v1, b + m, b + m, false);
  put(v1v2, b, b + m, false);
  put(v1v2, b + m, b, false);
  return lap;
}

BlockLaplacian extract_blocks(const HeptagonalChain& chain) {
  const IntMatrix lap = laplacian(chain);
  const std::size_t b = size_of(chain.n());
  const std::size_t m = chain.top_size();
  BlockLaplacian blocks;
  blocks.n = chain.n();
  blocks.v0v0 = lap.block(0, 0, b, b);
  blocks.v0v1 = lap.block(0, b, b, m);
  blocks.v1v1 = lap.block(b, b, m, m);
  blocks.v1v2 = lap.block(b, b + m, m, m);

  if (lap.block(0, b + m, b, m) != blocks.v0v1 || lap.block(b + m, b + m, m, m) != blocks.v1v1 ||
      lap.block(b + m, b, m, m) != blocks.v1v2 || !blocks.v1v2.is_symmetric())
    throw std::logic_error("Laplacian blocks violate the mirror symmetry");
  return blocks;
}

QuadMatrix mirror_transform(int n) {
  const std::size_t b = size_of(n);
  const std::size_t m = 4 * b + 1;
  const QuadExt h(Radicand::Two, 0, make_rational(1, 2));  // 1/sqrt 2
  QuadMatrix t(b + 2 * m, b + 2 * m);
  for (std::size_t i = 0; i < b; ++i) t(i, i) = QuadExt(1);
  for (std::size_t i = 0; i < m; ++i) {
    t(b + i, b + i) = h;
    t(b + i, b + m + i) = h;
    t(b + m + i, b + i) = h;
    t(b + m + i, b + m + i) = -h;
  }
  return t;
}

DecomposedPair decompose(const BlockLaplacian& blocks, int verify_threshold) {
  const std::size_t b = size_of(blocks.n);
  const std::size_t m = blocks.v1v1.rows();
  const QuadExt root2 = QuadExt::sqrt(Radicand::Two);

  DecomposedPair pair;
  pair.n = blocks.n;
  pair.la = QuadMatrix(b + m, b + m);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) pair.la(i, j) = QuadExt(Rational(blocks.v0v0(i, j)));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (blocks.v0v1(i, j) == 0) continue;
      const QuadExt e = root2 * QuadExt(Rational(blocks.v0v1(i, j)));
      pair.la(i, b + j) = e;
      pair.la(b + j, i) = e;
    }
  const IntMatrix sym = blocks.v1v1 + blocks.v1v2;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pair.la(b + i, b + j) = QuadExt(Rational(sym(i, j)));
  pair.ls = blocks.v1v1 - blocks.v1v2;

  const IntMatrix lap = blocks.reassemble();
  const QuadMatrix t = mirror_transform(blocks.n);
  const std::size_t total = lap.rows();
  if (blocks.n <= verify_threshold) {
    const QuadMatrix conj = t * convert<QuadExt>(convert<Rational>(lap)) * t.transpose();
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t j = 0; j < total; ++j)
        if (conj(i, j) != expected_entry(pair, i, j))
          throw std::logic_error("T L T' does not equal diag(L_A, L_S)");
  } else {
    // Deterministic sample: every Bar row against a stride of columns, plus a diagonal band.
    const std::size_t stride = std::max<std::size_t>(1, total / 64);
    for (std::size_t i = 0; i < total; i += stride)
      for (std::size_t j = (i >= 2 ? i - 2 : 0); j < std::min(total, i + 3); ++j)
        if (transformed_entry(t, lap, i, j) != expected_entry(pair, i, j))
          throw std::logic_error("T L T' does not equal diag(L_A, L_S) (sampled)");
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < total; j += stride)
        if (transformed_entry(t, lap, i, j) != expected_entry(pair, i, j))
          throw std::logic_error("T L T' does not equal diag(L_A, L_S) (sampled)");
  }
  return pair;
}

IntMatrix integerized_la(const DecomposedPair& pair) {
  const std::size_t b = size_of(pair.n);
  const std::size_t size = pair.la.rows();
  const QuadExt root2 = QuadExt::sqrt(Radicand::Two);
  IntMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      QuadExt e = pair.la(i, j);
      if (is_zero(e)) continue;
      if (i < b) e *= root2;
      if (j < b) e /= root2;
      if (!e.is_rational() || !is_integer(e.rational_part()))
        throw std::logic_error("integerized L_A has a non-integer entry");
      out(i, j) = e.rational_part().get_num();
    }
  return out;
}

IntMatrix printed_ls(int n) {
  if (n < 1) throw std::domain_error("printed_ls requires n >= 1");
  const std::size_t m = 4 * size_of(n) + 1;
  IntMatrix ls(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    ls(i, i) = (i % 2 == 0) ? 3 : 2;
    if (i + 1 < m) {
      ls(i, i + 1) = -1;
      ls(i + 1, i) = -1;
    }
  }
  return ls;
}

}  // namespace heptaspec
