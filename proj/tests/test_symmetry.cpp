#include "doctest.h"
#include "heptaspec/charpoly.hpp"
#include "heptaspec/chain_graph.hpp"
#include "heptaspec/symmetry.hpp"

using namespace heptaspec;

TEST_CASE("blocks of H_1") {
  const auto b = extract_blocks(build_chain(1));
  CHECK(b.v0v0 == IntMatrix(1, 1, Integer(2)));
  REQUIRE(b.v0v1.cols() == 5);
  for (std::size_t j = 0; j < 5; ++j) CHECK(b.v0v1(0, j) == (j == 2 ? -1 : 0));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(b.v1v2(i, j) == ((i == j && (i == 0 || i == 4)) ? -1 : 0));
  CHECK(b.reassemble() == laplacian(build_chain(1)));
}

TEST_CASE("blocks of H_2") {
  const auto b = extract_blocks(build_chain(2));
  CHECK(b.v0v0 == 2 * IntMatrix::identity(2));
  CHECK(b.v0v1(0, 2) == -1);
  CHECK(b.v0v1(1, 6) == -1);
  CHECK(b.v1v2(4, 4) == -1);
  CHECK(b.v1v2(8, 8) == -1);
  CHECK(b.v1v2(2, 2) == 0);
  CHECK(b.reassemble() == laplacian(build_chain(2)));
}

TEST_CASE("decomposition of H_1") {
  const auto pair = decompose(extract_blocks(build_chain(1)));
  const Integer diag[] = {3, 2, 3, 2, 3};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(pair.ls(i, i) == diag[i]);
    if (i + 1 < 5) CHECK(pair.ls(i, i + 1) == -1);
  }
  REQUIRE(pair.la.rows() == 6);
  CHECK(pair.la(0, 0) == QuadExt(2));
  CHECK(pair.la(0, 3) == QuadExt(Radicand::Two, 0, -1));
  CHECK(pair.la(3, 0) == QuadExt(Radicand::Two, 0, -1));
  CHECK(determinant(pair.la).is_zero());

  const IntMatrix ai = integerized_la(pair);
  CHECK(ai(0, 3) == -2);
  CHECK(ai(3, 0) == -1);
  const Integer adiag[] = {2, 1, 2, 3, 2, 1};
  for (std::size_t i = 0; i < 6; ++i) CHECK(ai(i, i) == adiag[i]);
}

TEST_CASE("integerized L_A keeps the characteristic polynomial") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto pair = decompose(extract_blocks(build_chain(n)));
    CHECK(charpoly(integerized_la(pair)) == charpoly(pair.la));
  }
}

TEST_CASE("mirror transform is orthogonal") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const QuadMatrix t = mirror_transform(n);
    CHECK(t * t.transpose() == QuadMatrix::identity(t.rows()));
  }
}

TEST_CASE("L_S is positive definite and L_A has rank 5n") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto pair = decompose(extract_blocks(build_chain(n)));
    CHECK(pair.ls.is_symmetric());
    for (const Integer& m : leading_principal_minors_fast(pair.ls)) CHECK(m > 0);

    const CharPoly pa = charpoly(integerized_la(pair));
    CHECK(pa.minor_sum(5 * n + 1) == 0);
    CHECK(pa.minor_sum(5 * n) != 0);
  }
}

TEST_CASE("printed L_S agrees with the true L_S only at n = 1") {
  CHECK(printed_ls(1) == decompose(extract_blocks(build_chain(1))).ls);
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto pair = decompose(extract_blocks(build_chain(n)));
    CHECK_FALSE(printed_ls(n) == pair.ls);
    // they differ only on the interior rung diagonal entries, 4 versus 3
    const IntMatrix diff = pair.ls - printed_ls(n);
    for (std::size_t i = 0; i < diff.rows(); ++i)
      for (std::size_t j = 0; j < diff.cols(); ++j) {
        const bool interior_rung = i == j && i % 4 == 0 && i != 0 && i + 1 != diff.rows();
        CHECK(diff(i, j) == (interior_rung ? 1 : 0));
      }
  }
}

TEST_CASE("sampled verification above the threshold") {
  // threshold 0 forces the sampled path
  const auto full = decompose(extract_blocks(build_chain(3)));
  const auto sampled = decompose(extract_blocks(build_chain(3)), 0);
  CHECK(full.ls == sampled.ls);
  CHECK(full.la == sampled.la);
}
