#pragma once

#include <cstddef>

#include "heptaspec/chain_graph.hpp"
#include "heptaspec/matrix.hpp"

namespace heptaspec {

/// The four independent blocks of L(H_n) under the Bar/Top/Bottom partition.
/// The remaining blocks follow from the mirror symmetry:
/// L_{V0V2} = L_{V0V1}, L_{V2V2} = L_{V1V1}, L_{V2V1} = L_{V1V2}.
struct BlockLaplacian {
  int n = 0;
  IntMatrix v0v0;  // n x n
  IntMatrix v0v1;  // n x (4n+1)
  IntMatrix v1v1;  // (4n+1) x (4n+1)
  IntMatrix v1v2;  // (4n+1) x (4n+1)

  /// Rebuilds the full (9n+2)-square Laplacian from the four blocks.
  IntMatrix reassemble() const;
};

/// Slices the Laplacian into blocks and checks the mirror relations.
BlockLaplacian extract_blocks(const HeptagonalChain& chain);

/// Symmetric/antisymmetric halves of the Laplacian after the mirror transform.
struct DecomposedPair {
  int n = 0;
  QuadMatrix la;  // (5n+1)-square over Q(sqrt 2)
  IntMatrix ls;   // (4n+1)-square, L_{V1V1} - L_{V1V2}
};

/// Orthogonal transform over Q(sqrt 2) that block-diagonalizes L(H_n).
QuadMatrix mirror_transform(int n);

inline constexpr int kDefaultVerifyThreshold = 30;

/// Builds (L_A, L_S) and checks T L T' = diag(L_A, L_S) in exact arithmetic:
/// every entry when n <= verify_threshold, a fixed sample of entries above it.
/// Throws std::logic_error if the check fails.
DecomposedPair decompose(const BlockLaplacian& blocks,
                         int verify_threshold = kDefaultVerifyThreshold);

/// D L_A D^{-1} with D = diag(sqrt 2 on the Bar block, 1 elsewhere). Integer
/// entries, same characteristic polynomial and principal minors as L_A.
IntMatrix integerized_la(const DecomposedPair& pair);

/// The tridiagonal matrix printed as L_S: diagonal 3,2,3,...,3 and -1 off the
/// diagonal, size 4n+1. It equals pair.ls only for n = 1; interior rung
/// positions of the true L_S carry 4 instead of 3.
IntMatrix printed_ls(int n);

}  // namespace heptaspec
