#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "heptaspec/matrix.hpp"

namespace heptaspec {

/// Which of the three mirror classes a vertex belongs to.
/// Bar vertices sit on the mirror axis; Top and Bottom are swapped by it.
enum class VertexClass { Bar, Top, Bottom };

struct VertexId {
  VertexClass cls;
  int index;  // 1-based: Bar in [1, n], Top/Bottom in [1, 4n+1]

  /// Canonical name: "bar:s", "top:i" or "bot:i".
  std::string name() const;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

VertexId parse_vertex(const std::string& name);

/// Undirected edge, stored as a pair of dense vertex positions with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

/// The linear heptagonal network H_n.
///
/// Vertex order is part of the public contract: Bar(1..n), Top(1..4n+1),
/// Bottom(1..4n+1). Matrix blocks are sliced by these offsets.
class HeptagonalChain {
 public:
  int n() const { return n_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Dense position of a vertex in the Bar/Top/Bottom order.
  std::size_t position(const VertexId& v) const;
  const VertexId& vertex(std::size_t pos) const { return vertices_.at(pos); }

  std::size_t top_size() const { return 4 * static_cast<std::size_t>(n_) + 1; }

  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<int> degrees() const;
  bool is_connected() const;

  /// "u v" per line, canonical vertex names.
  std::string to_edge_list() const;
  /// {"n":..,"vertices":[..],"edges":[[u,v],..]} with canonical names.
  std::string to_json() const;

 private:
  friend HeptagonalChain build_chain(int n);
  HeptagonalChain() = default;

  int n_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Builds H_n; throws std::domain_error for n < 1.
HeptagonalChain build_chain(int n);

/// Integer Laplacian (degree diagonal minus adjacency) in the contract order.
IntMatrix laplacian(const HeptagonalChain& chain);

/// Vertex permutation, by dense position.
struct Automorphism {
  std::vector<std::size_t> mapping;

  std::size_t operator()(std::size_t v) const { return mapping.at(v); }
  bool preserves_edges(const HeptagonalChain& chain) const;
  bool is_involution() const;
};

/// The mirror symmetry: fixes every Bar vertex and swaps Top(i) with Bottom(i).
/// Verified against the edge set before it is returned.
Automorphism automorphism_pi(const HeptagonalChain& chain);

/// Minimal edge-list graph for oracle fixtures (K_2, K_3, C_7, ...).
struct SimpleGraph {
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
};

SimpleGraph as_simple_graph(const HeptagonalChain& chain);
IntMatrix laplacian(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

}  // namespace heptaspec
