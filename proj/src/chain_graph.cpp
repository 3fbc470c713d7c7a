#include "heptaspec/chain_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace heptaspec {

std::string VertexId::name() const {
  switch (cls) {
    case VertexClass::Bar:
      return "bar:" + std::to_string(index);
    case VertexClass::Top:
      return "top:" + std::to_string(index);
    case VertexClass::Bottom:
      return "bot:" + std::to_string(index);
  }
  return {};
}

VertexId parse_vertex(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad vertex name: " + name);
  const std::string kind = name.substr(0, colon);
  const int index = std::stoi(name.substr(colon + 1));
  if (kind == "bar") return {VertexClass::Bar, index};
  if (kind == "top") return {VertexClass::Top, index};
  if (kind == "bot") return {VertexClass::Bottom, index};
  throw std::invalid_argument("bad vertex name: " + name);
}

namespace {

void add_edge(std::vector<Edge>& edges, std::size_t u, std::size_t v) {
  edges.emplace_back(std::min(u, v), std::max(u, v));
}

bool connected(std::size_t num_vertices, const std::vector<Edge>& edges) {
  if (num_vertices == 0) return true;
  std::vector<std::size_t> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = num_vertices;
  for (const auto& [u, v] : edges) {
    const std::size_t a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

IntMatrix laplacian_of(std::size_t num_vertices, const std::vector<Edge>& edges) {
  IntMatrix lap(num_vertices, num_vertices);
  for (const auto& [u, v] : edges) {
    lap(u, v) -= 1;
    lap(v, u) -= 1;
    lap(u, u) += 1;
    lap(v, v) += 1;
  }
  return lap;
}

}  // namespace

HeptagonalChain build_chain(int n) {
  if (n < 1) throw std::domain_error("H_n requires n >= 1");
  HeptagonalChain g;
  g.n_ = n;
  const int m = 4 * n + 1;
  for (int s = 1; s <= n; ++s) g.vertices_.push_back({VertexClass::Bar, s});
  for (int i = 1; i <= m; ++i) g.vertices_.push_back({VertexClass::Top, i});
  for (int i = 1; i <= m; ++i) g.vertices_.push_back({VertexClass::Bottom, i});

  auto bar = [](int s) { return static_cast<std::size_t>(s - 1); };
  auto top = [n](int i) { return static_cast<std::size_t>(n + i - 1); };
  auto bot = [n, m](int i) { return static_cast<std::size_t>(n + m + i - 1); };

  for (int i = 1; i < m; ++i) {
    add_edge(g.edges_, top(i), top(i + 1));
    add_edge(g.edges_, bot(i), bot(i + 1));
  }
  for (int z = 0; z <= n; ++z) add_edge(g.edges_, top(4 * z + 1), bot(4 * z + 1));
  for (int s = 1; s <= n; ++s) {
    add_edge(g.edges_, bar(s), top(4 * s - 1));
    add_edge(g.edges_, bar(s), bot(4 * s - 1));
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  g.adjacency_.resize(g.vertices_.size());
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::size_t HeptagonalChain::position(const VertexId& v) const {
  const int m = 4 * n_ + 1;
  switch (v.cls) {
    case VertexClass::Bar:
      if (v.index >= 1 && v.index <= n_) return static_cast<std::size_t>(v.index - 1);
      break;
    case VertexClass::Top:
      if (v.index >= 1 && v.index <= m) return static_cast<std::size_t>(n_ + v.index - 1);
      break;
    case VertexClass::Bottom:
      if (v.index >= 1 && v.index <= m) return static_cast<std::size_t>(n_ + m + v.index - 1);
      break;
  }
  throw std::out_of_range("vertex " + v.name() + " not in H_" + std::to_string(n_));
}

bool HeptagonalChain::has_edge(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> HeptagonalChain::degrees() const {
  std::vector<int> deg;
  deg.reserve(adjacency_.size());
  for (const auto& nbrs : adjacency_) deg.push_back(static_cast<int>(nbrs.size()));
  return deg;
}

bool HeptagonalChain::is_connected() const { return connected(num_vertices(), edges_); }

std::string HeptagonalChain::to_edge_list() const {
  std::ostringstream os;
  for (const auto& [u, v] : edges_) os << vertices_[u].name() << ' ' << vertices_[v].name() << '\n';
  return os.str();
}

std::string HeptagonalChain::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices_) verts.push_back(v.name());
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : edges_) edges.push_back({vertices_[u].name(), vertices_[v].name()});
  return j.dump();
}

IntMatrix laplacian(const HeptagonalChain& chain) {
  return laplacian_of(chain.num_vertices(), chain.edges());
}

bool Automorphism::preserves_edges(const HeptagonalChain& chain) const {
  if (mapping.size() != chain.num_vertices()) return false;
  for (const auto& [u, v] : chain.edges())
    if (!chain.has_edge(mapping[u], mapping[v])) return false;
  return true;
}

bool Automorphism::is_involution() const {
  for (std::size_t v = 0; v < mapping.size(); ++v)
    if (mapping[mapping[v]] != v) return false;
  return true;
}

Automorphism automorphism_pi(const HeptagonalChain& chain) {
  Automorphism pi;
  pi.mapping.reserve(chain.num_vertices());
  for (const auto& v : chain.vertices()) {
    VertexId image = v;
    if (v.cls == VertexClass::Top) image.cls = VertexClass::Bottom;
    if (v.cls == VertexClass::Bottom) image.cls = VertexClass::Top;
    pi.mapping.push_back(chain.position(image));
  }
  if (!pi.preserves_edges(chain) || !pi.is_involution())
    throw std::logic_error("mirror map is not an automorphism of H_n");
  return pi;
}

SimpleGraph as_simple_graph(const HeptagonalChain& chain) {
  return {chain.num_vertices(), chain.edges()};
}

IntMatrix laplacian(const SimpleGraph& g) { return laplacian_of(g.num_vertices, g.edges); }

bool is_connected(const SimpleGraph& g) { return connected(g.num_vertices, g.edges); }

}  // namespace heptaspec
