#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "heptaspec/chain_graph.hpp"
#include "json.hpp"

using namespace heptaspec;

namespace {

// Chordless cycles of exactly `len` vertices, each counted once.
std::size_t count_chordless_cycles(const HeptagonalChain& g, std::size_t len) {
  const std::size_t nv = g.num_vertices();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> path;
  std::vector<bool> on(nv, false);

  auto chordless = [&](const std::vector<std::size_t>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 2; j < c.size(); ++j) {
        if (i == 0 && j == c.size() - 1) continue;
        if (g.has_edge(c[i], c[j])) return false;
      }
    return true;
  };

  // start is the smallest vertex on the cycle
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v) -> void {
    if (path.size() == len) {
      if (g.has_edge(v, start) && chordless(path)) {
        auto key = path;
        std::sort(key.begin(), key.end());
        seen.insert(key);
      }
      return;
    }
    for (std::size_t w : adj[v]) {
      if (w <= start || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (std::size_t s = 0; s < nv; ++s) {
    path = {s};
    on[s] = true;
    dfs(dfs, s, s);
    on[s] = false;
  }
  return seen.size();
}

}  // namespace

TEST_CASE("H_1 is two heptagons sharing the bar path") {
  const auto g = build_chain(1);
  CHECK(g.num_vertices() == 11);
  CHECK(g.num_edges() == 12);
  const auto deg = g.degrees();
  CHECK(std::count(deg.begin(), deg.end(), 3) == 2);
  CHECK(std::count(deg.begin(), deg.end(), 2) == 9);
  CHECK(count_chordless_cycles(g, 7) == 2);
}

TEST_CASE("H_2 has four chordless 7-cycles") {
  const auto g = build_chain(2);
  CHECK(g.num_vertices() == 20);
  CHECK(g.num_edges() == 23);
  CHECK(count_chordless_cycles(g, 7) == 4);
}

TEST_CASE("structural invariants for n = 1..50") {
  for (int n = 1; n <= 50; ++n) {
    CAPTURE(n);
    const auto g = build_chain(n);
    REQUIRE(g.num_vertices() == static_cast<std::size_t>(9 * n + 2));
    REQUIRE(g.num_edges() == static_cast<std::size_t>(11 * n + 1));
    const auto deg = g.degrees();
    CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * (11 * n + 1));
    CHECK(*std::min_element(deg.begin(), deg.end()) == 2);
    CHECK(*std::max_element(deg.begin(), deg.end()) == 3);
    CHECK(g.is_connected());
    // cycle space dimension |E| - |V| + 1
    CHECK(static_cast<int>(g.num_edges()) - static_cast<int>(g.num_vertices()) + 1 == 2 * n);
    for (const auto& [u, v] : g.edges()) CHECK(u < v);

    const auto pi = automorphism_pi(g);
    CHECK(pi.preserves_edges(g));
    CHECK(pi.is_involution());
  }
}

TEST_CASE("vertex order and naming") {
  const auto g = build_chain(2);
  CHECK(g.vertex(0).name() == "bar:1");
  CHECK(g.vertex(2).name() == "top:1");
  CHECK(g.vertex(2 + 9).name() == "bot:1");
  CHECK(g.position(parse_vertex("bot:9")) == g.num_vertices() - 1);
  CHECK(parse_vertex("top:3") == VertexId{VertexClass::Top, 3});
  CHECK_THROWS(parse_vertex("side:1"));
  CHECK_THROWS_AS(build_chain(0), std::domain_error);
}

TEST_CASE("Laplacian of H_1") {
  const auto g = build_chain(1);
  const IntMatrix l = laplacian(g);
  CHECK(l.trace() == 24);
  CHECK(l.is_symmetric());
  const auto bar = g.position({VertexClass::Bar, 1});
  const auto top3 = g.position({VertexClass::Top, 3});
  CHECK(l(bar, top3) == -1);
  CHECK(l(bar, bar) == 2);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    Integer row_sum = 0;
    for (std::size_t j = 0; j < l.cols(); ++j) row_sum += l(i, j);
    CHECK(row_sum == 0);
  }
}

TEST_CASE("mirror automorphism examples") {
  const auto g = build_chain(3);
  const auto pi = automorphism_pi(g);
  const auto top5 = g.position({VertexClass::Top, 5});
  const auto bot5 = g.position({VertexClass::Bottom, 5});
  const auto bar2 = g.position({VertexClass::Bar, 2});
  CHECK(pi(top5) == bot5);
  CHECK(pi(bot5) == top5);
  CHECK(pi(bar2) == bar2);
}

TEST_CASE("edge list and JSON export") {
  const auto g = build_chain(1);
  const std::string edges = g.to_edge_list();
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 12);
  CHECK(edges.find("bar:1 top:3") != std::string::npos);

  const auto j = nlohmann::json::parse(g.to_json());
  CHECK(j["n"] == 1);
  CHECK(j["vertices"].size() == 11);
  CHECK(j["edges"].size() == 12);
  CHECK(j["vertices"][0] == "bar:1");
}
