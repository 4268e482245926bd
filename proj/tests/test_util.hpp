#ifndef AECC_TEST_UTIL_HPP
#define AECC_TEST_UTIL_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "aecc/coloring.hpp"
#include "aecc/configurations.hpp"
#include "aecc/graph.hpp"

namespace aecc::testing {

/// Coloring from (u, v, color) triples; unlisted edges stay uncolored.
inline EdgeColoring colored(const Graph& g, int palette, std::initializer_list<std::tuple<int, int, int>> triples) {
  EdgeColoring c(palette, g.edge_count());
  for (auto [u, v, col] : triples) c.set(g.edge_index(u, v), col);
  return c;
}

/// Independent acyclicity check: for each color pair, a component of the
/// two-colored subgraph with as many edges as vertices holds a cycle.
inline bool forest_check(const Graph& g, const EdgeColoring& c) {
  const int n = g.vertex_count();
  for (Color a = 1; a <= c.palette_size(); ++a) {
    for (Color b = a + 1; b <= c.palette_size(); ++b) {
      std::vector<int> comp(static_cast<std::size_t>(n), -1);
      for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int vertices = 0, half_edges = 0;
        std::vector<Vertex> stack{s};
        comp[s] = s;
        while (!stack.empty()) {
          Vertex x = stack.back();
          stack.pop_back();
          ++vertices;
          for (std::size_t i = 0; i < g.neighbors(x).size(); ++i) {
            Color col = c[g.incident_edges(x)[i]];
            if (col != a && col != b) continue;
            ++half_edges;
            Vertex y = g.neighbors(x)[i];
            if (comp[y] == -1) {
              comp[y] = s;
              stack.push_back(y);
            }
          }
        }
        if (half_edges / 2 >= vertices) return false;
      }
    }
  }
  return true;
}

/// Vertices reachable from u through edges colored a or b.
inline std::set<Vertex> ab_component(const Graph& g, const EdgeColoring& c, Vertex u, Color a, Color b) {
  std::set<Vertex> seen{u};
  std::vector<Vertex> stack{u};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < g.neighbors(x).size(); ++i) {
      Color col = c[g.incident_edges(x)[i]];
      Vertex y = g.neighbors(x)[i];
      if ((col == a || col == b) && seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

/// G(n, p) with at least one edge.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<EdgeId> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) edges.push_back(make_edge(i, j));
      }
    }
    if (!edges.empty()) return Graph(n, edges);
  }
}

/// A random graph on n vertices with a random total proper k-coloring.
/// Edges that cannot be colored greedily are dropped from the graph.
inline std::pair<Graph, EdgeColoring> random_colored_graph(std::mt19937_64& rng, int n, double p, int k) {
  Graph g = random_graph(rng, n, p);
  std::vector<EdgeId> kept;
  std::vector<Color> colors;
  std::vector<std::set<Color>> at(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  for (int e : order) {
    const auto& ed = g.edge(e);
    std::vector<Color> free;
    for (Color c = 1; c <= k; ++c) {
      if (!at[ed.lo].count(c) && !at[ed.hi].count(c)) free.push_back(c);
    }
    if (free.empty()) continue;
    Color c = free[rng() % free.size()];
    at[ed.lo].insert(c);
    at[ed.hi].insert(c);
    kept.push_back(ed);
    colors.push_back(c);
  }
  Graph h(n, kept);
  EdgeColoring col(k, h.edge_count());
  for (std::size_t i = 0; i < kept.size(); ++i) col.set(h.edge_index(kept[i].lo, kept[i].hi), colors[i]);
  return {std::move(h), std::move(col)};
}

/// Lexicographically smallest tuple of distinct vertices satisfying the
/// predicate of t, by plain enumeration of all tuples.
inline std::optional<std::vector<Vertex>> brute_force_witness(const Graph& g, Tag t, const DetectOptions& opt = {}) {
  if (g.empty()) return std::nullopt;
  const detail::Ctx ctx{g, max_degree(g)};
  const int arity = tag_arity(t);
  const int n = g.vertex_count();
  std::vector<Vertex> w;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::optional<std::vector<Vertex>> found;
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(w.size()) == arity) {
      if (detail::holds_ctx(ctx, t, w, opt)) {
        found = w;
        return true;
      }
      return false;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      w.push_back(x);
      bool done = self(self);
      w.pop_back();
      used[x] = false;
      if (done) return true;
    }
    return false;
  };
  rec(rec);
  return found;
}

}  // namespace aecc::testing

#endif  // AECC_TEST_UTIL_HPP
