#ifndef AECC_GRAPH_HPP
#define AECC_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aecc {

using Vertex = int;

/// Upper bound marker for open-ended degree ranges such as "6^+".
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge with the lower endpoint first.
struct EdgeId {
  Vertex lo = 0;
  Vertex hi = 0;

  auto operator<=>(const EdgeId&) const = default;

  Vertex other(Vertex v) const { return v == lo ? hi : lo; }
};

inline EdgeId make_edge(Vertex a, Vertex b) {
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the
/// free functions below return new graphs instead of mutating.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int vertex_count) : adj_(checked_count(vertex_count)), inc_(adj_.size()) {}

  /// Throws GraphError on self-loops, parallel edges and out-of-range ids.
  Graph(int vertex_count, std::span<const EdgeId> edges) : Graph(vertex_count) {
    edges_.assign(edges.begin(), edges.end());
    for (const auto& e : edges_) {
      if (e.lo == e.hi) throw GraphError("self-loop at vertex " + std::to_string(e.lo));
      if (e.lo > e.hi) throw GraphError("edge endpoints not in canonical order");
      if (e.lo < 0 || e.hi >= vertex_count) {
        throw GraphError("edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) +
                         ") out of range for " + std::to_string(vertex_count) + " vertices");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i] == edges_[i - 1]) {
        throw GraphError("parallel edge (" + std::to_string(edges_[i].lo) + "," +
                         std::to_string(edges_[i].hi) + ")");
      }
    }
    for (const auto& e : edges_) {
      adj_[e.lo].push_back(e.hi);
      adj_[e.hi].push_back(e.lo);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    for (Vertex v = 0; v < vertex_count; ++v) {
      inc_[v].reserve(adj_[v].size());
      for (Vertex w : adj_[v]) inc_[v].push_back(edge_index(v, w));
    }
  }

  static Graph from_pairs(int vertex_count, std::span<const std::pair<int, int>> pairs) {
    std::vector<EdgeId> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
    return Graph(vertex_count, edges);
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return adj_.empty(); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const {
    require_vertex(v);
    return adj_[v];
  }

  /// Edge indices parallel to neighbors(v).
  const std::vector<int>& incident_edges(Vertex v) const {
    require_vertex(v);
    return inc_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Sorted edge list; positions are the edge indices used by colorings.
  const std::vector<EdgeId>& edges() const { return edges_; }
  const EdgeId& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  /// Index of edge ab in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const {
    if (a == b) return -1;
    EdgeId key = a < b ? EdgeId{a, b} : EdgeId{b, a};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
  }
  int edge_index(EdgeId e) const { return edge_index(e.lo, e.hi); }

  void require_vertex(Vertex v) const {
    if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  }

  bool operator==(const Graph& other) const {
    return vertex_count() == other.vertex_count() && edges_ == other.edges_;
  }

 private:
  static std::size_t checked_count(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    return static_cast<std::size_t>(n);
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> inc_;
  std::vector<EdgeId> edges_;
};

/// A graph derived from a parent by vertex deletion, with the id maps
/// needed to lift results back. old_to_new[v] is -1 for deleted vertices.
struct Reindexed {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<Vertex> new_to_old;
};

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

inline int max_degree(const Graph& g) {
  if (g.empty()) throw GraphError("max_degree of empty graph");
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// |{w in N(v) : lo <= d(w) <= hi}|; realizes n_k, n_{k+} and n_{k-}.
inline int count_neighbors_by_degree(const Graph& g, Vertex v, int lo, int hi) {
  if (lo > hi) throw GraphError("empty degree range");
  int count = 0;
  for (Vertex w : g.neighbors(v)) {
    int d = g.degree(w);
    if (d >= lo && d <= hi) ++count;
  }
  return count;
}

/// Component id per vertex, numbered by smallest member.
inline std::vector<int> connected_components(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

/// Biconnected components as a block id per edge index, plus the set of
/// cut vertices. Bridges form single-edge blocks.
struct BlockDecomposition {
  std::vector<int> edge_block;
  int block_count = 0;
  std::vector<bool> is_cut_vertex;
};

inline BlockDecomposition biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  BlockDecomposition out;
  out.edge_block.assign(static_cast<std::size_t>(g.edge_count()), -1);
  out.is_cut_vertex.assign(static_cast<std::size_t>(n), false);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
    int children;
  };
  std::vector<Frame> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, 0, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = g.neighbors(f.v);
      const auto& inc = g.incident_edges(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next];
        int e = inc[f.next];
        ++f.next;
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          ++f.children;
          disc[w] = low[w] = timer++;
          frames.push_back({w, e, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      frames.pop_back();
      if (frames.empty()) {
        if (done.children > 1) out.is_cut_vertex[done.v] = true;
        continue;
      }
      Frame& parent = frames.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        if (frames.size() > 1) out.is_cut_vertex[parent.v] = true;
        int block = out.block_count++;
        while (true) {
          int e = edge_stack.back();
          edge_stack.pop_back();
          out.edge_block[e] = block;
          if (e == done.parent_edge) break;
        }
      }
    }
  }
  return out;
}

/// Connected, at least three vertices, no cut vertex.
inline bool is_two_connected(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  auto blocks = biconnected_blocks(g);
  return std::none_of(blocks.is_cut_vertex.begin(), blocks.is_cut_vertex.end(),
                      [](bool b) { return b; });
}

inline Graph delete_edge(const Graph& g, EdgeId e) {
  int idx = g.edge_index(e);
  if (idx < 0) {
    throw GraphError("missing edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")");
  }
  std::vector<EdgeId> edges;
  edges.reserve(g.edges().size() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i != idx) edges.push_back(g.edge(i));
  }
  return Graph(g.vertex_count(), edges);
}

inline Graph add_edge(const Graph& g, EdgeId e) {
  if (g.has_edge(e.lo, e.hi)) throw GraphError("edge already present");
  std::vector<EdgeId> edges = g.edges();
  edges.push_back(e);
  return Graph(g.vertex_count(), edges);
}

/// Subgraph induced on the vertices with keep[v] set, re-indexed densely
/// in increasing old-id order.
inline Reindexed induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  Reindexed out;
  out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep.at(static_cast<std::size_t>(v))) {
      out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<EdgeId> edges;
  for (const auto& e : g.edges()) {
    int a = out.old_to_new[e.lo], b = out.old_to_new[e.hi];
    if (a >= 0 && b >= 0) edges.push_back(make_edge(a, b));
  }
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

/// Replace the path u-v-w through the 2-vertex v by the single edge uw.
inline Reindexed suppress_degree2(const Graph& g, Vertex v) {
  if (g.degree(v) != 2) {
    throw GraphError("vertex " + std::to_string(v) + " has degree " +
                     std::to_string(g.degree(v)) + ", expected 2");
  }
  Vertex u = g.neighbors(v)[0], w = g.neighbors(v)[1];
  if (g.has_edge(u, w)) {
    throw GraphError("neighbors " + std::to_string(u) + " and " + std::to_string(w) +
                     " already adjacent; suppression would create a parallel edge");
  }
  std::vector<bool> keep(static_cast<std::size_t>(g.vertex_count()), true);
  keep[v] = false;
  Reindexed out = induced_subgraph(g, keep);
  out.graph = add_edge(out.graph, make_edge(out.old_to_new[u], out.old_to_new[w]));
  return out;
}

/// Induced subgraph on {v : d_G(v) >= 3}, degrees measured in g (one pass).
inline Reindexed strip_degree2(const Graph& g) {
  std::vector<bool> keep(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) keep[v] = g.degree(v) >= 3;
  return induced_subgraph(g, keep);
}

}  // namespace aecc

#endif  // AECC_GRAPH_HPP
