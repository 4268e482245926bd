#ifndef AECC_CORPUS_HPP
#define AECC_CORPUS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "aecc/embedding.hpp"
#include "aecc/graph.hpp"

namespace aecc {

/// std::mt19937_64 is fully specified by the standard; the library
/// distributions are not, so bounded draws are done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct EmbeddedGraph {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;
};

/// Random stacked (Apollonian) triangulation: start from a triangle and
/// repeatedly put a new vertex inside a uniformly chosen face.
inline EmbeddedGraph stacked_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw GraphError("stacked triangulation needs n >= 3");
  Rng rng(seed);
  using Tri = std::array<Vertex, 3>;
  std::vector<Tri> faces{{0, 1, 2}, {0, 2, 1}};
  std::vector<EdgeId> edges{make_edge(0, 1), make_edge(1, 2), make_edge(0, 2)};
  for (Vertex x = 3; x < n; ++x) {
    auto i = static_cast<std::size_t>(rng.below(faces.size()));
    Tri f = faces[i];
    faces[i] = {f[0], f[1], x};
    faces.push_back({f[1], f[2], x});
    faces.push_back({f[2], f[0], x});
    for (Vertex y : f) edges.push_back(make_edge(x, y));
  }
  EmbeddedGraph out{Graph(n, edges), {}};
  // face (a, b, c) traversed a->b->c; next(a->b) = b->c means c follows a
  // in the rotation at b
  std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
  for (const auto& f : faces) {
    for (int j = 0; j < 3; ++j) succ[f[(j + 1) % 3]][f[j]] = f[(j + 2) % 3];
  }
  out.rotation.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    Vertex start = out.graph.neighbors(v).front();
    Vertex w = start;
    do {
      out.rotation[v].push_back(w);
      w = succ[v].at(w);
    } while (w != start);
  }
  return out;
}

namespace detail {

inline Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<EdgeId> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<EdgeId> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back(make_edge(i, j));
  }
  return Graph(n, e);
}

/// Generalized Petersen graph GP(n, k).
inline Graph petersen(int n, int k) {
  std::vector<EdgeId> e;
  for (int i = 0; i < n; ++i) {
    e.push_back(make_edge(i, (i + 1) % n));
    e.push_back(make_edge(i, n + i));
    e.push_back(make_edge(n + i, n + (i + k) % n));
  }
  return Graph(2 * n, e);
}

inline int parse_size(const std::string& s, int lo) {
  int v = std::stoi(s);
  if (v < lo) throw GraphError("size " + s + " too small");
  return v;
}

}  // namespace detail

/// K3, K4, K5, C<n>, P<n>, star<n>, W<n> (n rim vertices, hub n), cube,
/// octahedron, icosahedron, dodecahedron, grid<m>x<n>.
inline Graph named(const std::string& name) {
  std::smatch m;
  if (name == "K3") return detail::complete_graph(3);
  if (name == "K4") return detail::complete_graph(4);
  if (name == "K5") return detail::complete_graph(5);
  if (std::regex_match(name, m, std::regex("C(\\d+)"))) return detail::cycle_graph(detail::parse_size(m[1], 3));
  if (std::regex_match(name, m, std::regex("P(\\d+)"))) {
    int n = detail::parse_size(m[1], 1);
    std::vector<EdgeId> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back(make_edge(i, i + 1));
    return Graph(n, e);
  }
  if (std::regex_match(name, m, std::regex("star(\\d+)"))) {
    int n = detail::parse_size(m[1], 1);
    std::vector<EdgeId> e;
    for (int i = 1; i <= n; ++i) e.push_back(make_edge(0, i));
    return Graph(n + 1, e);
  }
  if (std::regex_match(name, m, std::regex("W(\\d+)"))) {
    int n = detail::parse_size(m[1], 3);
    std::vector<EdgeId> e;
    for (int i = 0; i < n; ++i) {
      e.push_back(make_edge(i, (i + 1) % n));
      e.push_back(make_edge(i, n));
    }
    return Graph(n + 1, e);
  }
  if (name == "cube") {
    std::vector<EdgeId> e;
    for (int v = 0; v < 8; ++v) {
      for (int bit : {1, 2, 4}) {
        if (v < (v ^ bit)) e.push_back(make_edge(v, v ^ bit));
      }
    }
    return Graph(8, e);
  }
  if (name == "octahedron") {
    std::vector<EdgeId> e;
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        if (!(i % 2 == 0 && j == i + 1)) e.push_back(make_edge(i, j));
      }
    }
    return Graph(6, e);
  }
  if (name == "icosahedron") {
    std::vector<EdgeId> e;
    for (int i = 1; i <= 5; ++i) {
      int next = i % 5 + 1;
      e.push_back(make_edge(0, i));
      e.push_back(make_edge(i, next));
      e.push_back(make_edge(i, 6 + (i - 1) % 5));
      e.push_back(make_edge(i, 6 + i % 5));
      e.push_back(make_edge(5 + i, 5 + next));
      e.push_back(make_edge(5 + i, 11));
    }
    return Graph(12, e);
  }
  if (name == "dodecahedron") return detail::petersen(10, 2);
  if (std::regex_match(name, m, std::regex("grid(\\d+)x(\\d+)"))) {
    int r = detail::parse_size(m[1], 1), c = detail::parse_size(m[2], 1);
    std::vector<EdgeId> e;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        if (j + 1 < c) e.push_back(make_edge(i * c + j, i * c + j + 1));
        if (i + 1 < r) e.push_back(make_edge(i * c + j, (i + 1) * c + j));
      }
    }
    return Graph(r * c, e);
  }
  throw GraphError("unknown graph name '" + name + "'");
}

/// Subdivides each edge, in edge-index order, with probability p. New
/// vertices are numbered from vertex_count() upward.
inline Graph thin(const Graph& g, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("probability out of range");
  Rng rng(seed);
  std::vector<EdgeId> edges;
  int n = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (rng.unit() < p) {
      edges.push_back(make_edge(e.lo, n));
      edges.push_back(make_edge(n, e.hi));
      ++n;
    } else {
      edges.push_back(e);
    }
  }
  return Graph(n, edges);
}

struct CorpusEntry {
  std::string name;
  Graph graph;
  std::uint64_t seed = 0;
};

/// The fixed acceptance corpus: stacked triangulations with n = 4..200,
/// thinned copies of a subset of them, the named polyhedra and grids.
inline std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 1) {
  std::vector<CorpusEntry> out;
  for (int n = 4; n <= 200; n += (n < 40 ? 1 : 2)) {
    std::uint64_t s = seed * 1000003 + static_cast<std::uint64_t>(n);
    out.push_back({"stacked-" + std::to_string(n), stacked_triangulation(n, s).graph, s});
  }
  for (int n = 4; n <= 150; n += 4) {
    std::uint64_t s = seed * 1000003 + static_cast<std::uint64_t>(n);
    std::uint64_t t = s ^ 0x9e3779b97f4a7c15ULL;
    for (double p : {0.2, 0.5}) {
      out.push_back({"thin-" + std::to_string(n) + "-" + std::to_string(static_cast<int>(p * 10)),
                     thin(stacked_triangulation(n, s).graph, p, t), t});
    }
  }
  for (const char* name : {"K3", "K4", "C4", "C5", "C8", "W5", "W6", "W8", "W12", "cube", "octahedron",
                           "icosahedron", "dodecahedron", "grid3x3", "grid4x5", "grid6x6", "star6"}) {
    out.push_back({name, named(name), 0});
  }
  for (const char* name : {"cube", "octahedron", "icosahedron", "dodecahedron", "grid4x4"}) {
    std::uint64_t t = seed * 7919 + std::string(name).size();
    out.push_back({std::string("thin-") + name, thin(named(name), 0.3, t), t});
  }
  return out;
}

}  // namespace aecc

#endif  // AECC_CORPUS_HPP
