#ifndef AECC_COLORING_HPP
#define AECC_COLORING_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aecc/graph.hpp"

namespace aecc {

/// Palette colors are 1..k; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kUncolored = 0;

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial or total map from edge index (into Graph::edges()) to color.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int palette_size, int edge_count)
      : palette_(palette_size), colors_(static_cast<std::size_t>(edge_count), kUncolored) {
    if (palette_size < 1) throw ColoringError("palette size must be at least 1");
  }
  EdgeColoring(int palette_size, std::vector<Color> colors)
      : palette_(palette_size), colors_(std::move(colors)) {
    if (palette_size < 1) throw ColoringError("palette size must be at least 1");
    for (Color c : colors_) check_color(c);
  }

  int palette_size() const { return palette_; }
  int edge_count() const { return static_cast<int>(colors_.size()); }

  Color operator[](int edge) const { return colors_[static_cast<std::size_t>(edge)]; }
  Color at(int edge) const { return colors_.at(static_cast<std::size_t>(edge)); }

  void set(int edge, Color c) {
    check_color(c);
    colors_.at(static_cast<std::size_t>(edge)) = c;
  }

  bool is_total() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
  }

  /// Number of distinct colors actually used.
  int colors_used() const {
    std::set<Color> used(colors_.begin(), colors_.end());
    used.erase(kUncolored);
    return static_cast<int>(used.size());
  }

  const std::vector<Color>& colors() const { return colors_; }

  bool operator==(const EdgeColoring&) const = default;

 private:
  void check_color(Color c) const {
    if (c < 0 || c > palette_) {
      throw ColoringError("color " + std::to_string(c) + " outside palette 1.." +
                          std::to_string(palette_));
    }
  }

  int palette_ = 1;
  std::vector<Color> colors_;
};

/// A failed check. Proper: two edges sharing `cycle[0]` have `color_a`.
/// Bichromatic: `cycle` is a closed vertex sequence (first vertex not
/// repeated) whose edges alternate color_a and color_b.
struct Violation {
  enum class Kind { Proper, Bichromatic };
  Kind kind = Kind::Proper;
  std::vector<Vertex> cycle;
  std::vector<EdgeId> edges;
  Color color_a = kUncolored;
  Color color_b = kUncolored;
};

/// std::nullopt means Ok.
using CheckResult = std::optional<Violation>;

namespace detail {

inline void require_match(const Graph& g, const EdgeColoring& c) {
  if (c.edge_count() != g.edge_count()) {
    throw ColoringError("coloring covers " + std::to_string(c.edge_count()) +
                        " edges, graph has " + std::to_string(g.edge_count()));
  }
}

/// Neighbor of v across the edge colored col, or -1.
inline Vertex follow(const Graph& g, const EdgeColoring& c, Vertex v, Color col) {
  const auto& nb = g.neighbors(v);
  const auto& inc = g.incident_edges(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (c[inc[i]] == col) return nb[i];
  }
  return -1;
}

/// Disjoint-set forest with path halving.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }
  void reset(int x) { parent_[x] = x; }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

inline CheckResult check_proper(const Graph& g, const EdgeColoring& c) {
  detail::require_match(g, c);
  if (!c.is_total()) throw ColoringError("coloring is partial");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (c[inc[i]] == c[inc[j]]) {
          Violation out;
          out.kind = Violation::Kind::Proper;
          out.cycle = {v};
          out.edges = {g.edge(inc[i]), g.edge(inc[j])};
          out.color_a = c[inc[i]];
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

/// Same as check_proper but tolerates uncolored edges.
inline bool is_proper_partial(const Graph& g, const EdgeColoring& c) {
  detail::require_match(g, c);
  std::vector<char> seen(static_cast<std::size_t>(c.palette_size()) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool ok = true;
    for (int e : g.incident_edges(v)) {
      Color col = c[e];
      if (col == kUncolored) continue;
      if (seen[col]) ok = false;
      seen[col] = 1;
    }
    for (int e : g.incident_edges(v)) seen[c[e]] = 0;
    if (!ok) return false;
  }
  return true;
}

struct BichromaticCycle {
  std::vector<Vertex> cycle;
  Color color_a = kUncolored;
  Color color_b = kUncolored;
};

/// First bichromatic cycle over color pairs (a, b), a < b, in lexicographic
/// order. Requires a proper coloring; uncolored edges are ignored.
inline std::optional<BichromaticCycle> find_bichromatic_cycle(const Graph& g, const EdgeColoring& c) {
  detail::require_match(g, c);
  if (!is_proper_partial(g, c)) throw ColoringError("coloring is not proper");
  const int k = c.palette_size();
  std::vector<std::vector<int>> by_color(static_cast<std::size_t>(k) + 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (c[e] != kUncolored) by_color[c[e]].push_back(e);
  }
  detail::UnionFind uf(g.vertex_count());
  for (Color a = 1; a <= k; ++a) {
    if (by_color[a].size() < 2) continue;
    for (Color b = a + 1; b <= k; ++b) {
      if (by_color[b].size() < 2) continue;
      // Each color class is a matching, so the union is paths and even cycles.
      int closing = -1;
      for (Color col : {a, b}) {
        for (int e : by_color[col]) {
          const auto& ed = g.edge(e);
          if (!uf.unite(ed.lo, ed.hi) && closing < 0) closing = e;
        }
      }
      for (Color col : {a, b}) {
        for (int e : by_color[col]) {
          uf.reset(g.edge(e).lo);
          uf.reset(g.edge(e).hi);
        }
      }
      if (closing < 0) continue;
      const auto& ed = g.edge(closing);
      BichromaticCycle out{{ed.lo}, a, b};
      Vertex cur = ed.hi;
      Color next = c[closing] == a ? b : a;
      while (cur != ed.lo) {
        out.cycle.push_back(cur);
        cur = detail::follow(g, c, cur, next);
        next = next == a ? b : a;
      }
      return out;
    }
  }
  return std::nullopt;
}

inline CheckResult check_acyclic(const Graph& g, const EdgeColoring& c) {
  if (auto v = check_proper(g, c)) return v;
  if (auto cyc = find_bichromatic_cycle(g, c)) {
    Violation out;
    out.kind = Violation::Kind::Bichromatic;
    out.cycle = cyc->cycle;
    for (std::size_t i = 0; i < cyc->cycle.size(); ++i) {
      out.edges.push_back(make_edge(cyc->cycle[i], cyc->cycle[(i + 1) % cyc->cycle.size()]));
    }
    out.color_a = cyc->color_a;
    out.color_b = cyc->color_b;
    return out;
  }
  return std::nullopt;
}

/// C(v): colors on the colored edges at v.
inline std::set<Color> color_set(const Graph& g, const EdgeColoring& c, Vertex v) {
  std::set<Color> out;
  for (int e : g.incident_edges(v)) {
    if (c[e] != kUncolored) out.insert(c[e]);
  }
  return out;
}

/// Vertex sequence of an alternating path plus the color of each edge.
struct AlternatingPath {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  bool empty() const { return colors.empty(); }
  int length() const { return static_cast<int>(colors.size()); }
};

namespace detail {

/// Walk from start along `first`, then alternate with `second`, until the
/// walk stops or returns to start.
inline AlternatingPath walk(const Graph& g, const EdgeColoring& c, Vertex start, Color first,
                            Color second) {
  AlternatingPath p;
  p.vertices.push_back(start);
  Vertex cur = start;
  Color col = first;
  Vertex prev = -1;
  for (int steps = 0; steps <= g.edge_count(); ++steps) {
    Vertex nxt = follow(g, c, cur, col);
    if (nxt < 0 || nxt == prev) break;
    p.vertices.push_back(nxt);
    p.colors.push_back(col);
    if (nxt == start) break;
    prev = cur;
    cur = nxt;
    col = col == first ? second : first;
  }
  return p;
}

}  // namespace detail

/// The maximal path from u whose edges alternate a and b. Empty if u sees
/// neither color. Throws if u sees both (u is then interior to the path).
inline AlternatingPath maximal_ab_path(const Graph& g, const EdgeColoring& c, Vertex u, Color a, Color b) {
  detail::require_match(g, c);
  g.require_vertex(u);
  bool has_a = detail::follow(g, c, u, a) >= 0;
  bool has_b = detail::follow(g, c, u, b) >= 0;
  if (has_a && has_b) {
    throw ColoringError("both colors " + std::to_string(a) + " and " + std::to_string(b) +
                        " present at vertex " + std::to_string(u));
  }
  if (!has_a && !has_b) return AlternatingPath{{u}, {}};
  return has_a ? detail::walk(g, c, u, a, b) : detail::walk(g, c, u, b, a);
}

/// True iff an (a, b)-alternating path joins u and w. When u sees both
/// colors the two walks leaving u are both followed.
inline bool exists_ab_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex w, Color a, Color b) {
  detail::require_match(g, c);
  g.require_vertex(u);
  g.require_vertex(w);
  if (u == w) return false;
  for (auto [first, second] : {std::pair{a, b}, std::pair{b, a}}) {
    auto p = detail::walk(g, c, u, first, second);
    if (std::find(p.vertices.begin() + 1, p.vertices.end(), w) != p.vertices.end()) return true;
  }
  return false;
}

/// B_i = {j != i : an (i, j)-path joins us and vt}.
inline std::set<Color> b_set(const Graph& g, const EdgeColoring& c, Vertex us, Vertex vt, Color i) {
  std::set<Color> out;
  for (Color j = 1; j <= c.palette_size(); ++j) {
    if (j != i && exists_ab_path(g, c, us, vt, i, j)) out.insert(j);
  }
  return out;
}

/// Exchange a and b on the (a, b)-component containing u.
inline EdgeColoring kempe_swap(const Graph& g, const EdgeColoring& c, Vertex u, Color a, Color b) {
  detail::require_match(g, c);
  g.require_vertex(u);
  EdgeColoring out = c;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    const auto& nb = g.neighbors(v);
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Color col = c[inc[i]];
      if (col != a && col != b) continue;
      out.set(inc[i], col == a ? b : a);
      if (!seen[nb[i]]) {
        seen[nb[i]] = 1;
        stack.push_back(nb[i]);
      }
    }
  }
  return out;
}

/// Whether edge e (colored) lies on a bichromatic cycle. Assumes the
/// coloring restricted to the other edges has no bichromatic cycle.
inline bool on_bichromatic_cycle(const Graph& g, const EdgeColoring& c, int e) {
  const auto& ed = g.edge(e);
  Color col = c[e];
  if (col == kUncolored) return false;
  for (int f : g.incident_edges(ed.lo)) {
    Color d = c[f];
    if (f == e || d == kUncolored || d == col) continue;
    if (detail::follow(g, c, ed.hi, d) < 0) continue;
    // walk lo -d-> ... alternating (d, col); reaching hi closes a cycle
    Vertex cur = ed.lo;
    Color step = d;
    while (true) {
      Vertex nxt = detail::follow(g, c, cur, step);
      if (nxt < 0) break;
      if (nxt == ed.hi && step == d) return true;
      if (nxt == ed.lo) break;
      cur = nxt;
      step = step == d ? col : d;
    }
  }
  return false;
}

}  // namespace aecc

#endif  // AECC_COLORING_HPP
