#ifndef AECC_COLORER_HPP
#define AECC_COLORER_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "aecc/coloring.hpp"
#include "aecc/configurations.hpp"
#include "aecc/embedding.hpp"
#include "aecc/graph.hpp"
#include "aecc/oracle.hpp"

namespace aecc {

class NotPlanar : public std::runtime_error {
 public:
  NotPlanar() : std::runtime_error("graph is not planar") {}
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extension impossible with the requested palette. When the palette is at
/// least Delta + 5 on a planar graph this contradicts the bound; the
/// offending parent graph and child coloring are kept for a reproducer.
class ExtensionFailed : public std::runtime_error {
 public:
  ExtensionFailed(std::string what, Graph parent, EdgeColoring partial, bool contradiction)
      : std::runtime_error(std::move(what)),
        parent(std::move(parent)),
        partial(std::move(partial)),
        contradiction(contradiction) {}

  Graph parent;
  EdgeColoring partial;
  bool contradiction;
};

struct ColorerBudget {
  int search_depth = 4;
  long search_nodes = 20'000;
  OracleBudget local{200'000, 10.0};
  OracleBudget exhaustive{50'000'000, 120.0};
};

enum class ReductionKind { BaseDistinct, MergeA11, MergeA22, DeleteEdge };

inline std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::BaseDistinct: return "base";
    case ReductionKind::MergeA11: return "merge-A1.1";
    case ReductionKind::MergeA22: return "merge-A2.2";
    case ReductionKind::DeleteEdge: return "delete-edge";
  }
  return "?";
}

/// One reduction. Vertex ids are shared by parent and child; a merged
/// vertex stays in the child as an isolated vertex.
struct ReductionStep {
  ReductionKind kind = ReductionKind::DeleteEdge;
  std::string tag;  ///< configuration name, or "none"
  std::vector<Vertex> witness;
  std::vector<EdgeId> removed;  ///< edges of the parent missing from the child
  std::vector<EdgeId> added;    ///< edges of the child missing from the parent
};

/// Rebuilds the parent graph from the child.
inline Graph invert(const Graph& child, const ReductionStep& step) {
  std::vector<EdgeId> edges;
  for (const auto& e : child.edges()) {
    if (std::find(step.added.begin(), step.added.end(), e) == step.added.end()) edges.push_back(e);
  }
  edges.insert(edges.end(), step.removed.begin(), step.removed.end());
  return Graph(child.vertex_count(), edges);
}

inline std::pair<Graph, ReductionStep> reduce(const Graph& g, const Configuration& cfg) {
  if (!holds(g, cfg)) throw GraphError("configuration " + std::string(tag_name(cfg.tag)) + " is stale");
  ReductionStep step;
  step.tag = tag_name(cfg.tag);
  step.witness = cfg.witness;
  const auto& w = cfg.witness;
  if (cfg.tag == Tag::A1_1) {
    Vertex u = w[0], v = w[1], x = w[2];
    step.kind = ReductionKind::MergeA11;
    step.removed = {make_edge(u, v), make_edge(v, x)};
    step.added = {make_edge(u, x)};
  } else if (cfg.tag == Tag::A2_2 && !g.has_edge(w[2], w[3])) {
    Vertex u = w[0], v = w[1], v1 = w[2], v2 = w[3];
    step.kind = ReductionKind::MergeA22;
    step.removed = {make_edge(u, v), make_edge(v, v1), make_edge(v, v2)};
    step.added = {make_edge(v1, v2)};
  } else {
    step.kind = ReductionKind::DeleteEdge;
    step.removed = {make_edge(w[0], w[1])};
  }
  std::vector<EdgeId> edges;
  for (const auto& e : g.edges()) {
    if (std::find(step.removed.begin(), step.removed.end(), e) == step.removed.end()) edges.push_back(e);
  }
  edges.insert(edges.end(), step.added.begin(), step.added.end());
  return {Graph(g.vertex_count(), edges), std::move(step)};
}

/// Reduction used when no configuration is present: drop an edge at a
/// vertex of minimum positive degree (lowest id, then lowest neighbor).
inline std::pair<Graph, ReductionStep> reduce_fallback(const Graph& g) {
  Vertex best = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0 && (best < 0 || g.degree(v) < g.degree(best))) best = v;
  }
  if (best < 0) throw GraphError("no edge to remove");
  ReductionStep step;
  step.kind = ReductionKind::DeleteEdge;
  step.tag = "none";
  step.witness = {best, g.neighbors(best)[0]};
  step.removed = {make_edge(best, g.neighbors(best)[0])};
  return {delete_edge(g, step.removed[0]), std::move(step)};
}

struct TraceStep {
  int block = 0;
  std::string tag;
  ReductionKind kind = ReductionKind::DeleteEdge;
  std::string rung;
  long nodes = 0;
};

struct ColoringRun {
  EdgeColoring coloring{1, 0};
  int palette = 0;
  int block_count = 0;
  std::vector<TraceStep> trace;
};

namespace detail {

/// Moves a coloring indexed by one graph's edges onto another graph that
/// shares its vertex ids; edges absent from `from` stay uncolored.
inline EdgeColoring transfer(const Graph& from, const EdgeColoring& c, const Graph& to, int palette) {
  EdgeColoring out(palette, to.edge_count());
  for (int e = 0; e < to.edge_count(); ++e) {
    const auto& ed = to.edge(e);
    int i = from.edge_index(ed.lo, ed.hi);
    if (i >= 0) out.set(e, c[i]);
  }
  return out;
}

inline bool verified(const Graph& g, const EdgeColoring& c) {
  return c.is_total() && !check_acyclic(g, c);
}

/// Completes `partial` on g by exhaustive search, first freeing only the
/// edges near `focus` (growing radius), then everything.
inline std::optional<EdgeColoring> complete_exhaustively(const Graph& g, const EdgeColoring& partial,
                                                         const std::vector<Vertex>& focus,
                                                         const ColorerBudget& budget, std::string& rung,
                                                         long& nodes, bool& budget_hit) {
  const int k = partial.palette_size();
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue;
  for (Vertex f : focus) {
    if (dist[f] == -1) {
      dist[f] = 0;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (int radius = 0; radius <= 3; ++radius) {
    CompletionOptions opt;
    opt.precolored = partial.colors();
    opt.hint = partial.colors();
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      int d = std::min(dist[ed.lo] < 0 ? kUnbounded : dist[ed.lo], dist[ed.hi] < 0 ? kUnbounded : dist[ed.hi]);
      if (d < radius) opt.precolored[e] = kUncolored;
    }
    auto r = exists_acyclic_coloring(g, k, budget.local, opt);
    nodes += r.nodes;
    if (r.decision == Decision::Yes && verified(g, *r.coloring)) {
      rung = "local-exhaustive";
      return r.coloring;
    }
  }
  CompletionOptions opt;
  opt.hint = partial.colors();
  auto r = exists_acyclic_coloring(g, k, budget.exhaustive, opt);
  nodes += r.nodes;
  if (r.decision == Decision::Yes && verified(g, *r.coloring)) {
    rung = "exhaustive";
    return r.coloring;
  }
  budget_hit = r.decision == Decision::BudgetExceeded;
  return std::nullopt;
}

/// Candidate colors for re-inserting uv into a coloring of the child.
struct ExtendContext {
  std::set<Color> cu, cv, a, t;
};

inline ExtendContext extend_context(const Graph& child, const EdgeColoring& c, Vertex u, Vertex v) {
  ExtendContext x;
  x.cu = color_set(child, c, u);
  x.cv = color_set(child, c, v);
  for (Color i : x.cu) {
    if (x.cv.count(i)) x.a.insert(i);
  }
  for (Color j = 1; j <= c.palette_size(); ++j) {
    if (!x.cu.count(j) && !x.cv.count(j)) x.t.insert(j);
  }
  return x;
}

/// Colors of T_uv that no (i, j)-path from u to v blocks, for i in A_uv.
inline std::optional<Color> safe_color(const Graph& child, const EdgeColoring& c, Vertex u, Vertex v,
                                       const ExtendContext& x) {
  for (Color j : x.t) {
    bool ok = std::none_of(x.a.begin(), x.a.end(), [&](Color i) { return exists_ab_path(child, c, u, v, i, j); });
    if (ok) return j;
  }
  return std::nullopt;
}

/// Distance to a state where a free or safe color exists.
inline int heuristic(const Graph& child, const EdgeColoring& c, Vertex u, Vertex v, int palette) {
  ExtendContext x = extend_context(child, c, u, v);
  if (x.t.empty()) {
    int overflow = static_cast<int>(x.cu.size() + x.cv.size() - x.a.size()) - palette + 1;
    return static_cast<int>(x.a.size()) + 1 + overflow;
  }
  int best = kUnbounded;
  for (Color j : x.t) {
    int blocking = 0;
    for (Color i : x.a) blocking += exists_ab_path(child, c, u, v, i, j) ? 1 : 0;
    best = std::min(best, blocking);
  }
  return best;
}

inline bool recolor_ok(const Graph& g, const EdgeColoring& c, int e, Color col) {
  const auto& ed = g.edge(e);
  for (Vertex x : {ed.lo, ed.hi}) {
    for (int f : g.incident_edges(x)) {
      if (f != e && c[f] == col) return false;
    }
  }
  return true;
}

/// Best-first search over single-edge recolorings at u or v and Kempe
/// swaps at u or v, until a free or safe color for uv appears.
inline std::optional<EdgeColoring> search_extension(const Graph& child, const EdgeColoring& start,
                                                    const Graph& parent, int uv_parent, Vertex u, Vertex v,
                                                    const ColorerBudget& budget, long& nodes) {
  struct Node {
    int h;
    int depth;
    long seq;
    EdgeColoring c;
  };
  auto worse = [](const Node& a, const Node& b) {
    return std::tie(a.h, a.depth, a.seq) > std::tie(b.h, b.depth, b.seq);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);
  std::set<std::vector<Color>> seen;
  const int palette = start.palette_size();
  long seq = 0;
  open.push({heuristic(child, start, u, v, palette), 0, seq++, start});
  seen.insert(start.colors());

  auto try_finish = [&](const EdgeColoring& c) -> std::optional<EdgeColoring> {
    ExtendContext x = extend_context(child, c, u, v);
    std::optional<Color> j;
    if (x.a.empty() && !x.t.empty()) j = *x.t.begin();
    if (!j) j = safe_color(child, c, u, v, x);
    if (!j) return std::nullopt;
    EdgeColoring out = transfer(child, c, parent, palette);
    out.set(uv_parent, *j);
    if (verified(parent, out)) return out;
    return std::nullopt;
  };

  while (!open.empty() && nodes < budget.search_nodes) {
    Node cur = open.top();
    open.pop();
    ++nodes;
    if (cur.depth > 0) {
      if (auto done = try_finish(cur.c)) return done;
    }
    if (cur.depth >= budget.search_depth) continue;

    std::vector<EdgeColoring> children;
    for (Vertex x : {u, v}) {
      for (int e : child.incident_edges(x)) {
        for (Color col = 1; col <= palette; ++col) {
          if (col == cur.c[e] || !recolor_ok(child, cur.c, e, col)) continue;
          EdgeColoring next = cur.c;
          next.set(e, col);
          if (!on_bichromatic_cycle(child, next, e)) children.push_back(std::move(next));
        }
      }
      for (Color a : color_set(child, cur.c, x)) {
        for (Color b = 1; b <= palette; ++b) {
          if (b == a) continue;
          EdgeColoring next = kempe_swap(child, cur.c, x, a, b);
          bool ok = true;
          for (int e = 0; e < child.edge_count() && ok; ++e) {
            if (next[e] != cur.c[e] && on_bichromatic_cycle(child, next, e)) ok = false;
          }
          if (ok) children.push_back(std::move(next));
        }
      }
    }
    for (auto& next : children) {
      if (!seen.insert(next.colors()).second) continue;
      int h = heuristic(child, next, u, v, palette);
      open.push({h, cur.depth + 1, seq++, std::move(next)});
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct ExtendResult {
  EdgeColoring coloring;
  std::string rung;
  long nodes = 0;
};

/// Colors the parent of `step` from an acyclic coloring of the child.
inline ExtendResult extend(const Graph& child, const EdgeColoring& c_child, const ReductionStep& step,
                           const ColorerBudget& budget = {}) {
  const Graph parent = invert(child, step);
  const int palette = c_child.palette_size();
  ExtendResult out{EdgeColoring(palette, parent.edge_count()), "", 0};
  bool budget_hit = false;
  std::vector<Vertex> focus;
  EdgeColoring partial = detail::transfer(child, c_child, parent, palette);

  if (step.kind == ReductionKind::MergeA11) {
    Vertex u = step.witness[0], v = step.witness[1], x = step.witness[2];
    Color merged = c_child[child.edge_index(u, x)];
    partial.set(parent.edge_index(v, x), merged);
    std::set<Color> at_u = color_set(child, c_child, u);
    for (Color col = 1; col <= palette; ++col) {
      if (!at_u.count(col)) {
        partial.set(parent.edge_index(u, v), col);
        break;
      }
    }
    if (detail::verified(parent, partial)) {
      out.coloring = partial;
      out.rung = "lift";
      return out;
    }
    focus = {u, v, x};
  } else if (step.kind == ReductionKind::MergeA22) {
    Vertex v = step.witness[1];
    CompletionOptions opt;
    opt.precolored = partial.colors();
    auto r = exists_acyclic_coloring(parent, palette, budget.local, opt);
    out.nodes += r.nodes;
    if (r.decision == Decision::Yes && detail::verified(parent, *r.coloring)) {
      out.coloring = *r.coloring;
      out.rung = "lift";
      return out;
    }
    focus = {v, step.witness[0], step.witness[2], step.witness[3]};
  } else {
    Vertex u = step.removed[0].lo, v = step.removed[0].hi;
    int uv = parent.edge_index(u, v);
    auto x = detail::extend_context(child, c_child, u, v);
    auto attempt = [&](Color j, const char* rung) {
      EdgeColoring c = partial;
      c.set(uv, j);
      if (!detail::verified(parent, c)) return false;
      out.coloring = std::move(c);
      out.rung = rung;
      return true;
    };
    if (x.a.empty() && !x.t.empty() && attempt(*x.t.begin(), "free")) return out;
    if (auto j = detail::safe_color(child, c_child, u, v, x); j && attempt(*j, "safe")) return out;
    if (auto found = detail::search_extension(child, c_child, parent, uv, u, v, budget, out.nodes)) {
      out.coloring = *found;
      out.rung = "search";
      return out;
    }
    focus = {u, v};
  }

  std::string rung;
  if (auto c = detail::complete_exhaustively(parent, partial, focus, budget, rung, out.nodes, budget_hit)) {
    out.coloring = *c;
    out.rung = rung;
    return out;
  }
  if (budget_hit) throw BudgetExceeded("exhaustive extension ran out of budget");
  bool contradiction = !parent.empty() && palette >= max_degree(parent) + 5 && is_planar(parent);
  throw ExtensionFailed(contradiction ? "no acyclic extension exists although the palette is Delta + 5"
                                      : "no acyclic extension exists with the requested palette",
                        parent, partial, contradiction);
}

namespace detail {

/// Core induction on one graph with a fixed palette.
inline EdgeColoring color_connected(const Graph& g, int palette, const ColorerBudget& budget,
                                    std::vector<TraceStep>& trace, int block, const DetectOptions& dopt) {
  std::vector<std::pair<Graph, ReductionStep>> stack;
  Graph cur = g;
  while (cur.edge_count() > palette) {
    auto cfg = find_any_configuration(cur, dopt);
    auto reduced = cfg ? reduce(cur, *cfg) : reduce_fallback(cur);
    stack.emplace_back(std::move(cur), std::move(reduced.second));
    cur = std::move(reduced.first);
  }
  EdgeColoring c(palette, cur.edge_count());
  for (int e = 0; e < cur.edge_count(); ++e) c.set(e, e + 1);
  trace.push_back({block, "none", ReductionKind::BaseDistinct, "base", 0});
  while (!stack.empty()) {
    auto& [parent, step] = stack.back();
    ExtendResult r = extend(cur, c, step, budget);
    trace.push_back({block, step.tag, step.kind, r.rung, r.nodes});
    c = std::move(r.coloring);
    cur = std::move(parent);
    stack.pop_back();
  }
  return c;
}

}  // namespace detail

struct ColorOptions {
  /// 0 means Delta + 5.
  int palette = 0;
  ColorerBudget budget;
  DetectOptions detect;
};

/// Acyclic edge coloring of a planar graph with at most palette colors.
/// Graphs that are not 2-connected are colored block by block and the
/// block palettes are permuted apart at cut vertices.
inline ColoringRun color_planar(const Graph& g, const ColorOptions& opt = {}) {
  if (!is_planar(g)) throw NotPlanar();
  ColoringRun run;
  run.palette = opt.palette > 0 ? opt.palette : (g.empty() || g.edge_count() == 0 ? 5 : max_degree(g) + 5);
  run.coloring = EdgeColoring(run.palette, g.edge_count());
  if (g.edge_count() == 0) return run;
  if (g.edge_count() > 0 && run.palette < max_degree(g)) {
    throw ExtensionFailed("palette smaller than Delta", g, run.coloring, false);
  }

  if (is_two_connected(g)) {
    run.block_count = 1;
    run.coloring = detail::color_connected(g, run.palette, opt.budget, run.trace, 0, opt.detect);
    return run;
  }

  BlockDecomposition bd = biconnected_blocks(g);
  run.block_count = bd.block_count;
  std::vector<std::vector<int>> block_edges(static_cast<std::size_t>(bd.block_count));
  for (int e = 0; e < g.edge_count(); ++e) block_edges[bd.edge_block[e]].push_back(e);

  // block-cut tree walk: blocks sharing a vertex with a placed block are
  // placed next, lowest block id first
  std::vector<std::vector<int>> blocks_at(static_cast<std::size_t>(g.vertex_count()));
  for (int b = 0; b < bd.block_count; ++b) {
    std::set<Vertex> vs;
    for (int e : block_edges[b]) {
      vs.insert(g.edge(e).lo);
      vs.insert(g.edge(e).hi);
    }
    for (Vertex x : vs) blocks_at[x].push_back(b);
  }
  std::vector<bool> placed(static_cast<std::size_t>(bd.block_count), false);
  for (int root = 0; root < bd.block_count; ++root) {
    if (placed[root]) continue;
    std::deque<int> queue{root};
    placed[root] = true;
    while (!queue.empty()) {
      int b = queue.front();
      queue.pop_front();
      std::vector<EdgeId> local_edges;
      std::map<Vertex, Vertex> to_local;
      std::vector<Vertex> to_global;
      auto local = [&](Vertex x) {
        auto [it, inserted] = to_local.emplace(x, static_cast<Vertex>(to_global.size()));
        if (inserted) to_global.push_back(x);
        return it->second;
      };
      for (int e : block_edges[b]) local_edges.push_back(make_edge(local(g.edge(e).lo), local(g.edge(e).hi)));
      Graph bg(static_cast<int>(to_global.size()), local_edges);
      EdgeColoring bc = detail::color_connected(bg, run.palette, opt.budget, run.trace, b, opt.detect);

      // permute bc so its colors at already-colored vertices avoid theirs
      std::vector<Color> perm(static_cast<std::size_t>(run.palette) + 1);
      for (Color col = 0; col <= run.palette; ++col) perm[col] = col;
      for (Vertex lx = 0; lx < bg.vertex_count(); ++lx) {
        std::set<Color> s = color_set(g, run.coloring, to_global[lx]);
        if (s.empty()) continue;
        std::set<Color> t;
        for (Color col : color_set(bg, bc, lx)) t.insert(perm[col]);
        for (Color clash : std::set<Color>(t)) {
          if (!s.count(clash)) continue;
          Color fresh = 1;
          while (s.count(fresh) || t.count(fresh)) ++fresh;
          if (fresh > run.palette) {
            throw ExtensionFailed("palette too small to merge blocks at a cut vertex", g, run.coloring, false);
          }
          // swap clash and fresh in the permutation
          for (Color& p : perm) {
            if (p == clash) {
              p = fresh;
            } else if (p == fresh) {
              p = clash;
            }
          }
          t.erase(clash);
          t.insert(fresh);
        }
      }
      for (int i = 0; i < bg.edge_count(); ++i) {
        const auto& le = bg.edge(i);
        run.coloring.set(g.edge_index(to_global[le.lo], to_global[le.hi]), perm[bc[i]]);
      }
      for (Vertex gx : to_global) {
        for (int nb : blocks_at[gx]) {
          if (!placed[nb]) {
            placed[nb] = true;
            queue.push_back(nb);
          }
        }
      }
    }
  }
  if (!detail::verified(g, run.coloring)) {
    throw ExtensionFailed("block recombination produced an invalid coloring", g, run.coloring, false);
  }
  return run;
}

}  // namespace aecc

#endif  // AECC_COLORER_HPP
