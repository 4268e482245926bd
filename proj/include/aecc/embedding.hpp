#ifndef AECC_EMBEDDING_HPP
#define AECC_EMBEDDING_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "aecc/graph.hpp"

namespace aecc {

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A face as the closed walk of its darts. degree counts cut edges twice.
struct Face {
  std::vector<Vertex> boundary;
  int degree = 0;
};

/// Combinatorial embedding: for every vertex the cyclic order of its
/// neighbors. Darts are numbered 2e (lo->hi) and 2e+1 (hi->lo) for edge
/// index e; the face to the left of dart u->v continues with v->w where w
/// follows u in the rotation at v.
class PlaneEmbedding {
 public:
  /// Validates the rotation (each vertex lists each neighbor once) and
  /// Euler's formula for connected graphs. Throws EmbeddingError.
  PlaneEmbedding(Graph graph, std::vector<std::vector<Vertex>> rotation)
      : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    validate_rotation();
    trace_faces();
    if (is_connected(graph_)) {
      long euler = static_cast<long>(graph_.vertex_count()) - graph_.edge_count() +
                   static_cast<long>(faces_.size());
      if (graph_.vertex_count() > 0 && euler != 2) {
        throw EmbeddingError("rotation system is not planar: V - E + F = " +
                             std::to_string(euler));
      }
    }
  }

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  int dart(Vertex from, Vertex to) const {
    int e = graph_.edge_index(from, to);
    if (e < 0) throw GraphError("missing edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
    return 2 * e + (from < to ? 0 : 1);
  }
  Vertex dart_tail(int d) const {
    const auto& e = graph_.edge(d / 2);
    return d % 2 == 0 ? e.lo : e.hi;
  }
  Vertex dart_head(int d) const {
    const auto& e = graph_.edge(d / 2);
    return d % 2 == 0 ? e.hi : e.lo;
  }
  int face_of_dart(int d) const { return dart_face_.at(static_cast<std::size_t>(d)); }

  /// Faces incident with v, without repetition, in rotation order.
  std::vector<int> faces_at(Vertex v) const {
    std::vector<int> out;
    for (Vertex w : graph_.neighbors(v)) {
      int f = face_of_dart(dart(v, w));
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    if (graph_.degree(v) == 0 && faces_.size() == 1) out.push_back(0);
    return out;
  }

  /// Face on the other side of edge xy from face f; f itself when xy is a
  /// cut edge. Throws if xy does not bound f.
  int across(int f, Vertex x, Vertex y) const {
    int d1 = dart(x, y), d2 = dart(y, x);
    int f1 = face_of_dart(d1), f2 = face_of_dart(d2);
    if (f1 == f) return f2;
    if (f2 == f) return f1;
    throw EmbeddingError("edge does not bound the given face");
  }

 private:
  void validate_rotation() {
    if (static_cast<int>(rotation_.size()) != graph_.vertex_count()) {
      throw EmbeddingError("rotation lists " + std::to_string(rotation_.size()) +
                           " vertices, graph has " + std::to_string(graph_.vertex_count()));
    }
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
      std::vector<Vertex> sorted = rotation_[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != graph_.neighbors(v)) {
        throw EmbeddingError("rotation at vertex " + std::to_string(v) +
                             " is not a permutation of its neighbors");
      }
    }
    position_.assign(static_cast<std::size_t>(2 * graph_.edge_count()), 0);
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
        position_[dart(v, rotation_[v][i])] = static_cast<int>(i);
      }
    }
  }

  int next_dart(int d) const {
    Vertex u = dart_tail(d), v = dart_head(d);
    const auto& rot = rotation_[v];
    int pos = position_[dart(v, u)];
    Vertex w = rot[(static_cast<std::size_t>(pos) + 1) % rot.size()];
    return dart(v, w);
  }

  void trace_faces() {
    const int darts = 2 * graph_.edge_count();
    dart_face_.assign(static_cast<std::size_t>(darts), -1);
    for (int start = 0; start < darts; ++start) {
      if (dart_face_[start] != -1) continue;
      Face face;
      int id = static_cast<int>(faces_.size());
      int d = start;
      do {
        dart_face_[d] = id;
        face.boundary.push_back(dart_tail(d));
        d = next_dart(d);
      } while (d != start);
      face.degree = static_cast<int>(face.boundary.size());
      faces_.push_back(std::move(face));
    }
    if (darts == 0 && graph_.vertex_count() > 0) faces_.push_back(Face{});
  }

  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<int> position_;
  std::vector<int> dart_face_;
  std::vector<Face> faces_;
};

namespace detail {

using BoostPlanarGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

inline BoostPlanarGraph to_boost(const Graph& g) {
  BoostPlanarGraph bg(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) boost::add_edge(e.lo, e.hi, bg);
  auto index = boost::get(boost::edge_index, bg);
  int i = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(index, *it, i++);
  return bg;
}

}  // namespace detail

/// Boyer-Myrvold planarity test; works on disconnected graphs too.
inline bool is_planar(const Graph& g) {
  if (g.edge_count() < 9 || g.vertex_count() < 5) return true;
  auto bg = detail::to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Rotation system for a connected planar graph; std::nullopt if g is not
/// planar. The embedding is whatever the planarity test produces.
inline std::optional<PlaneEmbedding> embed(const Graph& g) {
  if (!is_connected(g)) throw EmbeddingError("embed requires a connected graph");
  using Edge = boost::graph_traits<detail::BoostPlanarGraph>::edge_descriptor;
  auto bg = detail::to_boost(g);
  std::vector<std::vector<Edge>> order(static_cast<std::size_t>(g.vertex_count()));
  using Map = boost::iterator_property_map<
      std::vector<std::vector<Edge>>::iterator,
      boost::property_map<detail::BoostPlanarGraph, boost::vertex_index_t>::type>;
  Map embedding(order.begin(), boost::get(boost::vertex_index, bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding);
  if (!planar) return std::nullopt;
  std::vector<std::vector<Vertex>> rotation(order.size());
  for (std::size_t v = 0; v < order.size(); ++v) {
    for (const auto& e : order[v]) {
      auto s = static_cast<Vertex>(boost::source(e, bg));
      auto t = static_cast<Vertex>(boost::target(e, bg));
      rotation[v].push_back(s == static_cast<Vertex>(v) ? t : s);
    }
  }
  return PlaneEmbedding(g, std::move(rotation));
}

inline std::vector<Face> faces(const PlaneEmbedding& e) { return e.faces(); }

/// m_3(v): number of distinct 3-faces incident with v.
inline int incident_3faces(const PlaneEmbedding& e, Vertex v) {
  e.graph().require_vertex(v);
  int count = 0;
  for (int f : e.faces_at(v)) {
    if (e.faces()[f].degree == 3) ++count;
  }
  return count;
}

/// The two faces on either side of uv (equal for a cut edge).
inline std::pair<int, int> faces_of_edge(const PlaneEmbedding& e, EdgeId uv) {
  return {e.face_of_dart(e.dart(uv.lo, uv.hi)), e.face_of_dart(e.dart(uv.hi, uv.lo))};
}

/// m_3(uv): number of distinct 3-faces in F(uv).
inline int edge_3faces(const PlaneEmbedding& e, EdgeId uv) {
  auto [f1, f2] = faces_of_edge(e, uv);
  int count = e.faces()[f1].degree == 3 ? 1 : 0;
  if (f2 != f1 && e.faces()[f2].degree == 3) ++count;
  return count;
}

/// Rotation of the subgraph induced by a vertex subset, keeping the cyclic
/// order of the surviving neighbors.
inline std::vector<std::vector<Vertex>> restrict_rotation(
    const std::vector<std::vector<Vertex>>& rotation, const Reindexed& sub) {
  std::vector<std::vector<Vertex>> out(sub.new_to_old.size());
  for (std::size_t i = 0; i < sub.new_to_old.size(); ++i) {
    for (Vertex w : rotation.at(static_cast<std::size_t>(sub.new_to_old[i]))) {
      int nw = sub.old_to_new.at(static_cast<std::size_t>(w));
      if (nw >= 0) out[i].push_back(nw);
    }
  }
  return out;
}

}  // namespace aecc

#endif  // AECC_EMBEDDING_HPP
