#ifndef AECC_DISCHARGE_HPP
#define AECC_DISCHARGE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "aecc/configurations.hpp"
#include "aecc/embedding.hpp"
#include "aecc/graph.hpp"

namespace aecc {

/// Compare only against other Rationals: with C++20 rewritten comparisons,
/// boost's mixed rational/int operator== recurses forever.
using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0, always written with the slash.
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

class DischargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H: one connected component of G minus its 2-vertices, with the G-side
/// degree data the structural lemmas compare against.
struct StrippedGraph {
  Graph h;
  std::vector<Vertex> h_to_g;
  std::vector<int> g_to_h;
  std::vector<int> d_g;   ///< d(u) in G, per H vertex
  std::vector<int> n2_g;  ///< n_2(u) in G, per H vertex
  int component_count = 0;
};

/// Components of strip_degree2(g) are numbered by their smallest G vertex;
/// `component` picks one of them.
inline StrippedGraph build_H(const Graph& g, int component = 0) {
  Reindexed stripped = strip_degree2(g);
  if (stripped.graph.vertex_count() == 0) throw DischargeError("H is empty: no vertex of degree >= 3");
  int count = 0;
  auto comp = connected_components(stripped.graph, &count);
  if (component < 0 || component >= count) {
    throw DischargeError("component " + std::to_string(component) + " out of range (" +
                         std::to_string(count) + " components)");
  }
  std::vector<bool> keep(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) keep[i] = comp[i] == component;
  Reindexed piece = induced_subgraph(stripped.graph, keep);

  StrippedGraph out;
  out.h = std::move(piece.graph);
  out.component_count = count;
  out.g_to_h.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex hv : piece.new_to_old) out.h_to_g.push_back(stripped.new_to_old[hv]);
  for (std::size_t i = 0; i < out.h_to_g.size(); ++i) {
    Vertex gv = out.h_to_g[i];
    out.g_to_h[gv] = static_cast<int>(i);
    out.d_g.push_back(g.degree(gv));
    out.n2_g.push_back(count_neighbors_by_degree(g, gv, 2, 2));
  }
  return out;
}

/// A vertex or a face of the embedded H.
struct Element {
  enum class Kind { Vertex, Face };
  Kind kind = Kind::Vertex;
  int index = 0;

  auto operator<=>(const Element&) const = default;
};

inline Element vertex_element(int v) { return {Element::Kind::Vertex, v}; }
inline Element face_element(int f) { return {Element::Kind::Face, f}; }

inline std::string to_string(const Element& e) {
  return (e.kind == Element::Kind::Vertex ? "v" : "f") + std::to_string(e.index);
}

/// tau(source -> sink)_via. For rules without a "through" element, via is
/// the source itself.
struct Transfer {
  std::string rule;
  Element source;
  Element sink;
  Element via;
  Rational amount;
};

struct ChargeLedger {
  std::vector<Rational> vertex_charge;
  std::vector<Rational> face_charge;
  std::vector<Transfer> transfers;

  Rational& operator[](const Element& e) {
    return e.kind == Element::Kind::Vertex ? vertex_charge.at(static_cast<std::size_t>(e.index))
                                           : face_charge.at(static_cast<std::size_t>(e.index));
  }
  const Rational& operator[](const Element& e) const {
    return e.kind == Element::Kind::Vertex ? vertex_charge.at(static_cast<std::size_t>(e.index))
                                           : face_charge.at(static_cast<std::size_t>(e.index));
  }

  void move(std::string rule, Element source, Element sink, Element via, Rational amount) {
    if (amount == Rational(0)) return;
    (*this)[source] -= amount;
    (*this)[sink] += amount;
    transfers.push_back({std::move(rule), source, sink, via, amount});
  }
};

/// omega(u) = 4 - d_H(u), omega(f) = 4 - d(f).
inline ChargeLedger initial_charges(const PlaneEmbedding& e) {
  ChargeLedger l;
  for (Vertex v = 0; v < e.graph().vertex_count(); ++v) l.vertex_charge.emplace_back(4 - e.graph().degree(v));
  for (const auto& f : e.faces()) l.face_charge.emplace_back(4 - f.degree);
  return l;
}

inline Rational total_charge(const ChargeLedger& l) {
  Rational sum = 0;
  for (const auto& r : l.vertex_charge) sum += r;
  for (const auto& r : l.face_charge) sum += r;
  return sum;
}

/// Per-vertex transfer quantum for d_H(u) = k >= 6 with n5minus >= 1
/// neighbors of H-degree at most 5.
inline Rational alpha(int k, int n5minus) {
  if (k < 6 || n5minus < 1 || n5minus > k) {
    throw DischargeError("alpha undefined for k=" + std::to_string(k) +
                         ", n5minus=" + std::to_string(n5minus));
  }
  if (n5minus <= k / 2) return Rational(k - 6, 3 * n5minus) + Rational(1, 3);
  return Rational(1) - Rational(4, k);
}

struct DischargeOptions {
  /// Log R4 near-misses (4-5 edge with m_3(u) = 4 whose neighboring faces
  /// do not match either sub-rule).
  bool strict = true;
};

struct DischargeResult {
  ChargeLedger ledger;
  std::vector<std::string> near_misses;
};

namespace detail {

/// Shared face/vertex lookups for the rule guards.
class Discharger {
 public:
  explicit Discharger(const PlaneEmbedding& e) : e_(e), g_(e.graph()) {}

  int d(Vertex v) const { return g_.degree(v); }
  int face_degree(int f) const { return e_.faces()[f].degree; }
  const std::vector<Vertex>& face_vertices(int f) const { return e_.faces()[f].boundary; }

  int n5minus(Vertex v) const { return count_neighbors_by_degree(g_, v, 0, 5); }
  Rational alpha_of(Vertex v) const { return alpha(d(v), n5minus(v)); }

  bool is_triangle(int f) const { return face_degree(f) == 3; }
  int delta(int f) const {
    int m = kUnbounded;
    for (Vertex v : face_vertices(f)) m = std::min(m, d(v));
    return m;
  }
  int count_deg(int f, int k) const {
    int c = 0;
    for (Vertex v : face_vertices(f)) c += d(v) == k ? 1 : 0;
    return c;
  }
  int across(int f, Vertex x, Vertex y) const { return e_.across(f, x, y); }
  std::pair<int, int> edge_faces(Vertex u, Vertex v) const {
    return {e_.face_of_dart(e_.dart(u, v)), e_.face_of_dart(e_.dart(v, u))};
  }
  int m3(Vertex v) const { return incident_3faces(e_, v); }

  const PlaneEmbedding& embedding() const { return e_; }
  const Graph& graph() const { return g_; }

 private:
  const PlaneEmbedding& e_;
  const Graph& g_;
};

/// Third vertex of triangle f other than a and b.
inline Vertex third(const std::vector<Vertex>& tri, Vertex a, Vertex b) {
  for (Vertex x : tri) {
    if (x != a && x != b) return x;
  }
  return -1;
}

}  // namespace detail

/// Runs R1, R2, R3 (R3.1 and R3.2), then R4, then R5 on a copy of l. R5.1's
/// residual is each face's charge right after the R3 phase. Zero-amount
/// transfers are not logged.
inline DischargeResult apply_rules(const PlaneEmbedding& e, const ChargeLedger& l, const DischargeOptions& opt = {}) {
  detail::Discharger D(e);
  const Graph& g = e.graph();
  DischargeResult out{l, {}};
  ChargeLedger& L = out.ledger;
  const Rational half(1, 2);

  // R1: 4^- vertex u adjacent to 6^+ vertex v, both faces at uv of degree >= 4.
  for (const auto& ed : g.edges()) {
    for (auto [u, v] : {std::pair{ed.lo, ed.hi}, std::pair{ed.hi, ed.lo}}) {
      if (D.d(u) > 4 || D.d(v) < 6) continue;
      auto [f1, f2] = D.edge_faces(u, v);
      if (D.face_degree(f1) < 4 || D.face_degree(f2) < 4) continue;
      Rational a = D.alpha_of(v) * half;
      L.move("R1", vertex_element(u), vertex_element(v), face_element(f1), a);
      L.move("R1", vertex_element(u), vertex_element(v), face_element(f2), a);
    }
  }

  // R2: 3-face with delta(f) >= 6 gives 1/3 to each corner.
  for (int f = 0; f < e.face_count(); ++f) {
    if (!D.is_triangle(f) || D.delta(f) < 6) continue;
    for (Vertex x : D.face_vertices(f)) {
      L.move("R2", face_element(f), vertex_element(x), face_element(f), Rational(1, 3));
    }
  }

  // R3: 3-face with a 5^- corner u; each 6^+ corner x receives alpha_x
  // through f and alpha_x / 2 through f_ux when d(f_ux) >= 4.
  for (int f = 0; f < e.face_count(); ++f) {
    if (!D.is_triangle(f) || D.delta(f) > 5) continue;
    const auto& tri = D.face_vertices(f);
    for (Vertex x : tri) {
      if (D.d(x) < 6) continue;
      L.move("R3.1", face_element(f), vertex_element(x), face_element(f), D.alpha_of(x));
    }
    for (Vertex u : tri) {
      if (D.d(u) > 5) continue;
      for (Vertex x : tri) {
        if (x == u || D.d(x) < 6) continue;
        int f_ux = D.across(f, u, x);
        if (D.face_degree(f_ux) >= 4) {
          L.move("R3.2", face_element(f), vertex_element(x), face_element(f_ux), D.alpha_of(x) * half);
        }
      }
    }
  }
  const std::vector<Rational> after_r3 = L.face_charge;

  // R4: 4-vertex u, 5-vertex v, m_3(u) = 4, both faces at uv triangles
  // [u v w] and [u v w*]; the amount is split evenly between them.
  for (const auto& ed : g.edges()) {
    for (auto [u, v] : {std::pair{ed.lo, ed.hi}, std::pair{ed.hi, ed.lo}}) {
      if (D.d(u) != 4 || D.d(v) != 5 || D.m3(u) != 4) continue;
      auto [f, f_uv] = D.edge_faces(u, v);
      if (f == f_uv || !D.is_triangle(f) || !D.is_triangle(f_uv)) continue;
      Vertex w = detail::third(D.face_vertices(f), u, v);
      Vertex w_star = detail::third(D.face_vertices(f_uv), u, v);
      int a = D.face_degree(D.across(f, v, w));
      int b = D.face_degree(D.across(f_uv, v, w_star));
      std::string rule;
      Rational amount;
      if (std::min(a, b) == 3 && std::max(a, b) >= 4) {
        rule = "R4.1";
        amount = Rational(1, 10);
      } else if (a == 3 && b == 3) {
        rule = "R4.2";
        amount = Rational(2, 5);
      } else {
        if (opt.strict) {
          out.near_misses.push_back("R4 pattern at edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") with outer faces of degree " +
                                    std::to_string(a) + " and " + std::to_string(b));
        }
        continue;
      }
      L.move(rule, face_element(f), vertex_element(v), face_element(f), amount * half);
      L.move(rule, face_element(f_uv), vertex_element(v), face_element(f_uv), amount * half);
    }
  }

  // R5: 3-face with delta(f) = 5 and k = n_5(f) corners of degree 5.
  for (int f = 0; f < e.face_count(); ++f) {
    if (!D.is_triangle(f) || D.delta(f) != 5) continue;
    const auto& tri = D.face_vertices(f);
    int k = D.count_deg(f, 5);
    Rational beta = after_r3[f];
    for (Vertex u : tri) {
      if (D.d(u) != 5) continue;
      if (beta >= Rational(0)) {
        L.move("R5.1", face_element(f), vertex_element(u), face_element(f), beta / Rational(k));
      }
      std::vector<Vertex> others;
      for (Vertex x : tri) {
        if (x != u) others.push_back(x);
      }
      if (D.d(others[0]) >= 6 && D.d(others[1]) >= 6) {
        Rational s = D.alpha_of(others[0]) + D.alpha_of(others[1]);
        if (s >= Rational(1)) L.move("R5.2", vertex_element(u), face_element(f), face_element(f), s - 1);
      }
    }
  }
  return out;
}

/// Re-evaluates the guard of a logged transfer against the embedding.
inline bool transfer_guard_holds(const PlaneEmbedding& e, const Transfer& t) {
  detail::Discharger D(e);
  const Graph& g = e.graph();
  using K = Element::Kind;
  auto is_v = [](const Element& x) { return x.kind == K::Vertex; };
  auto is_f = [](const Element& x) { return x.kind == K::Face; };
  auto on_face = [&](int f, Vertex v) {
    const auto& b = D.face_vertices(f);
    return std::find(b.begin(), b.end(), v) != b.end();
  };
  if (t.rule == "R1") {
    if (!is_v(t.source) || !is_v(t.sink) || !is_f(t.via)) return false;
    Vertex u = t.source.index, v = t.sink.index;
    if (!g.has_edge(u, v) || D.d(u) > 4 || D.d(v) < 6) return false;
    auto [f1, f2] = D.edge_faces(u, v);
    return (t.via.index == f1 || t.via.index == f2) && D.face_degree(f1) >= 4 &&
           D.face_degree(f2) >= 4 && t.amount == D.alpha_of(v) / 2;
  }
  if (t.rule == "R2") {
    return is_f(t.source) && is_v(t.sink) && D.is_triangle(t.source.index) &&
           D.delta(t.source.index) >= 6 && on_face(t.source.index, t.sink.index) &&
           t.amount == Rational(1, 3);
  }
  if (t.rule == "R3.1" || t.rule == "R3.2") {
    if (!is_f(t.source) || !is_v(t.sink)) return false;
    int f = t.source.index;
    Vertex x = t.sink.index;
    if (!D.is_triangle(f) || D.delta(f) > 5 || !on_face(f, x) || D.d(x) < 6) return false;
    if (t.rule == "R3.1") return t.via == t.source && t.amount == D.alpha_of(x);
    for (Vertex u : D.face_vertices(f)) {
      if (u == x || D.d(u) > 5) continue;
      int f_ux = D.across(f, u, x);
      if (t.via.index == f_ux && D.face_degree(f_ux) >= 4 && t.amount == D.alpha_of(x) / 2) return true;
    }
    return false;
  }
  if (t.rule == "R4.1" || t.rule == "R4.2") {
    if (!is_f(t.source) || !is_v(t.sink)) return false;
    int f = t.source.index;
    Vertex v = t.sink.index;
    if (!D.is_triangle(f) || !on_face(f, v) || D.d(v) != 5) return false;
    for (Vertex u : D.face_vertices(f)) {
      if (u == v || D.d(u) != 4 || D.m3(u) != 4) continue;
      int f_uv = D.across(f, u, v);
      if (!D.is_triangle(f_uv)) continue;
      Vertex w = detail::third(D.face_vertices(f), u, v);
      Vertex w_star = detail::third(D.face_vertices(f_uv), u, v);
      int a = D.face_degree(D.across(f, v, w));
      int b = D.face_degree(D.across(f_uv, v, w_star));
      if (t.rule == "R4.1" && std::min(a, b) == 3 && std::max(a, b) >= 4 && t.amount == Rational(1, 20)) return true;
      if (t.rule == "R4.2" && a == 3 && b == 3 && t.amount == Rational(1, 5)) return true;
    }
    return false;
  }
  if (t.rule == "R5.1") {
    return is_f(t.source) && is_v(t.sink) && D.is_triangle(t.source.index) &&
           D.delta(t.source.index) == 5 && D.d(t.sink.index) == 5 && on_face(t.source.index, t.sink.index) &&
           t.amount > Rational(0);
  }
  if (t.rule == "R5.2") {
    if (!is_v(t.source) || !is_f(t.sink)) return false;
    int f = t.sink.index;
    Vertex u = t.source.index;
    if (!D.is_triangle(f) || D.delta(f) != 5 || D.d(u) != 5 || !on_face(f, u)) return false;
    std::vector<Vertex> others;
    for (Vertex x : D.face_vertices(f)) {
      if (x != u) others.push_back(x);
    }
    if (D.d(others[0]) < 6 || D.d(others[1]) < 6) return false;
    Rational s = D.alpha_of(others[0]) + D.alpha_of(others[1]);
    return s >= Rational(1) && t.amount == s - 1;
  }
  return false;
}

struct ChargeEntry {
  Element element;
  Rational charge;
  bool positive = false;
};

/// Final charge of every element; positive ones are candidate
/// counterexamples to the per-element discharging bounds.
inline std::vector<ChargeEntry> final_report(const ChargeLedger& l) {
  std::vector<ChargeEntry> out;
  for (std::size_t i = 0; i < l.vertex_charge.size(); ++i) {
    out.push_back({vertex_element(static_cast<int>(i)), l.vertex_charge[i], l.vertex_charge[i] > Rational(0)});
  }
  for (std::size_t i = 0; i < l.face_charge.size(); ++i) {
    out.push_back({face_element(static_cast<int>(i)), l.face_charge[i], l.face_charge[i] > Rational(0)});
  }
  return out;
}

/// A lemma clause whose hypothesis held but whose conclusion failed.
struct LemmaViolation {
  std::string clause;
  std::vector<Vertex> vertices;  ///< ids in G
  std::string detail;
};

/// Checks the structural properties of H for a 2-connected g (otherwise
/// the report is empty). A clause is checked only when the configurations
/// its argument excludes are absent from g: L1.1-L1.3 need no A1, L1.4
/// needs none at all, L2.1 needs no A1 and no A2.1, and the L2.2 and L3
/// clauses additionally need no A6.
inline std::vector<LemmaViolation> check_structural_lemmas(const Graph& g, const StrippedGraph& sh,
                                                           const PlaneEmbedding& emb_h,
                                                           const DetectOptions& dopt = {}) {
  std::vector<LemmaViolation> out;
  if (!is_two_connected(g)) return out;
  std::set<Tag> present;
  for (Tag t : kAllTags) {
    if (detect(g, t, dopt)) present.insert(t);
  }
  auto absent = [&](std::initializer_list<Tag> tags) {
    return std::none_of(tags.begin(), tags.end(), [&](Tag t) { return present.count(t) > 0; });
  };
  const bool no_a1 = absent({Tag::A1_1, Tag::A1_2, Tag::A1_3});
  const bool no_a21 = absent({Tag::A2_1});
  const bool no_a6 = absent({Tag::A6_1, Tag::A6_2, Tag::A6_3, Tag::A6_4});
  const bool none_at_all = present.empty();

  const Graph& h = sh.h;
  auto dh = [&](Vertex x) { return h.degree(x); };
  auto dg = [&](Vertex x) { return sh.d_g[x]; };
  auto gid = [&](Vertex x) { return sh.h_to_g[x]; };
  auto flag = [&](std::string clause, std::vector<Vertex> hv, std::string detail) {
    std::vector<Vertex> ids;
    for (Vertex x : hv) ids.push_back(gid(x));
    out.push_back({std::move(clause), std::move(ids), std::move(detail)});
  };
  auto count_h = [&](Vertex x, int lo, int hi) { return count_neighbors_by_degree(h, x, lo, hi); };
  auto count_g = [&](Vertex x, int lo, int hi) { return count_neighbors_by_degree(g, gid(x), lo, hi); };

  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    if (no_a1) {
      if (dg(u) >= 3 && dg(u) <= 7 && dh(u) != dg(u)) flag("L1.1", {u}, "d_H(u) != d(u)");
      if (dg(u) >= 8 && dh(u) < 7) flag("L1.2", {u}, "d_H(u) < 7");
      if (dh(u) < 3) flag("L1.3", {u}, "d_H(u) < 3");
      if (count_h(u, 2, 2) != 0) flag("L1.3", {u}, "n'_2(u) != 0");
      for (int k = 3; k <= 6; ++k) {
        int in_h = 0;
        for (Vertex w : h.neighbors(u)) in_h += dg(w) == k ? 1 : 0;
        if (in_h != count_g(u, k, k)) flag("L1.3", {u}, "n'_" + std::to_string(k) + "(u) != n_" + std::to_string(k) + "(u)");
      }
      if (count_h(u, 0, 5) != count_g(u, 0, 5) - sh.n2_g[u]) flag("L1.3", {u}, "n'_{5-}(u) != n_{5-}(u) - n_2(u)");
      if (count_h(u, 6, kUnbounded) != count_g(u, 6, kUnbounded)) flag("L1.3", {u}, "n'_{6+}(u) != n_{6+}(u)");
    }
    if (none_at_all && dg(u) >= 8) {
      if (count_h(u, 0, 5) > dh(u) - 7) flag("L1.4", {u}, "n'_{5-}(u) > d_H(u) - 7");
      if (count_h(u, 6, kUnbounded) < 7) flag("L1.4", {u}, "n'_{6+}(u) < 7");
    }
  }

  if (no_a1 && no_a21) {
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (dg(v) != 3) continue;
      for (Vertex u : h.neighbors(v)) {
        if (dg(u) < 8 || dh(u) < 8) flag("L2.1", {u, v}, "3-vertex v adjacent to u with d(u) < 8 or d_H(u) < 8");
      }
    }
  }

  if (no_a1 && no_a21 && no_a6) {
    auto in_two_triangles = [&](Vertex a, Vertex b) { return detail::common_neighbors(h, a, b) >= 2; };
    for (Vertex u = 0; u < h.vertex_count(); ++u) {
      if (dg(u) != 4 || dh(u) != 4) continue;
      const auto& nb = h.neighbors(u);
      // main clause uses the minimum-degree neighbor as v
      Vertex vmin = *std::min_element(nb.begin(), nb.end(), [&](Vertex a, Vertex b) {
        return std::pair{dg(a), a} < std::pair{dg(b), b};
      });
      for (Vertex x : nb) {
        if (x != vmin && dh(x) < 8) flag("L2.2", {u, vmin, x}, "d_H(u_i) < 8");
      }
      for (Vertex v : nb) {
        std::vector<Vertex> rest;
        for (Vertex x : nb) {
          if (x != v) rest.push_back(x);
        }
        int bound = 0;
        std::string sub;
        bool one = detail::common_neighbors(h, u, v) >= 1;
        bool two = in_two_triangles(u, v);
        if (dg(v) == 4) { bound = 10; sub = "L2.2.1"; }
        if (dg(v) == 5) { bound = 9; sub = "L2.2.2"; }
        if (dg(v) == 6 && one) { bound = 8; sub = "L2.2.3"; }
        if (dg(v) == 5 && two) { bound = 10; sub = "L2.2.4"; }
        if (dg(v) == 6 && two) { bound = 9; sub = "L2.2.5"; }
        for (Vertex x : rest) {
          if (bound > 0 && dg(x) < bound) flag(sub, {u, v, x}, "d(u_i) < " + std::to_string(bound));
        }
        if (classify(g, gid(v), exactly(7), at_most(4))) {
          // 2.6: u u2 v and u u3 v triangles with u1 u2, u1 u3 in E
          for (Vertex u1 : rest) {
            std::vector<Vertex> pair;
            for (Vertex x : rest) {
              if (x != u1) pair.push_back(x);
            }
            if (h.has_edge(v, pair[0]) && h.has_edge(v, pair[1]) && h.has_edge(u1, pair[0]) &&
                h.has_edge(u1, pair[1])) {
              for (Vertex x : rest) {
                if (dg(x) < 9) flag("L2.2.6", {u, v, x}, "d(u_i) < 9");
              }
            }
          }
        }
      }
    }

    // L3: disjointness of 3-face sets in the embedding
    std::vector<std::set<int>> f3(static_cast<std::size_t>(h.vertex_count()));
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
      for (int f : emb_h.faces_at(x)) {
        if (emb_h.faces()[f].degree == 3) f3[x].insert(f);
      }
    }
    auto meets = [&](const std::set<int>& a, const std::set<int>& b) {
      return std::any_of(a.begin(), a.end(), [&](int f) { return b.count(f) > 0; });
    };
    auto unite = [&](Vertex a, Vertex b) {
      std::set<int> s = f3[a];
      s.insert(f3[b].begin(), f3[b].end());
      return s;
    };
    std::vector<Vertex> small;
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
      if (dh(x) <= 4) small.push_back(x);
    }
    for (Vertex u : small) {
      for (Vertex v : small) {
        if (u == v) continue;
        bool hyp = (dh(u) == 3 && dh(v) <= 4) || (dh(u) == 4 && dh(v) == 4 && !h.has_edge(u, v));
        if (hyp && meets(f3[u], f3[v])) flag("L3.1", {u, v}, "F_3(u) and F_3(v) intersect");
      }
    }
    for (const auto& ed : h.edges()) {
      Vertex u = ed.lo, v = ed.hi;
      if (dh(u) != 4 || dh(v) != 4) continue;
      auto uv = unite(u, v);
      for (Vertex u1 : small) {
        if (u1 == u || u1 == v) continue;
        if (meets(uv, f3[u1])) flag("L3.2", {u, v, u1}, "F_3(u) u F_3(v) meets F_3(u1)");
      }
      for (const auto& ed2 : h.edges()) {
        Vertex a = ed2.lo, b = ed2.hi;
        if (!(ed < ed2) || dh(a) != 4 || dh(b) != 4) continue;
        if (a == u || a == v || b == u || b == v) continue;
        if (meets(uv, unite(a, b))) flag("L3.3", {u, v, a, b}, "3-face sets of two 4-4 edges intersect");
      }
    }
  }
  return out;
}

}  // namespace aecc

#endif  // AECC_DISCHARGE_HPP
