#ifndef AECC_CONFIGURATIONS_HPP
#define AECC_CONFIGURATIONS_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aecc/graph.hpp"

namespace aecc {

/// The thirty-two unavoidable local structures, in scan priority order.
enum class Tag {
  A1_1, A1_2, A1_3,
  A2_1, A2_2, A2_3, A2_4,
  A3_1, A3_2, A3_3, A3_4, A3_5, A3_6, A3_7, A3_8,
  A4_1, A4_2, A4_3, A4_4,
  A5_1, A5_2,
  A6_1, A6_2, A6_3, A6_4,
  A7_1, A7_2, A7_3,
  A8_1, A8_2, A8_3, A8_4,
};

inline constexpr std::array<Tag, 32> kAllTags = {
    Tag::A1_1, Tag::A1_2, Tag::A1_3, Tag::A2_1, Tag::A2_2, Tag::A2_3, Tag::A2_4, Tag::A3_1,
    Tag::A3_2, Tag::A3_3, Tag::A3_4, Tag::A3_5, Tag::A3_6, Tag::A3_7, Tag::A3_8, Tag::A4_1,
    Tag::A4_2, Tag::A4_3, Tag::A4_4, Tag::A5_1, Tag::A5_2, Tag::A6_1, Tag::A6_2, Tag::A6_3,
    Tag::A6_4, Tag::A7_1, Tag::A7_2, Tag::A7_3, Tag::A8_1, Tag::A8_2, Tag::A8_3, Tag::A8_4,
};

inline std::string_view tag_name(Tag t) {
  static constexpr std::array<std::string_view, 32> names = {
      "A1.1", "A1.2", "A1.3", "A2.1", "A2.2", "A2.3", "A2.4", "A3.1", "A3.2", "A3.3", "A3.4",
      "A3.5", "A3.6", "A3.7", "A3.8", "A4.1", "A4.2", "A4.3", "A4.4", "A5.1", "A5.2", "A6.1",
      "A6.2", "A6.3", "A6.4", "A7.1", "A7.2", "A7.3", "A8.1", "A8.2", "A8.3", "A8.4"};
  return names[static_cast<std::size_t>(t)];
}

inline std::optional<Tag> parse_tag(std::string_view s) {
  for (Tag t : kAllTags) {
    if (tag_name(t) == s) return t;
  }
  return std::nullopt;
}

/// Group number 1..8.
inline int tag_group(Tag t) {
  int i = static_cast<int>(t);
  if (i <= 2) return 1;
  if (i <= 6) return 2;
  if (i <= 14) return 3;
  if (i <= 18) return 4;
  if (i <= 20) return 5;
  if (i <= 24) return 6;
  if (i <= 27) return 7;
  return 8;
}

/// Witness arity: (u,v,w) for A1, (u,v,v1,v2) for A2-A5, (u,v,u1,u2,u3)
/// for A6, (u,v,u1,u2,u3,u4) for A7-A8.
inline int tag_arity(Tag t) {
  switch (tag_group(t)) {
    case 1: return 3;
    case 6: return 5;
    case 7:
    case 8: return 6;
    default: return 4;
  }
}

struct Configuration {
  Tag tag = Tag::A1_1;
  std::vector<Vertex> witness;
  int delta = 0;

  bool operator==(const Configuration&) const = default;
};

/// Closed integer interval; hi may be kUnbounded.
struct Range {
  int lo = 0;
  int hi = kUnbounded;

  bool contains(int x) const { return x >= lo && x <= hi; }
};

inline constexpr Range exactly(int k) { return {k, k}; }
inline constexpr Range at_most(int k) { return {0, k}; }
inline constexpr Range at_least(int k) { return {k, kUnbounded}; }

/// n_{6+}(v).
inline int n6plus(const Graph& g, Vertex v) { return count_neighbors_by_degree(g, v, 6, kUnbounded); }

/// Whether v is an (S1, S2) vertex: d(v) in s1 and n_{6+}(v) in s2.
inline bool classify(const Graph& g, Vertex v, Range s1, Range s2) {
  return s1.contains(g.degree(v)) && s2.contains(n6plus(g, v));
}

struct DetectOptions {
  /// A3.2 reads "v2 is X, and P or Q". false: (X and P) or Q, the literal
  /// left-to-right grouping. true: X and (P or Q).
  bool a32_grouped = false;
};

namespace detail {

inline bool distinct(std::span<const Vertex> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) return false;
    }
  }
  return true;
}

/// N(x) equals exactly the given set.
inline bool neighborhood_is(const Graph& g, Vertex x, std::initializer_list<Vertex> expected) {
  if (g.degree(x) != static_cast<int>(expected.size())) return false;
  for (Vertex y : expected) {
    if (!g.has_edge(x, y)) return false;
  }
  return true;
}

inline int common_neighbors(const Graph& g, Vertex a, Vertex b) {
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  int count = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

struct Ctx {
  const Graph& g;
  int delta;

  int d(Vertex x) const { return g.degree(x); }
  int n2(Vertex x) const { return count_neighbors_by_degree(g, x, 2, 2); }
  int n5minus(Vertex x) const { return count_neighbors_by_degree(g, x, 0, 5); }
  int n6p(Vertex x) const { return n6plus(g, x); }
  bool is(Vertex x, Range s1, Range s2) const { return classify(g, x, s1, s2); }
  bool is(Vertex x, int k, Range s2) const { return is(x, exactly(k), s2); }
  bool adj(Vertex a, Vertex b) const { return g.has_edge(a, b); }
};

inline bool holds_a1(const Ctx& c, Tag t, std::span<const Vertex> w) {
  Vertex u = w[0], v = w[1], x = w[2];
  if (!neighborhood_is(c.g, v, {u, x})) return false;
  switch (t) {
    case Tag::A1_1: return !c.adj(u, x);
    case Tag::A1_2: return c.adj(u, x) && c.d(u) <= 7;
    case Tag::A1_3: return c.adj(u, x) && c.n5minus(u) >= c.d(u) - 6;
    default: return false;
  }
}

inline bool holds_a2(const Ctx& c, Tag t, std::span<const Vertex> w) {
  Vertex u = w[0], v = w[1], v1 = w[2], v2 = w[3];
  if (!neighborhood_is(c.g, v, {u, v1, v2})) return false;
  switch (t) {
    case Tag::A2_1: return c.d(u) <= 7;
    case Tag::A2_2:
      return c.is(u, {8, 11}, at_most(5)) && c.adj(u, v1) && c.adj(u, v2) && !c.adj(v1, v2);
    case Tag::A2_3:
      return c.is(u, 8, at_most(4)) && c.is(v2, {8, 11}, at_most(5)) && c.adj(u, v1) &&
             c.adj(v1, v2) && !c.adj(u, v2);
    case Tag::A2_4: return c.d(u) == 8 && c.adj(u, v1) && c.adj(u, v2) && c.adj(v1, v2);
    default: return false;
  }
}

/// Shared frame of A3-A5: u is (k, 5^-), v a 3-vertex with N(v) = {u, v1, v2}
/// and u, v1, v2 pairwise adjacent.
inline bool a3to5_frame(const Ctx& c, int k, std::span<const Vertex> w) {
  Vertex u = w[0], v = w[1], v1 = w[2], v2 = w[3];
  return c.is(u, k, at_most(5)) && neighborhood_is(c.g, v, {u, v1, v2}) && c.adj(u, v1) &&
         c.adj(u, v2) && c.adj(v1, v2);
}

inline bool holds_a3to5(const Ctx& c, Tag t, std::span<const Vertex> w, const DetectOptions& opt) {
  Vertex u = w[0], v1 = w[2], v2 = w[3];
  const int D = c.delta;
  int group = tag_group(t);
  if (!a3to5_frame(c, group == 3 ? 9 : group == 4 ? 10 : 11, w)) return false;
  auto reduced_not_delta = [&](Vertex x) { return c.d(x) - c.n2(x) != D; };
  switch (t) {
    case Tag::A3_1: return reduced_not_delta(v1) && reduced_not_delta(v2);
    case Tag::A3_2: {
      bool x = c.is(v2, {9, 13}, at_most(6));
      bool p = reduced_not_delta(v1);
      bool q = c.n6p(v1) <= D - c.d(v2) + 6;
      return opt.a32_grouped ? (x && (p || q)) : ((x && p) || q);
    }
    case Tag::A3_3: return c.is(u, 9, at_most(4)) && c.is(v2, {9, 13}, at_most(5));
    case Tag::A3_4:
      return c.is(u, 9, at_most(4)) && c.is(v1, D, exactly(7)) && c.is(v2, D, exactly(6)) &&
             D >= 11 && D <= 13;
    case Tag::A3_5:
      return c.is(u, 9, at_most(4)) && c.is(v1, 14, exactly(7)) &&
             (c.is(v2, 13, exactly(7)) || c.is(v2, 14, at_most(7)));
    case Tag::A3_6: return c.is(u, 9, exactly(5)) && c.is(v2, {9, 13}, at_most(4));
    case Tag::A3_7:
      return c.is(u, 9, exactly(5)) && c.is(v1, D, exactly(7)) && c.is(v2, D, exactly(5)) &&
             D >= 10 && D <= 11;
    case Tag::A3_8:
      return c.is(u, 9, exactly(5)) && c.is(v1, D, exactly(7)) && c.is(v2, D, {5, 6}) &&
             D >= 12 && D <= 13;
    case Tag::A4_1: return c.n6p(v2) <= 4;
    case Tag::A4_2:
      return (c.is(v2, 9, exactly(6)) || c.is(v2, {10, 13}, {5, 6})) &&
             c.n6p(v1) <= D - c.d(v2) + 6;
    case Tag::A4_3: return c.is(v2, {10, 11}, exactly(5)) && reduced_not_delta(v1);
    case Tag::A4_4:
      return c.is(v1, D, exactly(7)) && c.is(v2, D, exactly(5)) && D >= 10 && D <= 11;
    case Tag::A5_1:
      return (c.is(v1, {9, 14}, exactly(6)) || c.is(v1, {11, 14}, at_most(5))) &&
             (c.is(v2, {9, 12}, exactly(6)) || c.is(v2, {11, 12}, at_most(5)));
    case Tag::A5_2: return c.is(v1, at_least(13), exactly(7)) && c.is(v2, 11, at_most(5));
    default: return false;
  }
}

inline bool holds_a6(const Ctx& c, Tag t, std::span<const Vertex> w) {
  Vertex u = w[0], v = w[1], u1 = w[2], u2 = w[3], u3 = w[4];
  if (!neighborhood_is(c.g, u, {v, u1, u2, u3})) return false;
  const int D = c.delta;
  int sum = c.d(v) + c.d(u1) + c.d(u2) + c.d(u3);
  int triangles = common_neighbors(c.g, u, v);
  switch (t) {
    case Tag::A6_1: return (c.d(v) == 4 || c.d(v) == 5) && sum <= 2 * D + 13;
    case Tag::A6_2: return c.d(v) == 6 && triangles >= 1 && sum <= 2 * D + 13;
    case Tag::A6_3: return (c.d(v) == 5 || c.d(v) == 6) && triangles >= 2 && sum <= 2 * D + 14;
    case Tag::A6_4:
      return c.is(v, 7, at_most(4)) && c.adj(u1, u2) && c.adj(u1, u3) && c.adj(v, u2) &&
             c.adj(v, u3) && std::min({c.d(u1), c.d(u2), c.d(u3)}) <= 8;
    default: return false;
  }
}

inline bool holds_a7to8(const Ctx& c, Tag t, std::span<const Vertex> w) {
  Vertex u = w[0], v = w[1], u1 = w[2], u2 = w[3], u3 = w[4], u4 = w[5];
  int dv = tag_group(t) == 7 ? 5 : 6;
  if (c.d(v) != dv || !neighborhood_is(c.g, u, {v, u1, u2, u3, u4})) return false;
  if (!c.adj(v, u3) || !c.adj(v, u4)) return false;
  const int D = c.delta;
  int sum = c.d(u1) + c.d(u2) + c.d(u3) + c.d(u4);
  auto seven_sparse = [&](Vertex x) { return c.is(x, 7, at_most(4)); };
  switch (t) {
    case Tag::A7_1: return (c.d(u3) == 5 || c.d(u3) == 6) && sum <= 2 * D + 13;
    case Tag::A7_2: return c.d(u3) == 7 && std::min(c.d(u1), c.d(u2)) <= 6 && sum <= D + 20;
    case Tag::A7_3: return c.d(u3) == 8 && c.d(u1) == 6 && c.d(u2) == 6;
    case Tag::A8_1: return c.d(u3) <= 6 && c.d(u4) <= 6 && std::min(c.d(u1), c.d(u2)) <= 7;
    case Tag::A8_2: return c.d(u3) <= 6 && seven_sparse(u4) && std::min(c.d(u1), c.d(u2)) <= 6;
    case Tag::A8_3: return c.d(u3) <= 6 && seven_sparse(u4) && c.d(u1) <= 7 && c.d(u2) <= 7;
    case Tag::A8_4:
      return seven_sparse(u3) && seven_sparse(u4) && c.d(u1) <= 6 && c.d(u2) <= 7;
    default: return false;
  }
}

}  // namespace detail

namespace detail {

inline bool holds_ctx(const Ctx& c, Tag t, std::span<const Vertex> witness, const DetectOptions& opt) {
  if (static_cast<int>(witness.size()) != tag_arity(t)) return false;
  for (Vertex x : witness) {
    if (!c.g.has_vertex(x)) return false;
  }
  if (!distinct(witness)) return false;
  switch (tag_group(t)) {
    case 1: return holds_a1(c, t, witness);
    case 2: return holds_a2(c, t, witness);
    case 6: return holds_a6(c, t, witness);
    case 7:
    case 8: return holds_a7to8(c, t, witness);
    default: return holds_a3to5(c, t, witness, opt);
  }
}

}  // namespace detail

/// Evaluates the literal predicate of `t` on a witness tuple, Delta taken
/// from g. Tuples of the wrong arity or with repeated vertices are false.
inline bool holds(const Graph& g, Tag t, std::span<const Vertex> witness, const DetectOptions& opt = {}) {
  if (g.empty()) return false;
  return detail::holds_ctx(detail::Ctx{g, max_degree(g)}, t, witness, opt);
}

inline bool holds(const Graph& g, const Configuration& cfg, const DetectOptions& opt = {}) {
  return holds(g, cfg.tag, cfg.witness, opt);
}

namespace detail {

/// Scans structured candidates in lexicographic witness order.
inline std::optional<std::vector<Vertex>> scan(const Graph& g, Tag t, const DetectOptions& opt) {
  const Ctx ctx{g, max_degree(g)};
  const int group = tag_group(t);
  const int center_degree = group == 6 ? 4 : (group >= 7 ? 5 : -1);
  std::vector<Vertex> w;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (center_degree > 0 && g.degree(u) != center_degree) continue;
    for (Vertex v : g.neighbors(u)) {
      if (group == 1) {
        if (g.degree(v) != 2) continue;
        w = {u, v, g.neighbors(v)[0] == u ? g.neighbors(v)[1] : g.neighbors(v)[0]};
        if (holds_ctx(ctx, t, w, opt)) return w;
        continue;
      }
      if (group <= 5) {
        if (g.degree(v) != 3) continue;
        std::vector<Vertex> rest;
        for (Vertex x : g.neighbors(v)) {
          if (x != u) rest.push_back(x);
        }
        do {
          w = {u, v, rest[0], rest[1]};
          if (holds_ctx(ctx, t, w, opt)) return w;
        } while (std::next_permutation(rest.begin(), rest.end()));
        continue;
      }
      std::vector<Vertex> rest;
      for (Vertex x : g.neighbors(u)) {
        if (x != v) rest.push_back(x);
      }
      do {
        w = {u, v};
        w.insert(w.end(), rest.begin(), rest.end());
        if (holds_ctx(ctx, t, w, opt)) return w;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Lexicographically smallest witness of `t`, or std::nullopt.
inline std::optional<Configuration> detect(const Graph& g, Tag t, const DetectOptions& opt = {}) {
  if (g.empty()) return std::nullopt;
  if (auto w = detail::scan(g, t, opt)) return Configuration{t, *w, max_degree(g)};
  return std::nullopt;
}

/// First hit scanning A1.1 through A8.4.
inline std::optional<Configuration> find_any_configuration(const Graph& g, const DetectOptions& opt = {}) {
  for (Tag t : kAllTags) {
    if (auto cfg = detect(g, t, opt)) return cfg;
  }
  return std::nullopt;
}

}  // namespace aecc

#endif  // AECC_CONFIGURATIONS_HPP
