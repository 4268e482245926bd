#ifndef AECC_ORACLE_HPP
#define AECC_ORACLE_HPP

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <vector>

#include "aecc/coloring.hpp"
#include "aecc/graph.hpp"

namespace aecc {

struct OracleBudget {
  long max_nodes = 20'000'000;
  double max_seconds = 60.0;
};

enum class Decision { Yes, No, BudgetExceeded };

struct OracleResult {
  Decision decision = Decision::No;
  std::optional<EdgeColoring> coloring;
  long nodes = 0;
};

struct CompletionOptions {
  /// Edges already colored are kept fixed. Empty means nothing precolored.
  std::vector<Color> precolored;
  /// Preferred color per edge, tried first. Empty means no hint.
  std::vector<Color> hint;
};

namespace detail {

/// Backtracking acyclic edge colorer. Each assignment is checked for
/// properness and for closing a bichromatic cycle through the new edge.
class AcyclicSearch {
 public:
  AcyclicSearch(const Graph& g, int k, const OracleBudget& budget, const CompletionOptions& opt)
      : g_(g), k_(k), budget_(budget), opt_(opt) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    at_.assign(n * static_cast<std::size_t>(k + 1), -1);
    color_.assign(static_cast<std::size_t>(g.edge_count()), kUncolored);
  }

  OracleResult run() {
    start_ = std::chrono::steady_clock::now();
    OracleResult out;
    std::vector<int> free_edges;
    for (int e = 0; e < g_.edge_count(); ++e) {
      Color pre = opt_.precolored.empty() ? kUncolored : opt_.precolored[e];
      if (pre == kUncolored) {
        free_edges.push_back(e);
        continue;
      }
      if (pre < 1 || pre > k_ || !can_place(e, pre)) {
        out.decision = Decision::No;
        return out;
      }
      place(e, pre);
    }
    std::stable_sort(free_edges.begin(), free_edges.end(), [&](int a, int b) {
      return weight(a) > weight(b);
    });
    order_ = std::move(free_edges);
    symmetric_ = opt_.precolored.empty() && opt_.hint.empty();

    int r = search(0, 0);
    out.nodes = nodes_;
    if (r == 1) {
      out.decision = Decision::Yes;
      out.coloring = EdgeColoring(k_, color_);
    } else {
      out.decision = r == 0 ? Decision::No : Decision::BudgetExceeded;
    }
    return out;
  }

 private:
  int weight(int e) const {
    const auto& ed = g_.edge(e);
    return g_.degree(ed.lo) + g_.degree(ed.hi);
  }

  int& at(Vertex v, Color c) { return at_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }
  int at(Vertex v, Color c) const { return at_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  bool can_place(int e, Color c) const {
    const auto& ed = g_.edge(e);
    if (at(ed.lo, c) != -1 || at(ed.hi, c) != -1) return false;
    for (Color d = 1; d <= k_; ++d) {
      if (d == c || at(ed.lo, d) == -1 || at(ed.hi, d) == -1) continue;
      // alternate d, c, d, ... from lo; arriving at hi closes a cycle
      Vertex x = ed.lo;
      Color next = d;
      for (int steps = 0; steps <= g_.vertex_count(); ++steps) {
        Vertex y = at(x, next);
        if (y == -1) break;
        if (y == ed.hi) return false;
        x = y;
        next = next == d ? c : d;
      }
    }
    return true;
  }

  void place(int e, Color c) {
    const auto& ed = g_.edge(e);
    color_[e] = c;
    at(ed.lo, c) = ed.hi;
    at(ed.hi, c) = ed.lo;
  }

  void unplace(int e) {
    const auto& ed = g_.edge(e);
    Color c = color_[e];
    color_[e] = kUncolored;
    at(ed.lo, c) = -1;
    at(ed.hi, c) = -1;
  }

  bool out_of_budget() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) return true;
    if ((nodes_ & 1023) == 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) return true;
    }
    return false;
  }

  /// 1 found, 0 exhausted, -1 budget.
  int search(std::size_t pos, int used) {
    if (pos == order_.size()) return 1;
    if (out_of_budget()) return -1;
    int e = order_[pos];
    int limit = symmetric_ ? std::min(k_, used + 1) : k_;
    Color first = opt_.hint.empty() ? kUncolored : opt_.hint[e];
    auto attempt = [&](Color c) {
      if (!can_place(e, c)) return 0;
      place(e, c);
      int r = search(pos + 1, std::max(used, c));
      if (r != 1) unplace(e);
      return r;
    };
    if (first >= 1 && first <= limit) {
      int r = attempt(first);
      if (r != 0) return r;
    }
    for (Color c = 1; c <= limit; ++c) {
      if (c == first) continue;
      int r = attempt(c);
      if (r != 0) return r;
    }
    return 0;
  }

  const Graph& g_;
  int k_;
  OracleBudget budget_;
  const CompletionOptions& opt_;
  std::vector<int> at_;
  std::vector<Color> color_;
  std::vector<int> order_;
  bool symmetric_ = true;
  long nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Decides whether g has an acyclic edge k-coloring extending the
/// precolored edges in opt.
inline OracleResult exists_acyclic_coloring(const Graph& g, int k, const OracleBudget& budget = {},
                                            const CompletionOptions& opt = {}) {
  if (k < 1) throw ColoringError("palette size must be positive");
  auto sized = [&](const std::vector<Color>& v) {
    return v.empty() || static_cast<int>(v.size()) == g.edge_count();
  };
  if (!sized(opt.precolored) || !sized(opt.hint)) throw ColoringError("completion vector size mismatch");
  detail::AcyclicSearch search(g, k, budget, opt);
  OracleResult r = search.run();
  if (r.coloring && check_acyclic(g, *r.coloring)) {
    throw ColoringError("oracle produced a coloring that fails verification");
  }
  return r;
}

struct IndexResult {
  std::optional<int> index;  ///< nullopt when the budget ran out
  std::optional<EdgeColoring> coloring;
  long nodes = 0;
};

/// a'(g), searched upward from Delta. The budget applies to each probe.
inline IndexResult acyclic_chromatic_index(const Graph& g, const OracleBudget& budget = {}) {
  IndexResult out;
  if (g.edge_count() == 0) {
    out.index = 0;
    out.coloring = EdgeColoring(1, 0);
    return out;
  }
  for (int k = max_degree(g);; ++k) {
    OracleResult r = exists_acyclic_coloring(g, k, budget);
    out.nodes += r.nodes;
    if (r.decision == Decision::BudgetExceeded) return out;
    if (r.decision == Decision::Yes) {
      out.index = k;
      out.coloring = std::move(r.coloring);
      return out;
    }
  }
}

}  // namespace aecc

#endif  // AECC_ORACLE_HPP
