/// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
/// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "aecc/colorer.hpp"
#include "aecc/corpus.hpp"
#include "aecc/discharge.hpp"
#include "aecc/io.hpp"
#include "aecc/oracle.hpp"
#include "test_util.hpp"

using namespace aecc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
  if (!ok) ++failures;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = standard_corpus();
  return c;
}

void criterion1() {
  auto t = Clock::now();
  auto r = acyclic_chromatic_index(named("K4"));
  double s = seconds_since(t);
  bool ok = r.index == 5 && s < 1.0;
  std::ostringstream d;
  d << "index of K4 = " << (r.index ? std::to_string(*r.index) : "budget") << " in " << s << " s";
  report(1, ok, d.str());
}

/// Serialized coloring and trace per corpus graph, reused by criterion 9.
std::vector<std::string> color_corpus(int& bad, std::string& first_bad) {
  std::vector<std::string> out;
  for (const auto& entry : corpus()) {
    const Graph& g = entry.graph;
    std::ostringstream s;
    try {
      auto run = color_planar(g);
      int bound = g.edge_count() ? max_degree(g) + 5 : 5;
      int top = 0;
      for (Color c : run.coloring.colors()) top = std::max(top, c);
      bool ok = run.coloring.is_total() && !check_acyclic(g, run.coloring) &&
                aecc::testing::forest_check(g, run.coloring) && top <= bound;
      if (!ok) {
        ++bad;
        if (first_bad.empty()) first_bad = entry.name;
      }
      write_coloring(s, g, run.coloring);
      s << to_json(run.trace).dump();
    } catch (const std::exception& e) {
      ++bad;
      if (first_bad.empty()) first_bad = entry.name + " (" + e.what() + ")";
    }
    out.push_back(s.str());
  }
  return out;
}

std::vector<std::string> first_coloring_pass;

void criterion2() {
  auto t = Clock::now();
  int bad = 0;
  std::string first_bad;
  first_coloring_pass = color_corpus(bad, first_bad);
  double s = seconds_since(t);
  std::ostringstream d;
  d << corpus().size() << " graphs, " << bad << " failures";
  if (bad) d << " (first: " << first_bad << ")";
  d << ", " << s << " s";
  report(2, corpus().size() >= 200 && bad == 0 && s < 600.0, d.str());
}

void criterion3() {
  int checked = 0, bad = 0;
  std::string first_bad;
  for (const auto& entry : corpus()) {
    const Graph& g = entry.graph;
    if (g.edge_count() == 0 || g.edge_count() > 20) continue;
    int delta = max_degree(g);
    if (delta != 3 && delta != 4) continue;
    ++checked;
    auto r = exists_acyclic_coloring(g, delta + 2);
    if (r.decision != Decision::Yes) {
      ++bad;
      if (first_bad.empty()) first_bad = entry.name;
    }
  }
  std::ostringstream d;
  d << checked << " graphs with Delta in {3,4} and <= 20 edges, " << bad << " without a Delta+2 coloring";
  if (bad) d << " (first: " << first_bad << ")";
  report(3, checked > 0 && bad == 0, d.str());
}

void criterion4() {
  int checked = 0, bad = 0;
  std::string first_bad;
  for (const auto& entry : corpus()) {
    const Graph& g = entry.graph;
    if (g.edge_count() == 0 || max_degree(g) < 5 || !is_two_connected(g)) continue;
    ++checked;
    if (!find_any_configuration(g)) {
      ++bad;
      if (first_bad.empty()) first_bad = entry.name;
    }
  }
  std::ostringstream d;
  d << checked << " 2-connected graphs with Delta >= 5, " << bad << " without a configuration";
  if (bad) d << " (first: " << first_bad << ")";
  report(4, checked > 0 && bad == 0, d.str());
}

std::string discharge_json(const Graph& g) {
  auto sh = build_H(g);
  auto e = *embed(sh.h);
  auto initial = initial_charges(e);
  auto result = apply_rules(e, initial);
  return discharge_report(sh, e, initial, result, check_structural_lemmas(g, sh, e)).dump();
}

void criterion5() {
  int checked = 0, skipped = 0, bad = 0;
  std::string first_bad;
  for (const auto& entry : corpus()) {
    if (strip_degree2(entry.graph).graph.vertex_count() == 0) {
      ++skipped;
      continue;
    }
    auto sh = build_H(entry.graph);
    auto e = embed(sh.h);
    if (!e) {
      ++bad;
      continue;
    }
    ++checked;
    auto initial = initial_charges(*e);
    auto result = apply_rules(*e, initial);
    if (total_charge(initial) != Rational(8) || total_charge(result.ledger) != Rational(8)) {
      ++bad;
      if (first_bad.empty()) first_bad = entry.name;
    }
  }
  std::ostringstream d;
  d << checked << " graphs total 8 before and after discharging, " << bad << " mismatches, " << skipped
    << " skipped (no vertex of degree >= 3)";
  if (bad) d << " (first: " << first_bad << ")";
  report(5, checked > 0 && bad == 0, d.str());
}

void criterion6() {
  int cases = 0, bad = 0;
  for (int k = 6; k <= 30; ++k) {
    for (int n = 1; n <= k; ++n) {
      ++cases;
      Rational a = alpha(k, n);
      bool ok = a >= Rational(1) - Rational(4, k);
      if (k == 6) ok = ok && a == Rational(1, 3);
      if (k >= 12) ok = ok && a >= Rational(2, 3);
      if (n <= k - 6) ok = ok && a >= Rational(2, 3);
      bad += ok ? 0 : 1;
    }
  }
  report(6, bad == 0, std::to_string(cases) + " (k, n) pairs checked exactly, " + std::to_string(bad) + " violations");
}

/// One representative per isomorphism class of graphs on 6 vertices.
std::vector<Graph> graphs_on_six_vertices() {
  constexpr int n = 6;
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2, 3, 4, 5};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> slot_of(n * n);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot_of[slots[i].first * n + slots[i].second] = static_cast<int>(i);
    slot_of[slots[i].second * n + slots[i].first] = static_cast<int>(i);
  }
  std::set<int> seen;
  std::vector<Graph> out;
  for (int mask = 0; mask < (1 << slots.size()); ++mask) {
    int canon = mask;
    for (const auto& q : perms) {
      int img = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1) img |= 1 << slot_of[q[slots[i].first] * n + q[slots[i].second]];
      }
      canon = std::min(canon, img);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<EdgeId> e;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (canon >> i & 1) e.push_back(make_edge(slots[i].first, slots[i].second));
    }
    out.emplace_back(n, e);
  }
  return out;
}

void criterion7() {
  auto graphs = graphs_on_six_vertices();
  long colorings = 0, disagreements = 0;
  for (const Graph& g : graphs) {
    if (g.edge_count() == 0 || max_degree(g) > 4) continue;
    const int m = g.edge_count();
    std::vector<Color> col(static_cast<std::size_t>(m), kUncolored);
    std::function<void(int)> rec = [&](int e) {
      if (e == m) {
        EdgeColoring c(4, col);
        ++colorings;
        bool cyc = find_bichromatic_cycle(g, c).has_value();
        if (cyc == aecc::testing::forest_check(g, c)) ++disagreements;
        return;
      }
      const auto& ed = g.edge(e);
      for (Color k = 1; k <= 4; ++k) {
        bool clash = false;
        for (Vertex x : {ed.lo, ed.hi}) {
          for (int f : g.incident_edges(x)) clash = clash || (f < e && col[f] == k);
        }
        if (clash) continue;
        col[e] = k;
        rec(e + 1);
      }
      col[e] = kUncolored;
    };
    rec(0);
  }
  std::ostringstream d;
  d << graphs.size() << " isomorphism classes on 6 vertices (smaller graphs appear with isolated vertices), "
    << colorings << " proper colorings with at most 4 colors, " << disagreements << " disagreements";
  report(7, colorings > 0 && disagreements == 0, d.str());
}

void criterion8() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const char* name : {"K3", "K4", "K5", "C3", "C4", "C5", "C6", "C7", "C8", "P2", "P3", "P4", "P5", "P6",
                           "P7", "P8", "star3", "star4", "star5", "star6", "star7", "W3", "W4", "W5", "W6",
                           "W7", "cube", "octahedron", "grid2x2", "grid2x3", "grid2x4"}) {
    graphs.emplace_back(name, named(name));
  }
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> pd(0.15, 0.95);
  for (int i = 0; i < 10000; ++i) {
    int n = 3 + static_cast<int>(rng() % 6);
    graphs.emplace_back("random-" + std::to_string(i), aecc::testing::random_graph(rng, n, pd(rng)));
  }
  long checks = 0, hits = 0, bad = 0;
  std::string first_bad;
  for (const auto& [name, g] : graphs) {
    for (Tag t : kAllTags) {
      ++checks;
      auto got = detect(g, t);
      auto want = aecc::testing::brute_force_witness(g, t);
      hits += want ? 1 : 0;
      bool ok = got.has_value() == want.has_value() && (!got || got->witness == *want);
      if (!ok) {
        ++bad;
        if (first_bad.empty()) first_bad = name + " " + std::string(tag_name(t));
      }
    }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs x 32 tags = " << checks << " detector runs (" << hits
    << " with a witness), " << bad << " disagreements with tuple enumeration";
  if (bad) d << " (first: " << first_bad << ")";
  report(8, bad == 0, d.str());
}

void criterion9() {
  int bad = 0;
  std::string first_bad;
  auto second = color_corpus(bad, first_bad);
  int diff = 0;
  for (std::size_t i = 0; i < second.size(); ++i) {
    if (i >= first_coloring_pass.size() || second[i] != first_coloring_pass[i]) ++diff;
  }
  int report_diff = 0, reports = 0;
  for (const auto& entry : corpus()) {
    if (strip_degree2(entry.graph).graph.vertex_count() == 0) continue;
    ++reports;
    if (discharge_json(entry.graph) != discharge_json(entry.graph)) ++report_diff;
  }
  int gen_diff = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto a = standard_corpus(seed), b = standard_corpus(seed);
    for (std::size_t i = 0; i < a.size(); ++i) gen_diff += a[i].graph == b[i].graph ? 0 : 1;
  }
  std::ostringstream d;
  d << second.size() << " colorings+traces with " << diff << " byte differences, " << reports << " discharge reports with "
    << report_diff << " differences, " << gen_diff << " generator differences";
  report(9, diff == 0 && report_diff == 0 && gen_diff == 0 && second.size() == first_coloring_pass.size(), d.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  return failures == 0 ? 0 : 1;
}
