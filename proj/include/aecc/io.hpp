#ifndef AECC_IO_HPP
#define AECC_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aecc/coloring.hpp"
#include "aecc/colorer.hpp"
#include "aecc/configurations.hpp"
#include "aecc/discharge.hpp"
#include "aecc/graph.hpp"

namespace aecc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

namespace detail {

/// Splits a line into integer fields after dropping any '#' comment.
inline std::vector<long> int_fields(const std::string& raw, int line_no, char extra_sep = '\0') {
  std::string line = raw.substr(0, raw.find('#'));
  if (extra_sep) {
    for (char& ch : line) {
      if (ch == extra_sep) ch = ' ';
    }
  }
  std::istringstream in(line);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline void require_id(long v, int line_no) {
  if (v < 0 || v > 10'000'000) throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range");
}

}  // namespace detail

/// "u v" per line, 0-indexed; the vertex count is one more than the
/// largest id.
inline Graph read_edge_list(std::istream& in) {
  std::vector<EdgeId> edges;
  std::string line;
  int line_no = 0;
  long n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto f = detail::int_fields(line, line_no);
    if (f.empty()) continue;
    if (f.size() != 2) throw ParseError(line_no, "expected 'u v'");
    detail::require_id(f[0], line_no);
    detail::require_id(f[1], line_no);
    if (f[0] == f[1]) throw ParseError(line_no, "self-loop");
    edges.push_back(make_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1])));
    n = std::max({n, f[0] + 1, f[1] + 1});
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& e : g.edges()) out << e.lo << ' ' << e.hi << '\n';
}

/// "u v color" per line; edges not listed, or listed with color 0, stay
/// uncolored. The palette is the largest color seen unless given.
inline EdgeColoring read_coloring(std::istream& in, const Graph& g, int palette = 0) {
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), kUncolored);
  std::vector<bool> listed(colors.size(), false);
  std::string line;
  int line_no = 0;
  int top = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto f = detail::int_fields(line, line_no);
    if (f.empty()) continue;
    if (f.size() != 3) throw ParseError(line_no, "expected 'u v color'");
    detail::require_id(f[0], line_no);
    detail::require_id(f[1], line_no);
    if (f[0] >= g.vertex_count() || f[1] >= g.vertex_count()) throw ParseError(line_no, "vertex not in graph");
    int e = g.edge_index(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
    if (e < 0) throw ParseError(line_no, "edge not in graph");
    if (listed[e]) throw ParseError(line_no, "edge listed twice");
    if (f[2] < 0 || f[2] > 1'000'000) throw ParseError(line_no, "color out of range");
    if (palette > 0 && f[2] > palette) throw ParseError(line_no, "color exceeds palette");
    listed[e] = true;
    colors[e] = static_cast<Color>(f[2]);
    top = std::max(top, colors[e]);
  }
  return EdgeColoring(palette > 0 ? palette : std::max(top, 1), colors);
}

inline void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c) {
  for (int e = 0; e < g.edge_count(); ++e) out << g.edge(e).lo << ' ' << g.edge(e).hi << ' ' << c[e] << '\n';
}

/// "v: n1 n2 ..." per line.
inline std::vector<std::vector<Vertex>> read_rotation(std::istream& in, int vertex_count) {
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(vertex_count));
  std::vector<bool> seen(rot.size(), false);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'v: n1 n2 ...'");
    auto head = detail::int_fields(body.substr(0, colon), line_no);
    if (head.size() != 1) throw ParseError(line_no, "expected a single vertex before ':'");
    if (head[0] < 0 || head[0] >= vertex_count) throw ParseError(line_no, "vertex not in graph");
    if (seen[head[0]]) throw ParseError(line_no, "vertex listed twice");
    seen[head[0]] = true;
    for (long w : detail::int_fields(body.substr(colon + 1), line_no)) {
      detail::require_id(w, line_no);
      rot[head[0]].push_back(static_cast<Vertex>(w));
    }
  }
  return rot;
}

inline void write_rotation(std::ostream& out, const std::vector<std::vector<Vertex>>& rot) {
  for (std::size_t v = 0; v < rot.size(); ++v) {
    out << v << ':';
    for (Vertex w : rot[v]) out << ' ' << w;
    out << '\n';
  }
}

using nlohmann::json;

inline json to_json(const Violation& v) {
  json j;
  j["kind"] = v.kind == Violation::Kind::Proper ? "Proper" : "Bichromatic";
  j["cycle"] = v.cycle;
  j["edges"] = json::array();
  for (const auto& e : v.edges) j["edges"].push_back({e.lo, e.hi});
  if (v.kind == Violation::Kind::Bichromatic) j["colors"] = {v.color_a, v.color_b};
  return j;
}

inline json to_json(const Configuration& c) {
  return {{"tag", std::string(tag_name(c.tag))}, {"witness", c.witness}, {"delta", c.delta}};
}

inline json to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) {
    out.push_back({{"block", s.block},
                   {"config", s.tag},
                   {"reduction", to_string(s.kind)},
                   {"rung", s.rung},
                   {"nodes", s.nodes}});
  }
  return out;
}

/// Discharge report. Vertex ids are those of G; faces are numbered in
/// trace order of the embedding of H.
inline json discharge_report(const StrippedGraph& sh, const PlaneEmbedding& e, const ChargeLedger& initial,
                             const DischargeResult& result, const std::vector<LemmaViolation>& lemmas) {
  auto name = [&](const Element& x) {
    return x.kind == Element::Kind::Vertex ? "v" + std::to_string(sh.h_to_g[x.index]) : to_string(x);
  };
  auto charges = [&](const ChargeLedger& l) {
    json j = json::object();
    for (std::size_t i = 0; i < l.vertex_charge.size(); ++i) {
      j[name(vertex_element(static_cast<int>(i)))] = to_string(l.vertex_charge[i]);
    }
    for (std::size_t i = 0; i < l.face_charge.size(); ++i) {
      j[name(face_element(static_cast<int>(i)))] = to_string(l.face_charge[i]);
    }
    return j;
  };
  json faces = json::array();
  for (int f = 0; f < e.face_count(); ++f) {
    std::vector<Vertex> boundary;
    for (Vertex x : e.faces()[f].boundary) boundary.push_back(sh.h_to_g[x]);
    faces.push_back({{"id", "f" + std::to_string(f)}, {"boundary", boundary}});
  }
  json transfers = json::array();
  for (const auto& t : result.ledger.transfers) {
    transfers.push_back({{"rule", t.rule},
                         {"source", name(t.source)},
                         {"sink", name(t.sink)},
                         {"via", name(t.via)},
                         {"amount", to_string(t.amount)}});
  }
  json positives = json::array();
  for (const auto& entry : final_report(result.ledger)) {
    if (entry.positive) positives.push_back({{"element", name(entry.element)}, {"charge", to_string(entry.charge)}});
  }
  json lemma_json = json::array();
  for (const auto& v : lemmas) lemma_json.push_back({{"clause", v.clause}, {"vertices", v.vertices}, {"detail", v.detail}});
  return {{"h_vertices", sh.h_to_g},
          {"components", sh.component_count},
          {"faces", faces},
          {"initial", charges(initial)},
          {"initial_total", to_string(total_charge(initial))},
          {"transfers", transfers},
          {"final", charges(result.ledger)},
          {"final_total", to_string(total_charge(result.ledger))},
          {"positive", positives},
          {"near_misses", result.near_misses},
          {"lemma_violations", lemma_json}};
}

}  // namespace aecc

#endif  // AECC_IO_HPP
