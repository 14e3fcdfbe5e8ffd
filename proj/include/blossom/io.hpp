#pragma once

// File formats.
//
//   DIMACS edge format   "p edge <n> <m>" then m lines "e <u> <v>", 1-based;
//                        "c" lines are comments.
//   bare edge list       one "u v" pair per line, 0-based, n = max id + 1;
//                        "#" lines are comments.
//   result document      JSON object {n, m, matching, osc, size, verdict}.
//   certificate          the same object without verdict (ignored if present).

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blossom/alt_search.hpp"
#include "blossom/certify.hpp"
#include "blossom/errors.hpp"
#include "blossom/graph.hpp"

namespace blossom::io {

enum class GraphFormat { Auto, Dimacs, EdgeList };

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

inline std::int64_t to_int(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok +
                     "'");
  }
  return value;
}

[[noreturn]] inline void fail(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

inline void add_edge(std::vector<Edge>& edges, std::set<Edge>& seen, Edge e, std::size_t line_no) {
  if (!seen.insert(e).second) fail(line_no, "duplicate edge");
  edges.push_back(e);
}

inline Graph build(std::size_t n, std::vector<Edge> edges, std::size_t line_no) {
  try {
    return Graph(n, std::move(edges));
  } catch (const InputError& e) {
    fail(line_no, e.what());
  }
}

inline Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::int64_t n = -1;
  std::int64_t declared = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) fail(line_no, "second problem line");
      if (tok.size() != 4 || tok[1] != "edge") fail(line_no, "expected 'p edge <n> <m>'");
      n = to_int(tok[2], line_no);
      declared = to_int(tok[3], line_no);
      if (n < 0 || declared < 0) fail(line_no, "negative size in problem line");
      continue;
    }
    if (tok[0] != "e") fail(line_no, "unknown line type '" + tok[0] + "'");
    if (n < 0) fail(line_no, "edge before problem line");
    if (tok.size() != 3) fail(line_no, "expected 'e <u> <v>'");
    const std::int64_t u = to_int(tok[1], line_no);
    const std::int64_t v = to_int(tok[2], line_no);
    if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "vertex id outside [1, n]");
    if (u == v) fail(line_no, "self-loop");
    add_edge(edges, seen, Edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)), line_no);
  }
  if (n < 0) fail(line_no, "missing problem line 'p edge <n> <m>'");
  if (static_cast<std::int64_t>(edges.size()) != declared) {
    fail(line_no, "problem line declares " + std::to_string(declared) + " edges, found " +
                      std::to_string(edges.size()));
  }
  return build(static_cast<std::size_t>(n), std::move(edges), line_no);
}

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::int64_t max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok.size() != 2) fail(line_no, "expected '<u> <v>'");
    const std::int64_t u = to_int(tok[0], line_no);
    const std::int64_t v = to_int(tok[1], line_no);
    if (u < 0 || v < 0 || u >= kNoVertex || v >= kNoVertex) fail(line_no, "vertex id out of range");
    if (u == v) fail(line_no, "self-loop");
    add_edge(edges, seen, Edge(static_cast<Vertex>(u), static_cast<Vertex>(v)), line_no);
    max_id = std::max({max_id, u, v});
  }
  return build(static_cast<std::size_t>(max_id + 1), std::move(edges), line_no);
}

}  // namespace detail

/// Throws InputError naming the offending line.
inline Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::Auto) {
  if (format == GraphFormat::Auto) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    format = GraphFormat::EdgeList;
    std::istringstream scan(text);
    for (std::string line; std::getline(scan, line);) {
      const auto tok = detail::tokenize(line);
      if (tok.empty() || tok[0].front() == '#') continue;
      if (tok[0] == "p" || tok[0] == "c" || tok[0] == "e") format = GraphFormat::Dimacs;
      break;
    }
    std::istringstream again(text);
    return parse_graph(again, format);
  }
  return format == GraphFormat::Dimacs ? detail::parse_dimacs(in) : detail::parse_edge_list(in);
}

inline Graph read_graph(const std::string& path, GraphFormat format = GraphFormat::Auto) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_graph(in, format);
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.lo() + 1 << ' ' << e.hi() + 1 << '\n';
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.lo() << ' ' << e.hi() << '\n';
}

using Json = nlohmann::ordered_json;

inline Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = v.accepted ? "accept" : "reject";
  j["reason"] = v.accepted ? Json(nullptr) : Json(v.reason);
  return j;
}

inline Json result_document(const Graph& g, const Matching& m, const OddSetCover& osc,
                            const Verdict& verdict) {
  Json doc;
  doc["n"] = g.vertex_count();
  doc["m"] = g.edge_count();
  Json edges = Json::array();
  for (const Edge& e : m.edges()) edges.push_back({e.lo(), e.hi()});
  doc["matching"] = std::move(edges);
  doc["osc"] = osc.labels;
  doc["size"] = m.size();
  doc["verdict"] = verdict_json(verdict);
  return doc;
}

/// A certificate as read from disk; nothing about it is trusted yet.
struct Certificate {
  std::vector<std::pair<std::int64_t, std::int64_t>> matching;
  std::vector<Label> osc;
};

inline Certificate parse_certificate(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("certificate: ") + e.what());
  }
  try {
    Certificate c;
    for (const auto& pair : doc.at("matching")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw InputError("certificate: matching entries must be [u, v] pairs");
      }
      c.matching.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
    }
    c.osc = doc.at("osc").get<std::vector<Label>>();
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("certificate: ") + e.what());
  }
}

inline Certificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_certificate(in);
}

/// Runs the checker on an untrusted certificate. Pairs that cannot be edges
/// of g at all (self-loops, ids outside [0, n)) are rejected as foreign.
inline Verdict check_certificate(const Graph& g, const Certificate& c) {
  std::vector<Edge> edges;
  edges.reserve(c.matching.size());
  for (auto [u, v] : c.matching) {
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      return Verdict::reject(reason::kForeignEdge);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return check_max_card_matching(g, edges, c.osc);
}

inline const char* action_name(SearchAction a) {
  switch (a) {
    case SearchAction::Grow: return "grow";
    case SearchAction::Found: return "found";
    case SearchAction::SkipOdd: return "skip-odd";
  }
  return "?";
}

/// One line-delimited trace record.
inline std::string trace_record(std::size_t phase, std::size_t level, const SearchEvent& e) {
  Json j;
  j["phase"] = phase;
  j["level"] = level;
  j["edge"] = {e.v1, e.v2};
  j["action"] = action_name(e.action);
  return j.dump();
}

}  // namespace blossom::io
