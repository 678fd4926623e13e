//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cat0lab/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "cat0lab/error.hpp"
#include "cat0lab/special_graphs.hpp"

namespace cat0lab::io {

graph::Graph read_edge_list(std::istream& in) {
  std::vector<graph::Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    graph::Edge e;
    if (!(ls >> e.u >> e.v)) throw IoError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    if (!(ls >> e.length)) e.length = 1.0;
    std::string rest;
    if (ls >> rest) throw IoError("edge list line " + std::to_string(lineno) + ": trailing input");
    edges.push_back(e);
  }
  if (edges.empty()) throw IoError("edge list: no edges");
  return graph::Graph::from_edges(std::move(edges));
}

std::string write_edge_list(const graph::Graph& g) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.length != 1.0) out << ' ' << e.length;
    out << '\n';
  }
  return out.str();
}

graph::Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<graph::Edge> edges;
    for (const auto& item : j.at("edges")) {
      if (!item.is_array() || item.size() < 2 || item.size() > 3) throw IoError("graph json: bad edge entry");
      graph::Edge e{item[0].get<int>(), item[1].get<int>(), 1.0};
      if (item.size() == 3) e.length = item[2].get<double>();
      edges.push_back(e);
    }
    std::optional<int> n;
    if (j.contains("n")) n = j.at("n").get<int>();
    return graph::Graph::from_edges(std::move(edges), n);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("graph json: ") + e.what());
  }
}

nlohmann::json graph_to_json(const graph::Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  bool unit = true;
  for (const auto& e : g.edges()) unit = unit && e.length == 1.0;
  for (const auto& e : g.edges()) {
    if (unit) {
      edges.push_back({e.u, e.v});
    } else {
      edges.push_back({e.u, e.v, e.length});
    }
  }
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("cannot write " + path);
}

namespace {

std::vector<int> parse_args(const std::string& ref, std::size_t from) {
  std::vector<int> out;
  std::istringstream ss(ref.substr(from));
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(ErrorKind::kPrecondition, "graph reference '" + ref + "': bad integer '" + part + "'");
    }
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

graph::Graph load_graph(const std::string& ref) {
  if (ref == "triangle") return graph::triangle();
  if (ref == "petersen") return graph::petersen();
  if (ref == "heawood") return load_graph("gt:2");
  const auto colon = ref.find(':');
  if (colon != std::string::npos) {
    const std::string kind = ref.substr(0, colon);
    const auto args = parse_args(ref, colon + 1);
    const auto want = [&](std::size_t n) {
      require(args.size() == n, "graph reference '" + ref + "': expected " + std::to_string(n) + " parameter(s)");
    };
    if (kind == "complete") return want(1), graph::complete_graph(args[0]);
    if (kind == "cycle") return want(1), graph::cycle_graph(args[0]);
    if (kind == "path") return want(1), graph::path_graph(args[0]);
    if (kind == "star") return want(1), graph::star_graph(args[0]);
    // Unit edge lengths: the combinatorial graph, not the metric graph.
    if (kind == "gt") {
      want(1);
      const auto gt = special::generalized_triangle(args[0]).graph;
      std::vector<std::pair<int, int>> pairs;
      for (const auto& e : gt.edges()) pairs.emplace_back(e.u, e.v);
      return graph::Graph::from_pairs(pairs, gt.vertex_count());
    }
    if (kind == "lps") return want(2), special::lps_graph(args[0], args[1]).graph;
  }
  const std::string text = read_file(ref);
  if (ends_with(ref, ".json")) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw IoError(ref + ": " + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace cat0lab::io
