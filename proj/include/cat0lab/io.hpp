//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_IO_HPP_
#define CAT0LAB_IO_HPP_

#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cat0lab/graph.hpp"

namespace cat0lab::io {

/// Unreadable or malformed files; kept apart from cat0lab::Error so callers
/// can report I/O failures separately.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One `u v` or `u v length` line per edge, 0-indexed; blank lines and
/// lines starting with '#' are skipped.
graph::Graph read_edge_list(std::istream& in);
std::string write_edge_list(const graph::Graph& g);

/// {"n": int, "edges": [[u, v], ...]}; an edge may carry a third entry, its
/// length.
graph::Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const graph::Graph& g);

/// Resolves a graph reference: triangle, petersen, heawood, complete:N,
/// cycle:N, path:N, star:N, gt:R, lps:P:Q, or a file path (.json for JSON,
/// anything else an edge list).
graph::Graph load_graph(const std::string& ref);
inline constexpr const char* kGraphRefHelp =
    "triangle | petersen | heawood | complete:N | cycle:N | path:N | star:N | gt:R | lps:P:Q | "
    "FILE (.json or edge list)";

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cat0lab::io

#endif  // CAT0LAB_IO_HPP_
