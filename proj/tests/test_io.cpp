//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <set>
#include <sstream>

#include "cat0lab/error.hpp"
#include "cat0lab/experiments.hpp"
#include "cat0lab/io.hpp"

using namespace cat0lab;

TEST_CASE("edge list and json graph formats") {
  std::istringstream in("# triangle plus a tail\n0 1\n1 2\n\n2 0\n2 3 2.5\n");
  const auto g = io::read_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.edge(3).length == 2.5);

  std::istringstream again(io::write_edge_list(g));
  const auto h = io::read_edge_list(again);
  CHECK(h.edge_count() == 4);
  CHECK(h.edge(3).length == 2.5);

  const auto j = io::graph_to_json(graph::petersen());
  CHECK(j["n"] == 10);
  const auto p = io::graph_from_json(j);
  CHECK(p.edge_count() == 15);
  CHECK(graph::girth(p) == 5);

  std::istringstream bad("0 1\n1 x\n");
  CHECK_THROWS_AS(io::read_edge_list(bad), io::IoError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(io::read_edge_list(empty), io::IoError);
  CHECK_THROWS_AS(io::graph_from_json(nlohmann::json{{"n", 2}}), io::IoError);
}

TEST_CASE("graph references") {
  CHECK(io::load_graph("petersen").vertex_count() == 10);
  CHECK(io::load_graph("complete:4").edge_count() == 6);
  CHECK(io::load_graph("cycle:12").vertex_count() == 12);
  const auto gt = io::load_graph("gt:2");
  CHECK(gt.vertex_count() == 14);
  CHECK(gt.edge(0).length == 1.0);
  CHECK(io::load_graph("heawood").edge_count() == 21);
  CHECK_THROWS_AS(io::load_graph("cycle:x"), Error);
  CHECK_THROWS_AS(io::load_graph("complete:3:4"), Error);
  CHECK_THROWS_AS(io::load_graph("/nonexistent/graph.txt"), io::IoError);
}

TEST_CASE("experiment catalog and configs") {
  const auto& cat = experiments::catalog();
  CHECK(cat.size() >= 15);
  std::set<std::string> names;
  for (const auto& e : cat) {
    names.insert(e.name);
    CHECK(!e.anchor.empty());
  }
  CHECK(names.size() == cat.size());
  CHECK_THROWS_AS(experiments::find("no-such-thing"), Error);

  const auto& e = experiments::find("delta-mu0");
  CHECK(experiments::complete_config(e, nlohmann::json::object())["r"] == 2);
  CHECK_THROWS_AS(experiments::complete_config(e, {{"q", 3}}), Error);
  CHECK_THROWS_AS(experiments::complete_config(e, {{"r", "two"}}), Error);
  CHECK_THROWS_AS(experiments::run("labelling", nlohmann::json::object()), Error);

  const nlohmann::json config = {{"graph", "petersen"}, {"k", 2}, {"n", 2}, {"trials", 50}, {"seed", 3}};
  const auto a = experiments::run("weighted-sum", config);
  const auto b = experiments::run("weighted-sum", config);
  CHECK(a.document.dump() == b.document.dump());
  CHECK(a.csv == b.csv);
  CHECK(a.document["config"]["seed"] == 3);
  CHECK(a.document.contains("version"));
  CHECK(!a.document.contains("timestamp"));
  const auto c = experiments::run("weighted-sum", {{"trials", 50}, {"seed", 4}});
  CHECK(c.document.dump() != a.document.dump());
}
