#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <utility>

#include "streamcert/sparse_graph.hpp"
#include "test_util.hpp"

using namespace streamcert;

TEST_CASE("add_edge basics") {
  SparseGraph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK(g.edge_count() == 1);
  CHECK_FALSE(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.edge_count() == 1);
  CHECK_FALSE(g.add_edge(2, 2));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

TEST_CASE("remove_edge basics") {
  SparseGraph g(3);
  g.add_edge(0, 1);
  CHECK(g.remove_edge(0, 1));
  CHECK(g.edge_count() == 0);
  CHECK_FALSE(g.remove_edge(0, 1));
  g.add_edge(0, 1);
  CHECK(g.remove_edge(1, 0));
  CHECK(g.edge_count() == 0);
}

TEST_CASE("adjacency stays symmetric under churn") {
  std::mt19937 eng(7);
  SparseGraph g(12);
  std::set<std::pair<int, int>> reference;
  for (int step = 0; step < 2000; ++step) {
    int u = static_cast<int>(eng() % 12);
    int v = static_cast<int>(eng() % 12);
    auto key = std::minmax(u, v);
    if (eng() % 3 == 0) {
      CHECK(g.remove_edge(u, v) == (reference.erase(key) > 0));
    } else {
      bool fresh = u != v && !reference.count(key);
      if (fresh) reference.insert(key);
      CHECK(g.add_edge(u, v) == fresh);
    }
    CHECK(g.edge_count() == static_cast<long>(reference.size()));
  }
  for (int u = 0; u < 12; ++u) {
    for (int v : g.neighbors(u)) {
      CHECK(g.has_edge(v, u));
    }
  }
}

TEST_CASE("connected_components labels by smallest vertex") {
  SparseGraph edgeless(4);
  CHECK(connected_components(edgeless).count == 4);

  SparseGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto labeling = connected_components(g);
  CHECK(labeling.count == 2);
  CHECK(labeling.label[0] == 0);
  CHECK(labeling.label[1] == 0);
  CHECK(labeling.label[2] == 0);
  CHECK(labeling.label[3] == 1);
}

TEST_CASE("spanning forest has the component count of its graph") {
  std::mt19937 eng(21);
  for (int trial = 0; trial < 20; ++trial) {
    SparseGraph g(10);
    for (int i = 0; i < 12; ++i) {
      g.add_edge(static_cast<int>(eng() % 10), static_cast<int>(eng() % 10));
    }
    // Greedy spanning forest: keep each edge joining two components.
    SparseGraph forest(10);
    for (const Edge& e : g.edges()) {
      auto labeling = connected_components(forest);
      if (labeling.label[e.u] != labeling.label[e.v]) {
        forest.add_edge(e.u, e.v);
      }
    }
    CHECK(connected_components(forest).count == connected_components(g).count);
    CHECK(forest.edge_count() == 10 - connected_components(g).count);
  }
}

TEST_CASE("load_graph skips loops and duplicates") {
  testutil::TempDir dir;
  EdgeStream s(testutil::write_file(dir, "g.txt",
                                    "4\n0 1\n1 1\n1 0\n2 3\n0 1\n"));
  SparseGraph g = load_graph(s);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 3));
}

TEST_CASE("edges come out canonical and sorted") {
  SparseGraph g(5);
  g.add_edge(4, 2);
  g.add_edge(1, 0);
  g.add_edge(3, 0);
  auto edges = g.edges();
  REQUIRE(edges.size() == 3);
  CHECK(edges[0] == Edge(0, 1));
  CHECK(edges[1] == Edge(0, 3));
  CHECK(edges[2] == Edge(2, 4));
  for (const Edge& e : edges) CHECK(e.u < e.v);
}

TEST_CASE("memory budget peak is monotone") {
  MemoryBudget budget(100);
  budget.record(10);
  budget.record(4);
  CHECK(budget.peak_words() == 10);
  budget.record(60);
  CHECK(budget.peak_words() == 60);
  CHECK(budget.within_limit());
  budget.record(101);
  CHECK_FALSE(budget.within_limit());
}

TEST_CASE("storage model counts four words per edge") {
  SparseGraph g(6);
  CHECK(g.storage_words() == 6);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(g.storage_words() == 6 + 8);
}
