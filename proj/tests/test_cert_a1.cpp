#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "streamcert/cert_a1.hpp"
#include "streamcert/disjoint_sets.hpp"
#include "streamcert/oracle.hpp"
#include "test_util.hpp"

using namespace streamcert;
using testutil::TempDir;

namespace {

// Straightforward reimplementation of the keep rule with the brute-force
// flow as the path counter; the growing reference graph is independent of
// A1State's internals.
std::vector<Edge> reference_kept_edges(int n, const std::vector<Edge>& stream,
                                       int k) {
  SparseGraph cert(n);
  std::vector<Edge> kept;
  for (const Edge& e : stream) {
    if (e.is_loop() || cert.has_edge(e.u, e.v)) continue;
    if (oracle_local_connectivity(cert, e.u, e.v) <= k - 1) {
      cert.add_edge(e.u, e.v);
      kept.push_back(e);
    }
  }
  return kept;
}

std::vector<Edge> shuffled_gnp_edges(int n, double p, std::uint32_t seed,
                                     SparseGraph* out_graph = nullptr) {
  GenParams params;
  params.model = GraphModel::gnp;
  params.n = n;
  params.p = p;
  params.seed = seed;
  SparseGraph g = generate_graph(params);
  std::vector<Edge> edges = g.edges();
  std::mt19937 eng(seed + 1);
  for (std::size_t i = edges.size(); i > 1; --i) {
    std::swap(edges[i - 1], edges[eng() % i]);
  }
  if (out_graph) *out_graph = g;
  return edges;
}

}  // namespace

TEST_CASE("first edge into an empty certificate is kept") {
  A1State s(3, 2);
  CHECK(s.feed(Edge(0, 1)));
  CHECK(s.certificate().has_edge(0, 1));
}

TEST_CASE("self-loops and duplicates are counted and skipped") {
  A1State s(3, 2);
  CHECK_FALSE(s.feed(Edge(1, 1)));
  CHECK(s.self_loops_skipped() == 1);
  CHECK(s.feed(Edge(0, 1)));
  CHECK_FALSE(s.feed(Edge(1, 0)));
  CHECK(s.duplicates_seen() == 1);
  CHECK(s.edges_kept() == 1);
  CHECK(s.edges_seen() == 3);
}

TEST_CASE("k=1 keeps exactly a spanning forest") {
  std::mt19937 eng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 14;
    auto edges = shuffled_gnp_edges(n, 0.3, 50 + trial);
    A1State s(n, 1);
    DisjointSets forest(n);
    for (const Edge& e : edges) {
      bool kept = s.feed(e);
      CHECK(kept == forest.unite(e.u, e.v));
    }
  }
}

TEST_CASE("K4 in lexicographic order with k=2") {
  A1State s(4, 2);
  CHECK(s.feed(Edge(0, 1)));
  CHECK(s.feed(Edge(0, 2)));
  CHECK(s.feed(Edge(0, 3)));
  CHECK(s.feed(Edge(1, 2)));
  CHECK(s.feed(Edge(1, 3)));
  // kappa(2,3) is already 2 through vertices 0 and 1.
  CHECK_FALSE(s.feed(Edge(2, 3)));
  CHECK(s.edges_kept() == 5);
}

TEST_CASE("K6 with k=5 keeps every edge") {
  TempDir dir;
  GenParams params;
  params.model = GraphModel::complete;
  params.n = 6;
  params.seed = 8;
  SparseGraph g = generate(params, dir.file("k6.txt"));
  EdgeStream stream(dir.file("k6.txt"));
  SparseGraph cert = a1_run(stream, 5);
  CHECK(cert.edge_count() == 15);
}

TEST_CASE("matches the independent reimplementation of the rule") {
  for (std::uint32_t seed : {5u, 6u, 7u}) {
    for (int k = 1; k <= 4; ++k) {
      const int n = 10;
      auto edges = shuffled_gnp_edges(n, 0.45, seed);
      auto expected = reference_kept_edges(n, edges, k);
      A1State s(n, k);
      std::vector<Edge> kept;
      for (const Edge& e : edges) {
        if (s.feed(e)) kept.push_back(e);
      }
      CHECK(kept == expected);
    }
  }
}

TEST_CASE("a1_run consumes exactly one pass and bounds the size") {
  TempDir dir;
  for (std::uint32_t seed : {11u, 12u}) {
    GenParams params;
    params.model = GraphModel::gnp;
    params.n = 18;
    params.p = 0.5;
    params.seed = seed;
    generate(params, dir.file("g.txt"));
    for (int k = 1; k <= 4; ++k) {
      EdgeStream stream(dir.file("g.txt"));
      RunStats stats;
      SparseGraph cert = a1_run(stream, k, &stats);
      CHECK(stream.pass_index() == 1);
      CHECK(stats.passes == 1);
      CHECK(cert.edge_count() <= 2L * k * 18);
      CHECK(stats.cert_edges == cert.edge_count());
      CHECK(stats.algorithm == "a1");
    }
  }
}

TEST_CASE("runners refuse a stream that is not fresh") {
  TempDir dir;
  GenParams params;
  params.model = GraphModel::cycle;
  params.n = 6;
  generate(params, dir.file("c.txt"));
  EdgeStream stream(dir.file("c.txt"));
  stream.next_edge();
  CHECK_THROWS_AS(a1_run(stream, 2), std::invalid_argument);
  stream.rewind();
  CHECK_THROWS_AS(a1_run(stream, 2), std::invalid_argument);
}

TEST_CASE("certificate size respects 2kn after every feed") {
  for (std::uint32_t seed : {21u, 22u}) {
    const int n = 15;
    auto edges = shuffled_gnp_edges(n, 0.7, seed);
    for (int k = 1; k <= 5; ++k) {
      A1State s(n, k);
      for (const Edge& e : edges) {
        s.feed(e);
        CHECK(s.certificate().edge_count() <= 2L * k * n);
      }
    }
  }
}

TEST_CASE("certificate is equivalent to the input for k-connectivity") {
  for (std::uint32_t seed : {31u, 32u, 33u, 34u}) {
    SparseGraph g(0);
    auto edges = shuffled_gnp_edges(12, 0.5, seed, &g);
    for (int k = 1; k <= 4; ++k) {
      A1State s(12, k);
      for (const Edge& e : edges) s.feed(e);
      CHECK(oracle_k_connected(s.certificate(), k) ==
            oracle_k_connected(g, k));
    }
  }
}

TEST_CASE("disconnected input stays not 2-connected") {
  // Two disjoint triangles.
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  SparseGraph g(6);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  A1State s(6, 2);
  for (const Edge& e : edges) s.feed(e);
  CHECK_FALSE(oracle_k_connected(s.certificate(), 2));
  CHECK(oracle_k_connected(g, 2) == oracle_k_connected(s.certificate(), 2));
}

TEST_CASE("local connectivity is preserved up to k") {
  for (std::uint32_t seed : {41u, 42u}) {
    SparseGraph g(0);
    auto edges = shuffled_gnp_edges(10, 0.5, seed, &g);
    for (int k = 1; k <= 4; ++k) {
      A1State s(10, k);
      for (const Edge& e : edges) s.feed(e);
      for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) {
          int in_g = std::min(oracle_local_connectivity(g, u, v), k);
          int in_cert =
              std::min(oracle_local_connectivity(s.certificate(), u, v), k);
          CHECK(in_g == in_cert);
        }
      }
    }
  }
}
