#pragma once

#include <cstdint>

#include "streamcert/edge.hpp"
#include "streamcert/edge_stream.hpp"
#include "streamcert/run_stats.hpp"
#include "streamcert/sparse_graph.hpp"

namespace streamcert {

/// One-pass certificate builder: an input edge is kept iff its endpoints
/// have at most k-1 vertex-disjoint paths in the certificate built so far.
/// The resulting subgraph is k-connected iff the input graph is, and never
/// exceeds 2kn edges.
class A1State {
 public:
  A1State(int n, int k, MemoryBudget* budget = nullptr);

  /// Feeds one edge; returns true iff it was added to the certificate.
  /// Self-loops and edges already present are counted and skipped.
  bool feed(Edge e);

  const SparseGraph& certificate() const { return cert_; }
  int k() const { return k_; }
  long edges_seen() const { return edges_seen_; }
  long edges_kept() const { return cert_.edge_count(); }
  long self_loops_skipped() const { return self_loops_; }
  long duplicates_seen() const { return duplicates_; }

  /// Residual arcs scanned across all connectivity tests so far.
  std::uint64_t flow_work() const { return flow_work_; }

 private:
  int k_;
  SparseGraph cert_;
  MemoryBudget* budget_;
  long edges_seen_ = 0;
  long self_loops_ = 0;
  long duplicates_ = 0;
  std::uint64_t flow_work_ = 0;
};

/// Feeds every edge of one pass through A1State and rewinds, so the stream's
/// pass_index advances by exactly one. Returns the final certificate.
SparseGraph a1_run(EdgeStream& stream, int k, RunStats* stats = nullptr);

}  // namespace streamcert
