#pragma once

#include <memory>
#include <vector>

#include "streamcert/edge.hpp"
#include "streamcert/edge_stream.hpp"
#include "streamcert/run_stats.hpp"
#include "streamcert/sfs.hpp"
#include "streamcert/sparse_graph.hpp"

namespace streamcert {

/// Finalized scan-first-search forest: its edges plus the order and
/// preceding-neighbor positions needed for O(1) membership tests.
struct ForestRecord {
  std::vector<Edge> edges;
  std::vector<int> order_inv;  // vertex -> position
  std::vector<int> pred_pos;   // vertex -> position of preceding neighbor, -1

  /// O(1): with u before v in this forest's order, the edge is present iff
  /// v's recorded preceding neighbor sits exactly at u's position.
  bool contains(Edge e) const {
    int pu = order_inv[e.u];
    int pv = order_inv[e.v];
    int later = pu < pv ? e.v : e.u;
    return pred_pos[later] == std::min(pu, pv);
  }

  /// Position -> vertex, rebuilt on demand.
  std::vector<int> order() const;

  long words() const {
    return 2L * static_cast<long>(edges.size()) +
           static_cast<long>(order_inv.size() + pred_pos.size());
  }
};

/// Driver state for the (k+1)-pass certificate builder: k nested
/// scan-first-search instances, where instance i's forest is built on the
/// graph with forests 1..i-1 removed.
///
/// Per pass p the routing is: edges found in an already finalized forest are
/// skipped; the rest feed instance p-1's second pass, and every edge that
/// instance rejects or evicts is handed to instance p's first pass (in the
/// final pass, hand-offs are discarded). begin_pass runs the interlude of
/// the instance that just finished its first pass and finalizes the one
/// that just finished its second.
class A2State {
 public:
  A2State(int n, int k, MemoryBudget* budget = nullptr);

  /// p must advance 1, 2, ..., k+1, with the stream rewound in between.
  void begin_pass(int p);

  /// Routes one raw stream edge according to the current pass.
  void feed(Edge e);

  /// After pass k+1: finalizes the last forest and returns their union.
  /// Unless keep_forests is set, per-forest data is released as it is
  /// merged, which keeps the live footprint within the streaming budget.
  SparseGraph finish(bool keep_forests = false);

  /// Valid after finish(true).
  const std::vector<ForestRecord>& forests() const { return records_; }

  int k() const { return k_; }
  int current_pass() const { return current_pass_; }
  const std::vector<long>& per_forest_edges() const { return forest_sizes_; }
  long self_loops_skipped() const { return self_loops_; }
  long duplicates_seen() const { return duplicates_; }
  long skipped_by_membership() const { return skipped_total_; }
  long handed_over() const { return handed_total_; }

  /// Membership checks plus union-find operations, the per-edge cost drivers.
  long protocol_ops() const;

 private:
  void finalize_instance(int idx);
  long live_words() const;
  void record_budget();

  int n_;
  int k_;
  MemoryBudget* budget_;
  int current_pass_ = 0;
  bool finished_ = false;
  std::vector<std::unique_ptr<SfsState>> instances_;
  std::vector<ForestRecord> records_;
  std::vector<long> forest_sizes_;
  // Per-pass accounting, indexed by pass number (0 unused).
  std::vector<long> raw_fed_;
  std::vector<long> skipped_;
  std::vector<long> handed_;
  long skipped_total_ = 0;
  long handed_total_ = 0;
  long self_loops_ = 0;
  long duplicates_ = 0;
  long membership_checks_ = 0;
  long dsu_ops_done_ = 0;  // from instances already finalized
};

/// Drives k+1 passes over the stream (each ending with a rewind) and returns
/// the union of the k scan-first-search forests.
SparseGraph a2_run(EdgeStream& stream, int k, RunStats* stats = nullptr);

}  // namespace streamcert
