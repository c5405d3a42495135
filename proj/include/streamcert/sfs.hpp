#pragma once

#include <memory>
#include <vector>

#include "streamcert/disjoint_sets.hpp"
#include "streamcert/edge.hpp"
#include "streamcert/sparse_graph.hpp"

namespace streamcert {

enum class SfsPhase { pass1, interlude_done, pass2, finished };

/// Outcome of feeding an edge in pass 2: the edge was absorbed (none),
/// rejected (pass_through) or swapped in while another left the forest
/// (evicted). Rejected and evicted edges are what a driver forwards to the
/// next nested instance.
struct HandOff {
  enum class Kind { none, pass_through, evicted };
  Kind kind = Kind::none;
  Edge edge{};

  static HandOff none() { return {}; }
  static HandOff pass_through(Edge e) { return {Kind::pass_through, e}; }
  static HandOff evicted(Edge e) { return {Kind::evicted, e}; }
};

/// Two-pass scan-first-search simulation over an edge sequence.
///
/// Pass 1 grows a spanning forest Z with union-find. The interlude runs a
/// depth-first search on Z (roots and neighbors in ascending id) and records
/// its preorder as the vertex order o; Z and the union-find are released.
/// Pass 2 keeps, for every vertex v, the edge to the neighbor with the
/// smallest position preceding v, evicting the previously held edge when a
/// better one arrives. The surviving edges form the scan-first-search forest
/// that a direct scan in order o would produce on the pass-2 edge set.
class SfsState {
 public:
  explicit SfsState(int n);

  SfsPhase phase() const { return phase_; }
  int vertex_count() const { return n_; }

  /// Pass-1 edge: returns true iff it joined two components (added to Z).
  bool pass1_feed(Edge e);

  /// Builds the vertex order from Z and moves to interlude_done.
  void interlude();

  /// Pass-2 edge: applies the preceding-neighbor rule to the forest F.
  HandOff pass2_feed(Edge e);

  /// Returns the forest F; the order arrays stay accessible.
  SparseGraph finish();

  /// Position -> vertex; valid from interlude_done on.
  const std::vector<int>& order() const { return order_; }
  /// Vertex -> position; valid from interlude_done on.
  const std::vector<int>& order_inv() const { return order_inv_; }
  /// Vertex -> position of its preceding neighbor in F, or -1.
  const std::vector<int>& pred_pos() const { return pred_pos_; }
  /// Pass-1 forest; valid until the interlude releases it.
  const SparseGraph& forest_z() const;

  std::vector<int> take_order_inv() { return std::move(order_inv_); }
  std::vector<int> take_pred_pos() { return std::move(pred_pos_); }

  long dsu_ops() const;
  /// Pass-2 edges that matched the exact edge already held in F.
  long duplicate_hits() const { return duplicate_hits_; }

  /// Modeled live footprint in words for the current phase.
  long words() const;

 private:
  void require_phase(SfsPhase expected, const char* op) const;

  int n_ = 0;
  SfsPhase phase_ = SfsPhase::pass1;
  std::unique_ptr<DisjointSets> dsu_;   // pass 1 only
  std::unique_ptr<SparseGraph> z_;      // pass 1 only
  std::unique_ptr<SparseGraph> f_;      // pass 2 only
  std::vector<int> order_;
  std::vector<int> order_inv_;
  std::vector<int> pred_pos_;
  long dsu_ops_final_ = 0;
  long duplicate_hits_ = 0;
};

}  // namespace streamcert
