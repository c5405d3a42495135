#pragma once

#include <set>
#include <vector>

#include "streamcert/edge.hpp"
#include "streamcert/edge_stream.hpp"

namespace streamcert {

/// Simple undirected graph on a fixed vertex set 0..n-1. Adjacency sets are
/// ordered by vertex id, so iteration order is deterministic. Self-loops and
/// parallel edges are rejected at insertion.
class SparseGraph {
 public:
  explicit SparseGraph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long edge_count() const { return edge_count_; }

  /// Inserts {u,v}; returns true iff the edge is new. Self-loops and
  /// duplicates are no-ops returning false.
  bool add_edge(int u, int v);

  /// Removes {u,v}; returns true iff the edge existed.
  bool remove_edge(int u, int v);

  bool has_edge(int u, int v) const;
  const std::set<int>& neighbors(int v) const;
  int degree(int v) const;
  int min_degree() const;

  /// All edges in canonical (u<v) form, ascending.
  std::vector<Edge> edges() const;

  /// Modeled memory footprint: n adjacency slots plus 4 words per stored
  /// edge (two directed entries of two words each).
  long storage_words() const { return vertex_count() + 4 * edge_count_; }

 private:
  void check_vertex(int v) const;

  std::vector<std::set<int>> adj_;
  long edge_count_ = 0;
};

struct ComponentLabeling {
  std::vector<int> label;  // vertex -> component id
  int count = 0;
};

/// Labels connected components 0..c-1 in order of smallest contained vertex.
ComponentLabeling connected_components(const SparseGraph& g);

/// Reads one full pass of the stream into a graph, skipping self-loops and
/// treating duplicates idempotently. Leaves the stream at end of pass.
SparseGraph load_graph(EdgeStream& stream);

/// Tracks the peak of a modeled word count against a limit. The peak is
/// monotone; callers record their live footprint at every mutation.
class MemoryBudget {
 public:
  explicit MemoryBudget(long word_limit) : word_limit_(word_limit) {}

  void record(long words) {
    if (words > peak_words_) peak_words_ = words;
  }

  long peak_words() const { return peak_words_; }
  long word_limit() const { return word_limit_; }
  bool within_limit() const { return peak_words_ <= word_limit_; }

 private:
  long word_limit_ = 0;
  long peak_words_ = 0;
};

}  // namespace streamcert
