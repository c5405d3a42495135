#pragma once

#include <optional>
#include <vector>

#include "streamcert/separator_set.hpp"
#include "streamcert/sparse_graph.hpp"

namespace streamcert {

/// True iff g has at least k+1 vertices and the removal of any k-1 vertices
/// leaves it connected. Decided with local-connectivity tests: all pairs
/// within the k smallest vertex ids, then every remaining vertex against
/// that set through an auxiliary source. Space stays linear in g.
bool is_k_connected(const SparseGraph& g, int k);

/// For nonadjacent u != v: the minimum vertex cut between them if it has
/// fewer than k vertices, otherwise nullopt.
std::optional<SeparatorSet> extract_separator(const SparseGraph& g, int u,
                                              int v, int k);

/// Every vertex set S with 1 <= |S| < k whose removal increases g's
/// component count, in lexicographic order. Exhaustive over subsets, so
/// intended for constant k on certificate-sized graphs.
std::vector<SeparatorSet> all_separators(const SparseGraph& g, int k);

/// Vertices whose removal increases the component count, ascending.
std::vector<int> cut_vertices(const SparseGraph& g);

}  // namespace streamcert
