#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "streamcert/separator_set.hpp"
#include "streamcert/sparse_graph.hpp"

namespace streamcert {

// Brute-force reference implementations used as correctness anchors by the
// tests. Deliberately simple and slow; none of them shares algorithmic code
// with the modules they check.

/// Exhaustive: true iff g has >= k+1 vertices and removing any k-1 of them
/// leaves the rest connected. Intended for n up to ~25.
bool oracle_k_connected(const SparseGraph& g, int k);

/// Exact kappa(u,v) by uncapped augmentation on a capacity matrix.
int oracle_local_connectivity(const SparseGraph& g, int u, int v);

/// Every subset of size 1..k-1 whose removal increases the component count,
/// lexicographic.
std::vector<SeparatorSet> oracle_all_separators(const SparseGraph& g, int k);

/// True iff x and y end up in different components once `cut` is removed.
bool oracle_separates(const SparseGraph& g, const std::vector<int>& cut,
                      int x, int y);

/// Direct (non-streaming) scan-first search: scans vertices in the given
/// order, marking unmarked neighbors; returns the forest of marking edges.
SparseGraph oracle_sfs_forest(const SparseGraph& g,
                              const std::vector<int>& order);

// ---------------------------------------------------------------------------
// Seeded graph generation.

enum class GraphModel { gnp, cycle, complete, circulant, two_blocks };

struct GenParams {
  GraphModel model = GraphModel::gnp;
  int n = 0;                 // gnp, cycle, complete, circulant
  double p = 0.0;            // gnp edge probability
  std::vector<int> offsets;  // circulant
  int block_a = 0;           // two_blocks: first clique size
  int block_b = 0;           // two_blocks: second clique size
  int separator = 0;         // two_blocks: planted separator size
  std::uint32_t seed = 0;    // gnp edges and stream shuffle
};

/// Deterministic graph for the given parameters (same seed, same graph).
SparseGraph generate_graph(const GenParams& params);

/// Writes g as a stream file with edges in a seeded shuffled order and
/// random orientation per edge. Same seed, byte-identical file.
void write_shuffled_stream(const SparseGraph& g, const std::string& path,
                           std::uint32_t seed);

/// generate_graph + write_shuffled_stream with the same seed.
SparseGraph generate(const GenParams& params, const std::string& stream_path);

std::string params_label(const GenParams& params);

/// The committed test corpus: 206 seeded graphs with n <= 25, mixing
/// gnp, cycles, complete graphs, circulants and planted-separator blocks.
std::vector<GenParams> corpus_params();

}  // namespace streamcert
