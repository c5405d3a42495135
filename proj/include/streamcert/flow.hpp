#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "streamcert/separator_set.hpp"
#include "streamcert/sparse_graph.hpp"

namespace streamcert {

/// Local vertex connectivity min(kappa(x,y), cap): the number of
/// internally vertex-disjoint x-y paths, a direct edge counting as one.
/// Runs at most cap breadth-first augmentations over the split network
/// (each vertex divided into an in/out node pair joined by a unit arc).
/// If `work` is given, it accumulates the number of residual arcs scanned.
int local_connectivity(const SparseGraph& g, int x, int y, int cap,
                       std::uint64_t* work = nullptr);

/// For nonadjacent x != y: if kappa(x,y) = l < cap, returns the l vertices
/// whose in/out arc is saturated across the residual reachability boundary
/// after max flow; removing them disconnects x from y. Returns nullopt when
/// kappa >= cap. Adjacent pairs are rejected: no vertex set separates the
/// endpoints of an edge.
std::optional<SeparatorSet> min_vertex_cut(const SparseGraph& g, int x, int y,
                                           int cap);

/// min(cap, maximum number of paths from `target` to distinct vertices of
/// `sources`, pairwise disjoint except at target). Implemented with an
/// auxiliary node joined to every source by a unit arc.
int set_connectivity(const SparseGraph& g, const std::vector<int>& sources,
                     int target, int cap, std::uint64_t* work = nullptr);

}  // namespace streamcert
