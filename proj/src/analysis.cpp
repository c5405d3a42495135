#include "streamcert/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "streamcert/flow.hpp"

namespace streamcert {

namespace {

// Component count of g with the vertices in `removed` deleted.
int components_excluding(const SparseGraph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || removed[start]) continue;
    ++count;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[w] && !removed[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// Visits every subset of {0..n-1} of the given size in lexicographic order.
template <typename Visit>
void for_each_subset(int n, int size, Visit&& visit) {
  if (size > n) return;
  std::vector<int> subset(size);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    visit(subset);
    int i = size - 1;
    while (i >= 0 && subset[i] == n - size + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

bool is_k_connected(const SparseGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = g.vertex_count();
  if (n < k + 1) return false;
  if (g.min_degree() < k) return false;
  if (connected_components(g).count != 1) return false;
  if (k == 1) return true;

  // Pinned set W: the k smallest vertex ids.
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (local_connectivity(g, w[i], w[j], k) < k) return false;
    }
  }
  for (int v = k; v < n; ++v) {
    if (set_connectivity(g, w, v, k) < k) return false;
  }
  return true;
}

std::optional<SeparatorSet> extract_separator(const SparseGraph& g, int u,
                                              int v, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return min_vertex_cut(g, u, v, k);
}

std::vector<SeparatorSet> all_separators(const SparseGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = g.vertex_count();
  const int base = connected_components(g).count;
  std::vector<SeparatorSet> found;
  std::vector<char> removed(n, 0);
  for (int size = 1; size < k; ++size) {
    for_each_subset(n, size, [&](const std::vector<int>& subset) {
      for (int v : subset) removed[v] = 1;
      if (components_excluding(g, removed) > base) {
        found.push_back(SeparatorSet{subset});
      }
      for (int v : subset) removed[v] = 0;
    });
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<int> cut_vertices(const SparseGraph& g) {
  std::vector<int> out;
  for (const SeparatorSet& s : all_separators(g, 2)) {
    out.push_back(s.vertices.front());
  }
  return out;
}

}  // namespace streamcert
