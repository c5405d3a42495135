#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamcert {

/// Union-find with path compression and union by rank. Equal-rank ties make
/// the smaller vertex id the new root, so merge results are deterministic.
class DisjointSets {
 public:
  explicit DisjointSets(int n)
      : parent_(static_cast<std::size_t>(n)),
        rank_(static_cast<std::size_t>(n), 0),
        set_count_(n) {
    if (n < 0) throw std::invalid_argument("set count must be nonnegative");
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    check(x);
    ++op_count_;
    int root = x;
    while (parent_[root] != root) {
      root = parent_[root];
      ++hop_count_;
    }
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Merges the sets of x and y; returns true iff they were distinct.
  bool unite(int x, int y) {
    ++op_count_;
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    if (rank_[rx] < rank_[ry]) {
      parent_[rx] = ry;
    } else if (rank_[ry] < rank_[rx]) {
      parent_[ry] = rx;
    } else {
      if (ry < rx) std::swap(rx, ry);
      parent_[ry] = rx;
      ++rank_[rx];
    }
    --set_count_;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }
  int set_count() const { return set_count_; }

  /// find/unite invocations (unite counts its internal finds too).
  long operation_count() const { return op_count_; }
  /// Parent-pointer hops taken inside find; near-constant per operation.
  long hop_count() const { return hop_count_; }

  long storage_words() const { return 2L * size(); }

 private:
  void check(int x) const {
    if (x < 0 || x >= size()) {
      throw std::out_of_range("element out of range: " + std::to_string(x));
    }
  }

  std::vector<int> parent_;
  std::vector<int> rank_;
  int set_count_ = 0;
  long op_count_ = 0;
  long hop_count_ = 0;
};

}  // namespace streamcert
