#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "streamcert/disjoint_sets.hpp"

using namespace streamcert;

namespace {

// Label-propagation reference: replays the same union sequence on explicit
// labels, relabeling the larger label to the smaller on every merge.
class NaivePartition {
 public:
  explicit NaivePartition(int n) : label_(n) {
    for (int i = 0; i < n; ++i) label_[i] = i;
  }

  void unite(int x, int y) {
    int a = label_[x];
    int b = label_[y];
    if (a == b) return;
    for (int& l : label_) {
      if (l == b) l = a;
    }
  }

  bool same(int x, int y) const { return label_[x] == label_[y]; }

 private:
  std::vector<int> label_;
};

}  // namespace

TEST_CASE("make yields singletons") {
  DisjointSets d(3);
  CHECK(d.set_count() == 3);
  for (int i = 0; i < 3; ++i) CHECK(d.find(i) == i);

  DisjointSets empty(0);
  CHECK(empty.set_count() == 0);

  DisjointSets one(1);
  CHECK(one.find(0) == 0);
}

TEST_CASE("find and unite basics") {
  DisjointSets d(3);
  CHECK(d.unite(0, 1));
  CHECK(d.set_count() == 2);
  CHECK(d.find(0) == d.find(1));
  CHECK(d.find(2) == 2);
  CHECK_FALSE(d.unite(0, 1));
  CHECK(d.set_count() == 2);
  CHECK(d.find(d.find(1)) == d.find(1));
  CHECK_THROWS_AS(d.find(3), std::out_of_range);
}

TEST_CASE("n-1 unions leave one set") {
  DisjointSets d(8);
  for (int i = 0; i + 1 < 8; ++i) CHECK(d.unite(i, i + 1));
  CHECK(d.set_count() == 1);
}

TEST_CASE("equal-rank ties pick the smaller root") {
  DisjointSets d(4);
  d.unite(2, 3);
  CHECK(d.find(3) == 2);
  d.unite(3, 1);  // rank(2) = 1 beats rank(1) = 0
  CHECK(d.find(1) == 2);
}

TEST_CASE("partition matches label propagation on random sequences") {
  std::mt19937 eng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 20;
    DisjointSets d(n);
    NaivePartition naive(n);
    for (int step = 0; step < 40; ++step) {
      int x = static_cast<int>(eng() % n);
      int y = static_cast<int>(eng() % n);
      d.unite(x, y);
      naive.unite(x, y);
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        CHECK((d.find(x) == d.find(y)) == naive.same(x, y));
      }
    }
  }
}

TEST_CASE("amortized hops stay near-constant on adversarial chains") {
  auto hops_per_op = [](int n) {
    DisjointSets d(n);
    // Binomial-tree merge order maximizes rank growth.
    for (int span = 1; span < n; span *= 2) {
      for (int i = 0; i + span < n; i += 2 * span) {
        d.unite(i, i + span);
      }
    }
    for (int i = 0; i < n; ++i) d.find(i);
    return static_cast<double>(d.hop_count()) /
           static_cast<double>(d.operation_count());
  };
  double small = hops_per_op(1 << 12);
  double large = hops_per_op(1 << 16);
  CHECK(small < 3.0);
  CHECK(large < 3.0);
  // 16x more elements must not show log-like growth per operation.
  CHECK(large < small * 1.5);
}
