#pragma once

#include <algorithm>
#include <ostream>
#include <utility>

namespace streamcert {

/// An undirected edge between two 0-based vertex ids. (u,v) and (v,u)
/// denote the same edge; comparisons use the canonical (min,max) form.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a), v(b) {}

  bool is_loop() const { return u == v; }

  std::pair<int, int> canonical() const {
    return {std::min(u, v), std::max(u, v)};
  }

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.canonical() == b.canonical();
  }
  friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.canonical() < b.canonical();
  }

  friend std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << "(" << e.u << "," << e.v << ")";
  }
};

}  // namespace streamcert
