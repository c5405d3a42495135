#include "streamcert/sparse_graph.hpp"

#include <stdexcept>
#include <string>

namespace streamcert {

SparseGraph::SparseGraph(int n) {
  if (n < 0) {
    throw std::invalid_argument("vertex count must be nonnegative");
  }
  adj_.resize(static_cast<std::size_t>(n));
}

void SparseGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  }
}

bool SparseGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (!adj_[u].insert(v).second) return false;
  adj_[v].insert(u);
  ++edge_count_;
  return true;
}

bool SparseGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (adj_[u].erase(v) == 0) return false;
  adj_[v].erase(u);
  --edge_count_;
  return true;
}

bool SparseGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].count(v) > 0;
}

const std::set<int>& SparseGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int SparseGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int SparseGraph::min_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    int d = static_cast<int>(adj_[v].size());
    if (v == 0 || d < best) best = d;
  }
  return best;
}

std::vector<Edge> SparseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ComponentLabeling connected_components(const SparseGraph& g) {
  const int n = g.vertex_count();
  ComponentLabeling result;
  result.label.assign(n, -1);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (result.label[start] != -1) continue;
    int id = result.count++;
    result.label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (result.label[w] == -1) {
          result.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return result;
}

SparseGraph load_graph(EdgeStream& stream) {
  SparseGraph g(stream.vertex_count());
  while (auto e = stream.next_edge()) {
    if (e->is_loop()) continue;
    g.add_edge(e->u, e->v);
  }
  return g;
}

}  // namespace streamcert
