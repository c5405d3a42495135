#include "streamcert/flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace streamcert {

namespace {

constexpr int kUncapped = std::numeric_limits<int>::max() / 4;

struct Arc {
  int to;
  int cap;
  int rev;  // index of the reverse arc in net[to]
};

using Net = std::vector<std::vector<Arc>>;

int node_in(int v) { return 2 * v; }
int node_out(int v) { return 2 * v + 1; }

void add_arc(Net& net, int from, int to, int cap) {
  net[from].push_back({to, cap, static_cast<int>(net[to].size())});
  net[to].push_back({from, 0, static_cast<int>(net[from].size()) - 1});
}

// Split network: vertex w becomes w_in -> w_out with capacity 1 (uncapped
// for flow endpoints); each graph edge {a,b} becomes a_out -> b_in and
// b_out -> a_in. Edge arcs are uncapped except a direct endpoint-to-endpoint
// edge, which carries capacity 1 so it counts as exactly one path. Arcs are
// inserted in ascending vertex order, which fixes the BFS scan order.
Net build_network(const SparseGraph& g, int x, int y, int extra_nodes) {
  const int n = g.vertex_count();
  Net net(static_cast<std::size_t>(2 * n + extra_nodes));
  for (int w = 0; w < n; ++w) {
    int cap = (w == x || w == y) ? kUncapped : 1;
    add_arc(net, node_in(w), node_out(w), cap);
  }
  for (int a = 0; a < n; ++a) {
    for (int b : g.neighbors(a)) {
      if (a >= b) continue;
      bool direct = (a == std::min(x, y) && b == std::max(x, y));
      int cap = direct ? 1 : kUncapped;
      add_arc(net, node_out(a), node_in(b), cap);
      add_arc(net, node_out(b), node_in(a), cap);
    }
  }
  return net;
}

// One BFS augmentation; returns the amount pushed (0 if sink unreachable).
int augment(Net& net, int source, int sink, std::uint64_t* work) {
  std::vector<std::pair<int, int>> parent(net.size(), {-1, -1});
  std::vector<int> queue;
  queue.reserve(net.size());
  queue.push_back(source);
  parent[source] = {source, -1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (v == sink) break;
    for (std::size_t i = 0; i < net[v].size(); ++i) {
      if (work) ++*work;
      const Arc& a = net[v][i];
      if (a.cap > 0 && parent[a.to].first == -1) {
        parent[a.to] = {v, static_cast<int>(i)};
        queue.push_back(a.to);
      }
    }
  }
  if (parent[sink].first == -1) return 0;
  int bottleneck = kUncapped;
  for (int v = sink; v != source;) {
    auto [prev, idx] = parent[v];
    bottleneck = std::min(bottleneck, net[prev][idx].cap);
    v = prev;
  }
  for (int v = sink; v != source;) {
    auto [prev, idx] = parent[v];
    Arc& a = net[prev][idx];
    a.cap -= bottleneck;
    net[a.to][a.rev].cap += bottleneck;
    v = prev;
  }
  return bottleneck;
}

int max_flow(Net& net, int source, int sink, int cap, std::uint64_t* work) {
  int flow = 0;
  while (flow < cap) {
    int pushed = augment(net, source, sink, work);
    if (pushed == 0) break;
    flow += std::min(pushed, cap - flow);
  }
  return flow;
}

void check_pair(const SparseGraph& g, int x, int y, int cap) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count()) {
    throw std::out_of_range("vertex id out of range");
  }
  if (x == y) {
    throw std::invalid_argument("local connectivity needs distinct vertices");
  }
  if (cap < 1) {
    throw std::invalid_argument("cap must be at least 1");
  }
}

}  // namespace

int local_connectivity(const SparseGraph& g, int x, int y, int cap,
                       std::uint64_t* work) {
  check_pair(g, x, y, cap);
  Net net = build_network(g, x, y, 0);
  return max_flow(net, node_out(x), node_in(y), cap, work);
}

std::optional<SeparatorSet> min_vertex_cut(const SparseGraph& g, int x, int y,
                                           int cap) {
  check_pair(g, x, y, cap);
  if (g.has_edge(x, y)) {
    throw std::invalid_argument(
        "min_vertex_cut requires a nonadjacent pair: no vertex set separates "
        "the endpoints of an edge");
  }
  Net net = build_network(g, x, y, 0);
  int flow = max_flow(net, node_out(x), node_in(y), cap, nullptr);
  if (flow >= cap) return std::nullopt;

  // Residual reachability from the source; a vertex is in the cut iff its
  // internal arc crosses the boundary.
  std::vector<char> reach(net.size(), 0);
  std::vector<int> queue{node_out(x)};
  reach[node_out(x)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const Arc& a : net[v]) {
      if (a.cap > 0 && !reach[a.to]) {
        reach[a.to] = 1;
        queue.push_back(a.to);
      }
    }
  }
  SeparatorSet cut;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == x || w == y) continue;
    if (reach[node_in(w)] && !reach[node_out(w)]) {
      cut.vertices.push_back(w);
    }
  }
  if (cut.size() != flow) {
    throw std::logic_error("residual cut size does not match flow value");
  }
  return cut;
}

int set_connectivity(const SparseGraph& g, const std::vector<int>& sources,
                     int target, int cap, std::uint64_t* work) {
  if (target < 0 || target >= g.vertex_count()) {
    throw std::out_of_range("vertex id out of range");
  }
  if (cap < 1) {
    throw std::invalid_argument("cap must be at least 1");
  }
  if (sources.empty()) {
    throw std::invalid_argument("source set must be nonempty");
  }
  for (int w : sources) {
    if (w < 0 || w >= g.vertex_count()) {
      throw std::out_of_range("vertex id out of range");
    }
    if (w == target) {
      throw std::invalid_argument("target must not be a source");
    }
  }
  // Super source feeds each source's in-node through a unit arc, so every
  // source vertex is used by at most one path.
  Net net = build_network(g, target, target, 1);
  const int super = 2 * g.vertex_count();
  for (int w : sources) {
    add_arc(net, super, node_in(w), 1);
  }
  return max_flow(net, super, node_in(target), cap, work);
}

}  // namespace streamcert
