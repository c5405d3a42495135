#include "streamcert/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "streamcert/edge_stream.hpp"

namespace streamcert {

namespace {

// Number of components among the vertices not masked out.
int component_count(const SparseGraph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || removed[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
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
  return components;
}

// Recursive enumeration of all size-`left` subsets of {from..n-1}.
bool any_subset_disconnects(const SparseGraph& g, std::vector<char>& removed,
                            int from, int left, int base) {
  if (left == 0) {
    return component_count(g, removed) > base;
  }
  const int n = g.vertex_count();
  for (int v = from; v + left <= n; ++v) {
    removed[v] = 1;
    if (any_subset_disconnects(g, removed, v + 1, left - 1, base)) {
      removed[v] = 0;
      return true;
    }
    removed[v] = 0;
  }
  return false;
}

void collect_separators(const SparseGraph& g, std::vector<char>& removed,
                        std::vector<int>& chosen, int from, int left, int base,
                        std::vector<SeparatorSet>& out) {
  if (left == 0) {
    if (component_count(g, removed) > base) {
      out.push_back(SeparatorSet{chosen});
    }
    return;
  }
  const int n = g.vertex_count();
  for (int v = from; v + left <= n; ++v) {
    removed[v] = 1;
    chosen.push_back(v);
    collect_separators(g, removed, chosen, v + 1, left - 1, base, out);
    chosen.pop_back();
    removed[v] = 0;
  }
}

double next_unit(std::mt19937& eng) {
  return static_cast<double>(eng()) / 4294967296.0;
}

}  // namespace

bool oracle_k_connected(const SparseGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = g.vertex_count();
  if (n < k + 1) return false;
  std::vector<char> removed(n, 0);
  // Connected with 0 removals, and no (k-1)-subset splits it. Treating the
  // baseline as 1 component makes a disconnected graph fail immediately.
  return !any_subset_disconnects(g, removed, 0, 0, 1) &&
         (k == 1 || !any_subset_disconnects(g, removed, 0, k - 1, 1));
}

int oracle_local_connectivity(const SparseGraph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::out_of_range("vertex id out of range");
  }
  if (u == v) throw std::invalid_argument("vertices must be distinct");

  // Node i is the in-side of vertex i, node i+n its out-side.
  const int big = 1 << 28;
  std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
  for (int w = 0; w < n; ++w) {
    cap[w][w + n] = (w == u || w == v) ? big : 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b : g.neighbors(a)) {
      if (a >= b) continue;
      bool direct =
          (a == std::min(u, v) && b == std::max(u, v));
      cap[a + n][b] = direct ? 1 : big;
      cap[b + n][a] = direct ? 1 : big;
    }
  }
  const int source = u + n;
  const int sink = v;
  std::vector<char> visited(2 * n, 0);
  std::function<int(int, int)> push = [&](int x, int limit) -> int {
    if (x == sink) return limit;
    visited[x] = 1;
    for (int y = 0; y < 2 * n; ++y) {
      if (visited[y] || cap[x][y] <= 0) continue;
      int got = push(y, std::min(limit, cap[x][y]));
      if (got > 0) {
        cap[x][y] -= got;
        cap[y][x] += got;
        return got;
      }
    }
    return 0;
  };
  int total = 0;
  while (true) {
    std::fill(visited.begin(), visited.end(), 0);
    int got = push(source, big);
    if (got == 0) break;
    total += got;
  }
  return total;
}

std::vector<SeparatorSet> oracle_all_separators(const SparseGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  const int base = component_count(g, removed);
  std::vector<SeparatorSet> out;
  std::vector<int> chosen;
  for (int size = 1; size < k; ++size) {
    collect_separators(g, removed, chosen, 0, size, base, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_separates(const SparseGraph& g, const std::vector<int>& cut,
                      int x, int y) {
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (int v : cut) removed[v] = 1;
  if (removed[x] || removed[y]) {
    throw std::invalid_argument("cut must not contain the query pair");
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{x};
  seen[x] = 1;
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
  return !seen[y];
}

SparseGraph oracle_sfs_forest(const SparseGraph& g,
                              const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order must list every vertex once");
  }
  std::vector<char> marked(n, 0);
  SparseGraph forest(n);
  for (int pos = 0; pos < n; ++pos) {
    int v = order[pos];
    if (v < 0 || v >= n) {
      throw std::invalid_argument("order must list every vertex once");
    }
    marked[v] = 1;  // a still unmarked vertex starts its component
    for (int w : g.neighbors(v)) {
      if (!marked[w]) {
        marked[w] = 1;
        forest.add_edge(v, w);
      }
    }
  }
  return forest;
}

SparseGraph generate_graph(const GenParams& params) {
  switch (params.model) {
    case GraphModel::gnp: {
      if (params.n < 0 || params.p < 0.0 || params.p > 1.0) {
        throw std::invalid_argument("gnp needs n >= 0 and p in [0,1]");
      }
      std::mt19937 eng(params.seed);
      SparseGraph g(params.n);
      for (int u = 0; u < params.n; ++u) {
        for (int v = u + 1; v < params.n; ++v) {
          if (next_unit(eng) < params.p) g.add_edge(u, v);
        }
      }
      return g;
    }
    case GraphModel::cycle: {
      if (params.n < 3) throw std::invalid_argument("cycle needs n >= 3");
      SparseGraph g(params.n);
      for (int v = 0; v < params.n; ++v) g.add_edge(v, (v + 1) % params.n);
      return g;
    }
    case GraphModel::complete: {
      if (params.n < 1) throw std::invalid_argument("complete needs n >= 1");
      SparseGraph g(params.n);
      for (int u = 0; u < params.n; ++u) {
        for (int v = u + 1; v < params.n; ++v) g.add_edge(u, v);
      }
      return g;
    }
    case GraphModel::circulant: {
      if (params.n < 3 || params.offsets.empty()) {
        throw std::invalid_argument("circulant needs n >= 3 and offsets");
      }
      SparseGraph g(params.n);
      for (int d : params.offsets) {
        if (d < 1 || d >= params.n) {
          throw std::invalid_argument("circulant offset out of range");
        }
        for (int v = 0; v < params.n; ++v) g.add_edge(v, (v + d) % params.n);
      }
      return g;
    }
    case GraphModel::two_blocks: {
      // Clique A, clique B, and a planted separator S adjacent to both
      // sides: A u S and S u B are cliques, with no direct A-B edges.
      if (params.block_a < 1 || params.block_b < 1 || params.separator < 1) {
        throw std::invalid_argument("two_blocks needs positive sizes");
      }
      const int a = params.block_a;
      const int s = params.separator;
      const int n = a + s + params.block_b;
      SparseGraph g(n);
      for (int u = 0; u < a + s; ++u) {
        for (int v = u + 1; v < a + s; ++v) g.add_edge(u, v);
      }
      for (int u = a; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      }
      return g;
    }
  }
  throw std::invalid_argument("unknown graph model");
}

void write_shuffled_stream(const SparseGraph& g, const std::string& path,
                           std::uint32_t seed) {
  std::vector<Edge> edges = g.edges();
  std::mt19937 eng(seed);
  // Hand-rolled Fisher-Yates: the byte-identical-output guarantee must not
  // depend on the standard library's shuffle implementation.
  for (std::size_t i = edges.size(); i > 1; --i) {
    std::size_t j = eng() % i;
    std::swap(edges[i - 1], edges[j]);
  }
  for (Edge& e : edges) {
    if (eng() & 1u) std::swap(e.u, e.v);
  }
  write_edge_file(path, g.vertex_count(), edges);
}

SparseGraph generate(const GenParams& params, const std::string& stream_path) {
  SparseGraph g = generate_graph(params);
  write_shuffled_stream(g, stream_path, params.seed);
  return g;
}

std::string params_label(const GenParams& params) {
  std::ostringstream out;
  switch (params.model) {
    case GraphModel::gnp:
      out << "gnp_n" << params.n << "_p" << params.p << "_s" << params.seed;
      break;
    case GraphModel::cycle:
      out << "cycle_n" << params.n;
      break;
    case GraphModel::complete:
      out << "complete_n" << params.n;
      break;
    case GraphModel::circulant: {
      out << "circulant_n" << params.n << "_d";
      for (int d : params.offsets) out << d;
      break;
    }
    case GraphModel::two_blocks:
      out << "two_blocks_a" << params.block_a << "_b" << params.block_b
          << "_s" << params.separator;
      break;
  }
  return out.str();
}

std::vector<GenParams> corpus_params() {
  std::vector<GenParams> corpus;
  const int sizes[] = {8, 10, 12, 14, 15, 18, 20, 22, 25};
  const double probs[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  const std::uint32_t seeds[] = {101, 202, 303, 404};
  for (int n : sizes) {
    for (double p : probs) {
      for (std::uint32_t seed : seeds) {
        GenParams g;
        g.model = GraphModel::gnp;
        g.n = n;
        g.p = p;
        g.seed = seed;
        corpus.push_back(g);
      }
    }
  }
  for (int n : {8, 12, 16, 20}) {
    GenParams g;
    g.model = GraphModel::cycle;
    g.n = n;
    g.seed = 11;
    corpus.push_back(g);
  }
  for (int n = 5; n <= 12; ++n) {
    GenParams g;
    g.model = GraphModel::complete;
    g.n = n;
    g.seed = 12;
    corpus.push_back(g);
  }
  const std::pair<int, std::vector<int>> circulants[] = {
      {10, {1, 2}}, {12, {1, 3}},    {15, {1, 2, 3}},
      {16, {2, 3}}, {20, {1, 2, 4}}, {24, {1, 2, 3}},
  };
  for (const auto& [n, offsets] : circulants) {
    GenParams g;
    g.model = GraphModel::circulant;
    g.n = n;
    g.offsets = offsets;
    g.seed = 13;
    corpus.push_back(g);
  }
  const std::tuple<int, int, int> blocks[] = {
      {5, 5, 1}, {5, 5, 2}, {5, 5, 3},  {6, 5, 2},
      {6, 6, 3}, {7, 6, 1}, {8, 7, 2},  {10, 8, 3},
  };
  for (const auto& [a, b, s] : blocks) {
    GenParams g;
    g.model = GraphModel::two_blocks;
    g.block_a = a;
    g.block_b = b;
    g.separator = s;
    g.seed = 14;
    corpus.push_back(g);
  }
  return corpus;
}

}  // namespace streamcert
