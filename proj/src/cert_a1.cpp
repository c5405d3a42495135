#include "streamcert/cert_a1.hpp"

#include <chrono>
#include <stdexcept>

#include "streamcert/flow.hpp"

namespace streamcert {

A1State::A1State(int n, int k, MemoryBudget* budget)
    : k_(k), cert_(n), budget_(budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (budget_) budget_->record(cert_.storage_words());
}

bool A1State::feed(Edge e) {
  ++edges_seen_;
  if (e.is_loop()) {
    ++self_loops_;
    return false;
  }
  if (cert_.has_edge(e.u, e.v)) {
    ++duplicates_;
    return false;
  }
  // The test runs on the certificate only; it is the sole stored graph.
  int c = local_connectivity(cert_, e.u, e.v, k_, &flow_work_);
  if (c <= k_ - 1) {
    cert_.add_edge(e.u, e.v);
    if (budget_) budget_->record(cert_.storage_words());
    return true;
  }
  return false;
}

SparseGraph a1_run(EdgeStream& stream, int k, RunStats* stats) {
  auto started = std::chrono::steady_clock::now();
  if (stream.pass_index() != 0 || stream.edges_read_this_pass() != 0) {
    throw std::invalid_argument("a1_run requires a fresh stream");
  }
  const int n = stream.vertex_count();
  MemoryBudget budget(4L * k * n + 8L * n);
  A1State state(n, k, &budget);
  while (auto e = stream.next_edge()) {
    state.feed(*e);
  }
  long m_stream = stream.edges_read_this_pass();
  stream.rewind();
  if (stats) {
    stats->algorithm = "a1";
    stats->k = k;
    stats->n = n;
    stats->m_stream = m_stream;
    stats->passes = stream.pass_index();
    stats->cert_edges = state.edges_kept();
    stats->per_forest_edges.clear();
    stats->self_loops_skipped = state.self_loops_skipped();
    stats->duplicates_seen = state.duplicates_seen();
    stats->peak_words = budget.peak_words();
    stats->wall_time_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
  }
  return state.certificate();
}

}  // namespace streamcert
