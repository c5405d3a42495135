#include "streamcert/cert_a2.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace streamcert {

std::vector<int> ForestRecord::order() const {
  std::vector<int> o(order_inv.size());
  for (std::size_t v = 0; v < order_inv.size(); ++v) {
    o[static_cast<std::size_t>(order_inv[v])] = static_cast<int>(v);
  }
  return o;
}

A2State::A2State(int n, int k, MemoryBudget* budget)
    : n_(n), k_(k), budget_(budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  instances_.resize(static_cast<std::size_t>(k));
  raw_fed_.assign(static_cast<std::size_t>(k) + 2, 0);
  skipped_.assign(static_cast<std::size_t>(k) + 2, 0);
  handed_.assign(static_cast<std::size_t>(k) + 2, 0);
}

void A2State::begin_pass(int p) {
  if (p != current_pass_ + 1 || p > k_ + 1) {
    throw std::logic_error("begin_pass out of order: pass " +
                           std::to_string(p));
  }
  current_pass_ = p;
  if (p <= k_) {
    instances_[p - 1] = std::make_unique<SfsState>(n_);
  }
  if (p >= 2) {
    instances_[p - 2]->interlude();
  }
  if (p >= 3) {
    finalize_instance(p - 3);
  }
  record_budget();
}

void A2State::feed(Edge e) {
  if (current_pass_ < 1) {
    throw std::logic_error("feed before begin_pass");
  }
  if (e.is_loop()) {
    if (current_pass_ == 1) ++self_loops_;
    return;
  }
  const int p = current_pass_;
  if (p == 1) {
    ++raw_fed_[p];
    instances_[0]->pass1_feed(e);
    record_budget();
    return;
  }
  ++raw_fed_[p];
  for (const ForestRecord& rec : records_) {
    ++membership_checks_;
    if (rec.contains(e)) {
      ++skipped_[p];
      ++skipped_total_;
      return;
    }
  }
  SfsState& second = *instances_[p - 2];
  HandOff h = second.pass2_feed(e);
  if (h.kind != HandOff::Kind::none) {
    ++handed_[p];
    ++handed_total_;
    if (p <= k_) {
      instances_[p - 1]->pass1_feed(h.edge);
    }
  }
  record_budget();
}

void A2State::finalize_instance(int idx) {
  SfsState& inst = *instances_[idx];
  SparseGraph forest = inst.finish();
  const int pass_built = idx + 2;  // forest idx+1 is built during pass idx+2

  // Hand-over conservation: every nonskipped edge of the pass either stayed
  // in this forest or was handed onward.
  long expected = raw_fed_[pass_built] - skipped_[pass_built] -
                  forest.edge_count();
  if (handed_[pass_built] != expected) {
    throw std::logic_error(
        "hand-over conservation violated in pass " +
        std::to_string(pass_built) + ": handed " +
        std::to_string(handed_[pass_built]) + ", expected " +
        std::to_string(expected));
  }

  ForestRecord rec;
  rec.edges = forest.edges();
  rec.order_inv = inst.take_order_inv();
  rec.pred_pos = inst.take_pred_pos();
  forest_sizes_.push_back(forest.edge_count());
  duplicates_ += inst.duplicate_hits();
  dsu_ops_done_ += inst.dsu_ops();
  records_.push_back(std::move(rec));
  instances_[idx].reset();
}

SparseGraph A2State::finish(bool keep_forests) {
  if (current_pass_ != k_ + 1) {
    throw std::logic_error("finish requires all k+1 passes to have run");
  }
  if (finished_) {
    throw std::logic_error("finish called twice");
  }
  finished_ = true;
  finalize_instance(k_ - 1);
  record_budget();

  SparseGraph cert(n_);
  for (std::size_t j = 0; j < records_.size(); ++j) {
    for (const Edge& e : records_[j].edges) cert.add_edge(e.u, e.v);
    // Consuming records front to back lets the union replace them in memory.
    if (!keep_forests) records_[j] = ForestRecord();
    if (budget_) budget_->record(live_words() + cert.storage_words());
  }
  if (!keep_forests) records_.clear();
  return cert;
}

long A2State::protocol_ops() const {
  long ops = membership_checks_ + dsu_ops_done_;
  for (const auto& inst : instances_) {
    if (inst) ops += inst->dsu_ops();
  }
  return ops;
}

long A2State::live_words() const {
  long words = 0;
  for (const ForestRecord& rec : records_) words += rec.words();
  for (const auto& inst : instances_) {
    if (inst) words += inst->words();
  }
  return words;
}

void A2State::record_budget() {
  if (budget_) budget_->record(live_words());
}

SparseGraph a2_run(EdgeStream& stream, int k, RunStats* stats) {
  auto started = std::chrono::steady_clock::now();
  if (stream.pass_index() != 0 || stream.edges_read_this_pass() != 0) {
    throw std::invalid_argument("a2_run requires a fresh stream");
  }
  const int n = stream.vertex_count();
  MemoryBudget budget(4L * k * n + 8L * n);
  A2State state(n, k, &budget);
  long m_stream = 0;
  for (int p = 1; p <= k + 1; ++p) {
    state.begin_pass(p);
    while (auto e = stream.next_edge()) {
      state.feed(*e);
    }
    if (p == 1) m_stream = stream.edges_read_this_pass();
    stream.rewind();
  }
  SparseGraph cert = state.finish();
  if (stats) {
    stats->algorithm = "a2";
    stats->k = k;
    stats->n = n;
    stats->m_stream = m_stream;
    stats->passes = stream.pass_index();
    stats->cert_edges = cert.edge_count();
    stats->per_forest_edges = state.per_forest_edges();
    stats->membership_skips = state.skipped_by_membership();
    stats->hand_overs = state.handed_over();
    stats->self_loops_skipped = state.self_loops_skipped();
    stats->duplicates_seen = state.duplicates_seen();
    stats->peak_words = budget.peak_words();
    stats->wall_time_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
  }
  return cert;
}

}  // namespace streamcert
