#include "streamcert/sfs.hpp"

#include <stdexcept>

namespace streamcert {

SfsState::SfsState(int n)
    : n_(n),
      dsu_(std::make_unique<DisjointSets>(n)),
      z_(std::make_unique<SparseGraph>(n)) {}

void SfsState::require_phase(SfsPhase expected, const char* op) const {
  if (phase_ != expected) {
    throw std::logic_error(std::string(op) + " called in the wrong phase");
  }
}

bool SfsState::pass1_feed(Edge e) {
  require_phase(SfsPhase::pass1, "pass1_feed");
  if (e.is_loop()) {
    throw std::invalid_argument("self-loop fed to scan-first search");
  }
  if (!dsu_->unite(e.u, e.v)) return false;
  z_->add_edge(e.u, e.v);
  return true;
}

void SfsState::interlude() {
  require_phase(SfsPhase::pass1, "interlude");
  order_.clear();
  order_.reserve(n_);
  order_inv_.assign(n_, -1);
  std::vector<int> stack;
  for (int root = 0; root < n_; ++root) {
    if (order_inv_[root] != -1) continue;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (order_inv_[v] != -1) continue;
      order_inv_[v] = static_cast<int>(order_.size());
      order_.push_back(v);
      // Push neighbors in descending id so the smallest is visited first.
      const auto& nbrs = z_->neighbors(v);
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
        if (order_inv_[*it] == -1) stack.push_back(*it);
      }
    }
  }
  pred_pos_.assign(n_, -1);
  dsu_ops_final_ = dsu_->operation_count();
  dsu_.reset();
  z_.reset();
  f_ = std::make_unique<SparseGraph>(n_);
  phase_ = SfsPhase::interlude_done;
}

HandOff SfsState::pass2_feed(Edge e) {
  if (phase_ == SfsPhase::interlude_done) {
    phase_ = SfsPhase::pass2;
  } else if (phase_ != SfsPhase::pass2) {
    throw std::logic_error("pass2_feed called in the wrong phase");
  }
  if (e.is_loop()) {
    throw std::invalid_argument("self-loop fed to scan-first search");
  }
  int pu = order_inv_[e.u];
  int pv = order_inv_[e.v];
  int earlier = pu < pv ? e.u : e.v;
  int later = pu < pv ? e.v : e.u;
  int earlier_pos = std::min(pu, pv);

  int held = pred_pos_[later];
  if (held == -1) {
    f_->add_edge(earlier, later);
    pred_pos_[later] = earlier_pos;
    return HandOff::none();
  }
  if (earlier_pos < held) {
    int displaced = order_[held];
    f_->remove_edge(displaced, later);
    f_->add_edge(earlier, later);
    pred_pos_[later] = earlier_pos;
    return HandOff::evicted(Edge(displaced, later));
  }
  if (earlier_pos == held) ++duplicate_hits_;
  return HandOff::pass_through(Edge(earlier, later));
}

SparseGraph SfsState::finish() {
  if (phase_ != SfsPhase::pass2 && phase_ != SfsPhase::interlude_done) {
    throw std::logic_error("finish called in the wrong phase");
  }
  phase_ = SfsPhase::finished;
  SparseGraph out = std::move(*f_);
  f_.reset();
  return out;
}

const SparseGraph& SfsState::forest_z() const {
  if (!z_) {
    throw std::logic_error("pass-1 forest already released");
  }
  return *z_;
}

long SfsState::dsu_ops() const {
  return dsu_ ? dsu_->operation_count() : dsu_ops_final_;
}

long SfsState::words() const {
  switch (phase_) {
    case SfsPhase::pass1:
      return dsu_->storage_words() + z_->storage_words();
    case SfsPhase::interlude_done:
    case SfsPhase::pass2:
      return 3L * n_ + f_->storage_words();
    case SfsPhase::finished:
      return static_cast<long>(order_.size() + order_inv_.size() +
                               pred_pos_.size());
  }
  return 0;
}

}  // namespace streamcert
