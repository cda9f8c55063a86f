#include "dnastream/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace dnastream {

DeBruijnGraph::DeBruijnGraph(ConflictPolicy policy) : policy_(policy) {}

void DeBruijnGraph::check_index(NodeIndex idx) const {
  if (idx >= mers_.size()) {
    throw std::out_of_range("DeBruijnGraph: node index " + std::to_string(idx) +
                            " out of range (node count " + std::to_string(mers_.size()) + ")");
  }
}

NodeIndex DeBruijnGraph::intern(std::string_view mer) {
  if (auto it = index_.find(mer); it != index_.end()) {
    return it->second;
  }
  const auto idx = static_cast<NodeIndex>(mers_.size());
  mers_.emplace_back(mer);
  index_.emplace(mers_.back(), idx);
  successor_.push_back(kNoSuccessor);
  initial_.push_back(1);
  return idx;
}

const std::string& DeBruijnGraph::resolve(NodeIndex idx) const {
  check_index(idx);
  return mers_[idx];
}

bool DeBruijnGraph::add_edge(NodeIndex left, NodeIndex right) {
  check_index(left);
  check_index(right);
  initial_[right] = 0;
  NodeIndex& slot = successor_[left];
  if (slot == kNoSuccessor || policy_ == ConflictPolicy::OverwriteLast) {
    slot = right;
    return true;
  }
  return slot == right;
}

std::optional<NodeIndex> DeBruijnGraph::successor(NodeIndex idx) const {
  check_index(idx);
  const NodeIndex next = successor_[idx];
  if (next == kNoSuccessor) {
    return std::nullopt;
  }
  return next;
}

bool DeBruijnGraph::is_initial(NodeIndex idx) const {
  check_index(idx);
  return initial_[idx] != 0;
}

std::vector<NodeIndex> DeBruijnGraph::initials() const {
  std::vector<NodeIndex> out;
  for (NodeIndex idx = 0; idx < mers_.size(); ++idx) {
    if (initial_[idx] != 0) {
      out.push_back(idx);
    }
  }
  return out;
}

std::vector<NodeIndex> DeBruijnGraph::walk_from(NodeIndex start) const {
  check_index(start);
  if (walk_mark_.size() < mers_.size()) {
    walk_mark_.resize(mers_.size(), 0);
  }
  if (++walk_epoch_ == 0) {  // epoch wrapped: stale marks must not alias
    std::fill(walk_mark_.begin(), walk_mark_.end(), 0);
    walk_epoch_ = 1;
  }
  std::vector<NodeIndex> path;
  NodeIndex current = start;
  for (;;) {
    path.push_back(current);
    walk_mark_[current] = walk_epoch_;
    const NodeIndex next = successor_[current];
    if (next == kNoSuccessor || walk_mark_[next] == walk_epoch_) {
      break;
    }
    current = next;
  }
  return path;
}

void DeBruijnGraph::dump(std::ostream& out) const {
  for (NodeIndex idx = 0; idx < mers_.size(); ++idx) {
    out << idx << '\t' << mers_[idx] << '\t';
    if (successor_[idx] == kNoSuccessor) {
      out << '-';
    } else {
      out << successor_[idx];
    }
    out << '\t' << (initial_[idx] != 0 ? 'T' : 'F') << '\n';
  }
}

}  // namespace dnastream
