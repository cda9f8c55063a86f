#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dnastream {

// Dense node id, assigned consecutively in interning order starting at 0.
using NodeIndex = std::uint32_t;

// What add_edge does when a node already has a different stored successor.
enum class ConflictPolicy {
  KeepFirst,      // keep the stored successor, report the conflict
  OverwriteLast,  // replace the stored successor
};

/**
 * The indexed De Bruijn functional graph.
 *
 * Each distinct (k-1)-mer is interned once and addressed by a dense index.
 * Per node the graph keeps at most one outgoing edge (a plain successor
 * table) and a "possible initial" flag that is cleared as soon as the node
 * is targeted by any edge. Interning, resolving, edge insertion and
 * successor lookup are all amortized constant time; listing initials and a
 * full traversal are linear in the node count.
 */
class DeBruijnGraph {
 public:
  explicit DeBruijnGraph(ConflictPolicy policy = ConflictPolicy::KeepFirst);

  // Returns the existing index of `mer`, or assigns the next free one.
  // A fresh node has no successor and its initial flag set.
  NodeIndex intern(std::string_view mer);

  // The (k-1)-mer stored under `idx`. Throws std::out_of_range on a bad index.
  const std::string& resolve(NodeIndex idx) const;

  // Records the edge left -> right. The target's initial flag is cleared
  // unconditionally, even when the edge itself is not stored. Returns true
  // when the stored successor of `left` equals `right` afterwards.
  bool add_edge(NodeIndex left, NodeIndex right);

  // The stored successor of `idx`, if any.
  std::optional<NodeIndex> successor(NodeIndex idx) const;

  bool is_initial(NodeIndex idx) const;

  std::size_t node_count() const noexcept { return mers_.size(); }

  ConflictPolicy policy() const noexcept { return policy_; }

  // All indices whose initial flag is still set, in ascending order.
  std::vector<NodeIndex> initials() const;

  // Follows successors from `start` until a node without successor is
  // reached or the next node already lies on the path (cycle guard). The
  // returned path is duplicate-free and never empty.
  std::vector<NodeIndex> walk_from(NodeIndex start) const;

  // One line per node: index, mer, successor index or "-", initial flag (T/F).
  void dump(std::ostream& out) const;

 private:
  static constexpr NodeIndex kNoSuccessor = std::numeric_limits<NodeIndex>::max();

  void check_index(NodeIndex idx) const;

  // The deque owns the single stored copy of each mer; the map keys view
  // into it. Deque elements never move, so the views stay valid.
  std::deque<std::string> mers_;
  std::unordered_map<std::string_view, NodeIndex> index_;
  std::vector<NodeIndex> successor_;
  std::vector<std::uint8_t> initial_;
  ConflictPolicy policy_;

  // Per-walk visit marks (epoch scheme), so a walk costs O(path length).
  // Scratch state only; walks are not reentrant across threads, matching
  // the single-writer usage of the graph.
  mutable std::vector<std::uint32_t> walk_mark_;
  mutable std::uint32_t walk_epoch_ = 0;
};

}  // namespace dnastream
