#ifndef TTC_INTERVAL_TREE_HPP
#define TTC_INTERVAL_TREE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ttc/types.hpp"

namespace ttc {

// One reachability record for a fixed (source, target) pair: some journey
// departs at interval.start, arrives at interval.end, and its first hop goes to
// `successor`.
struct TreeEntry {
  TimeInterval interval;
  VertexId successor = 0;

  friend bool operator==(const TreeEntry&, const TreeEntry&) = default;
};

/// Height-balanced search tree over pairwise-incomparable intervals.
///
/// Entries are keyed by interval start. Because no stored interval contains
/// another, ordering by start and ordering by end coincide, so both
/// find_next (by start) and find_previous (by end) are single root-to-leaf
/// descents.
///
/// The tree is an AVL tree built on split/join. insert_minimal removes the
/// contiguous run of intervals made redundant by a new interval with one
/// split/excise/join sequence, costing O(d + log m) for d removed entries;
/// since every entry is removed at most once, inserts are O(log m) amortized.
/// Heights always satisfy the AVL bound, so depth never exceeds
/// ~1.44 log2(m + 2) for m resident entries.
///
/// Reads are const and may run concurrently; writes need exclusive access.
class IntervalTree {
 public:
  IntervalTree() noexcept;
  ~IntervalTree();
  IntervalTree(IntervalTree&&) noexcept;
  IntervalTree& operator=(IntervalTree&&) noexcept;
  IntervalTree(const IntervalTree& other);
  IntervalTree& operator=(const IntervalTree& other);

  // Entry with the smallest start >= t (equivalently the smallest end among
  // those entries).
  [[nodiscard]] std::optional<TreeEntry> find_next(Timestamp t) const;

  // Entry with the largest end <= t.
  [[nodiscard]] std::optional<TreeEntry> find_previous(Timestamp t) const;

  // Inserts `interval` unless an existing interval is included in it (in which
  // case nothing changes and false is returned). Otherwise every stored
  // interval containing `interval` is removed first. Throws
  // std::invalid_argument when interval.start > interval.end.
  bool insert_minimal(TimeInterval interval, VertexId successor);

  // Removes every entry whose start lies in [first_start, last_start] and
  // returns how many were removed.
  std::size_t range_delete(Timestamp first_start, Timestamp last_start);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

  // Number of levels (0 for an empty tree).
  [[nodiscard]] int height() const noexcept;

  // In-order (ascending start, hence ascending end).
  [[nodiscard]] std::vector<TreeEntry> entries() const;

  template <typename Visitor>
  void for_each(Visitor&& visit) const {
    std::vector<const Node*> stack;
    const Node* node = root_.get();
    while (node != nullptr || !stack.empty()) {
      while (node != nullptr) {
        stack.push_back(node);
        node = node->left.get();
      }
      node = stack.back();
      stack.pop_back();
      visit(node->entry);
      node = node->right.get();
    }
  }

  // Full structural check: strictly increasing starts and ends, AVL balance,
  // cached heights, and size. Intended for tests and debug assertions.
  [[nodiscard]] bool check_invariants() const;

  void clear() noexcept;

  friend bool operator==(const IntervalTree& a, const IntervalTree& b);

  struct Node {
    TreeEntry entry;
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
    int height = 1;
  };

 private:
  std::unique_ptr<Node> root_;
  std::size_t size_ = 0;
};

}  // namespace ttc

#endif  // TTC_INTERVAL_TREE_HPP
