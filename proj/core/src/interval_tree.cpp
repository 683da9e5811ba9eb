#include "ttc/interval_tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace ttc {

namespace {

using Node = IntervalTree::Node;
using NodePtr = std::unique_ptr<Node>;

int height_of(const NodePtr& node) noexcept { return node ? node->height : 0; }

Timestamp start_of(const Node& node) noexcept { return node.entry.interval.start; }

void update_height(Node& node) noexcept {
  node.height = 1 + std::max(height_of(node.left), height_of(node.right));
}

// Attaches `left` and `right` under `mid`, whose own children must be empty.
NodePtr make_node(NodePtr left, NodePtr mid, NodePtr right) {
  mid->left = std::move(left);
  mid->right = std::move(right);
  update_height(*mid);
  return mid;
}

NodePtr rotate_left(NodePtr x) {
  NodePtr y = std::move(x->right);
  x->right = std::move(y->left);
  update_height(*x);
  y->left = std::move(x);
  update_height(*y);
  return y;
}

NodePtr rotate_right(NodePtr x) {
  NodePtr y = std::move(x->left);
  x->left = std::move(y->right);
  update_height(*x);
  y->right = std::move(x);
  update_height(*y);
  return y;
}

NodePtr join(NodePtr left, NodePtr mid, NodePtr right);

// Precondition: height(left) > height(right) + 1.
NodePtr join_right(NodePtr left, NodePtr mid, NodePtr right) {
  NodePtr outer = std::move(left->left);
  NodePtr inner = std::move(left->right);
  if (height_of(inner) <= height_of(right) + 1) {
    NodePtr merged = make_node(std::move(inner), std::move(mid), std::move(right));
    if (height_of(merged) <= height_of(outer) + 1) {
      return make_node(std::move(outer), std::move(left), std::move(merged));
    }
    merged = rotate_right(std::move(merged));
    return rotate_left(make_node(std::move(outer), std::move(left), std::move(merged)));
  }
  NodePtr merged = join_right(std::move(inner), std::move(mid), std::move(right));
  NodePtr top = make_node(std::move(outer), std::move(left), std::move(merged));
  if (height_of(top->right) <= height_of(top->left) + 1) return top;
  return rotate_left(std::move(top));
}

// Mirror image of join_right. Precondition: height(right) > height(left) + 1.
NodePtr join_left(NodePtr left, NodePtr mid, NodePtr right) {
  NodePtr outer = std::move(right->right);
  NodePtr inner = std::move(right->left);
  if (height_of(inner) <= height_of(left) + 1) {
    NodePtr merged = make_node(std::move(left), std::move(mid), std::move(inner));
    if (height_of(merged) <= height_of(outer) + 1) {
      return make_node(std::move(merged), std::move(right), std::move(outer));
    }
    merged = rotate_left(std::move(merged));
    return rotate_right(make_node(std::move(merged), std::move(right), std::move(outer)));
  }
  NodePtr merged = join_left(std::move(left), std::move(mid), std::move(inner));
  NodePtr top = make_node(std::move(merged), std::move(right), std::move(outer));
  if (height_of(top->left) <= height_of(top->right) + 1) return top;
  return rotate_right(std::move(top));
}

// Every key in `left` < mid's key < every key in `right`.
NodePtr join(NodePtr left, NodePtr mid, NodePtr right) {
  const int hl = height_of(left);
  const int hr = height_of(right);
  if (hl > hr + 1) return join_right(std::move(left), std::move(mid), std::move(right));
  if (hr > hl + 1) return join_left(std::move(left), std::move(mid), std::move(right));
  return make_node(std::move(left), std::move(mid), std::move(right));
}

// Detaches the maximum node. Returns {rest, max}.
std::pair<NodePtr, NodePtr> split_last(NodePtr tree) {
  if (!tree->right) {
    NodePtr rest = std::move(tree->left);
    tree->height = 1;
    return {std::move(rest), std::move(tree)};
  }
  auto [rest, last] = split_last(std::move(tree->right));
  NodePtr left = std::move(tree->left);
  return {join(std::move(left), std::move(tree), std::move(rest)), std::move(last)};
}

NodePtr join2(NodePtr left, NodePtr right) {
  if (!left) return right;
  auto [rest, last] = split_last(std::move(left));
  return join(std::move(rest), std::move(last), std::move(right));
}

struct Split {
  NodePtr less;
  NodePtr equal;
  NodePtr greater;
};

Split split(NodePtr tree, Timestamp key) {
  if (!tree) return {};
  NodePtr left = std::move(tree->left);
  NodePtr right = std::move(tree->right);
  const Timestamp here = start_of(*tree);
  if (key == here) {
    tree->height = 1;
    return {std::move(left), std::move(tree), std::move(right)};
  }
  if (key < here) {
    Split s = split(std::move(left), key);
    s.greater = join(std::move(s.greater), std::move(tree), std::move(right));
    return s;
  }
  Split s = split(std::move(right), key);
  s.less = join(std::move(left), std::move(tree), std::move(s.less));
  return s;
}

std::size_t count_nodes(const Node* node) {
  std::size_t count = 0;
  std::vector<const Node*> stack;
  if (node != nullptr) stack.push_back(node);
  while (!stack.empty()) {
    const Node* top = stack.back();
    stack.pop_back();
    ++count;
    if (top->left) stack.push_back(top->left.get());
    if (top->right) stack.push_back(top->right.get());
  }
  return count;
}

NodePtr clone(const Node* node) {
  if (node == nullptr) return nullptr;
  auto copy = std::make_unique<Node>();
  copy->entry = node->entry;
  copy->height = node->height;
  copy->left = clone(node->left.get());
  copy->right = clone(node->right.get());
  return copy;
}

// Smallest-start entry whose end >= t.
const Node* first_ending_at_or_after(const Node* node, Timestamp t) {
  const Node* best = nullptr;
  while (node != nullptr) {
    if (node->entry.interval.end >= t) {
      best = node;
      node = node->left.get();
    } else {
      node = node->right.get();
    }
  }
  return best;
}

// Largest-start entry whose start <= t.
const Node* last_starting_at_or_before(const Node* node, Timestamp t) {
  const Node* best = nullptr;
  while (node != nullptr) {
    if (start_of(*node) <= t) {
      best = node;
      node = node->right.get();
    } else {
      node = node->left.get();
    }
  }
  return best;
}

// Returns the checked height, or -1 on a violation.
int checked_height(const Node* node) {
  if (node == nullptr) return 0;
  const int hl = checked_height(node->left.get());
  const int hr = checked_height(node->right.get());
  if (hl < 0 || hr < 0) return -1;
  if (std::abs(hl - hr) > 1) return -1;
  const int h = 1 + std::max(hl, hr);
  return h == node->height ? h : -1;
}

}  // namespace

IntervalTree::IntervalTree() noexcept = default;
IntervalTree::~IntervalTree() = default;
IntervalTree::IntervalTree(IntervalTree&&) noexcept = default;
IntervalTree& IntervalTree::operator=(IntervalTree&&) noexcept = default;

IntervalTree::IntervalTree(const IntervalTree& other)
    : root_(clone(other.root_.get())), size_(other.size_) {}

IntervalTree& IntervalTree::operator=(const IntervalTree& other) {
  if (this != &other) {
    root_ = clone(other.root_.get());
    size_ = other.size_;
  }
  return *this;
}

std::optional<TreeEntry> IntervalTree::find_next(Timestamp t) const {
  const Node* node = root_.get();
  const Node* best = nullptr;
  while (node != nullptr) {
    if (start_of(*node) >= t) {
      best = node;
      node = node->left.get();
    } else {
      node = node->right.get();
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->entry;
}

std::optional<TreeEntry> IntervalTree::find_previous(Timestamp t) const {
  const Node* node = root_.get();
  const Node* best = nullptr;
  while (node != nullptr) {
    if (node->entry.interval.end <= t) {
      best = node;
      node = node->right.get();
    } else {
      node = node->left.get();
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->entry;
}

bool IntervalTree::insert_minimal(TimeInterval interval, VertexId successor) {
  if (!interval.valid()) {
    throw std::invalid_argument("insert_minimal: interval start exceeds end");
  }

  // Earliest-starting entry at or after our start has the smallest end among
  // them; if it fits inside us, we are redundant.
  if (auto next = find_next(interval.start); next && next->interval.end <= interval.end) {
    return false;
  }

  // Entries containing the new interval are exactly those with
  // start <= interval.start and end >= interval.end: a contiguous run.
  const Node* first = first_ending_at_or_after(root_.get(), interval.end);
  if (first != nullptr && start_of(*first) <= interval.start) {
    const Node* last = last_starting_at_or_before(root_.get(), interval.start);
    range_delete(start_of(*first), start_of(*last));
  }

  auto node = std::make_unique<Node>();
  node->entry = TreeEntry{interval, successor};
  Split parts = split(std::move(root_), interval.start);
  root_ = join(std::move(parts.less), std::move(node), std::move(parts.greater));
  ++size_;
  return true;
}

std::size_t IntervalTree::range_delete(Timestamp first_start, Timestamp last_start) {
  if (!root_ || first_start > last_start) return 0;

  Split lower = split(std::move(root_), first_start);
  Split upper = split(std::move(lower.greater), last_start);

  const std::size_t removed = count_nodes(lower.equal.get()) + count_nodes(upper.less.get()) +
                              count_nodes(upper.equal.get());
  root_ = join2(std::move(lower.less), std::move(upper.greater));
  size_ -= removed;
  return removed;
}

int IntervalTree::height() const noexcept { return height_of(root_); }

std::vector<TreeEntry> IntervalTree::entries() const {
  std::vector<TreeEntry> out;
  out.reserve(size_);
  for_each([&out](const TreeEntry& e) { out.push_back(e); });
  return out;
}

bool IntervalTree::check_invariants() const {
  if (checked_height(root_.get()) < 0) return false;
  std::size_t count = 0;
  bool ordered = true;
  std::optional<TimeInterval> prev;
  for_each([&](const TreeEntry& e) {
    ++count;
    if (!e.interval.valid()) ordered = false;
    if (prev && (prev->start >= e.interval.start || prev->end >= e.interval.end)) ordered = false;
    prev = e.interval;
  });
  return ordered && count == size_;
}

void IntervalTree::clear() noexcept {
  root_.reset();
  size_ = 0;
}

bool operator==(const IntervalTree& a, const IntervalTree& b) {
  return a.size() == b.size() && a.entries() == b.entries();
}

}  // namespace ttc
