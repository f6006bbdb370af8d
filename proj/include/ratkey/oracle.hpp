#pragma once

#include <map>
#include <vector>

#include "ratkey/key.hpp"
#include "ratkey/rational.hpp"

namespace ratkey {

/// Continued-fraction value of a path in the constrained form
///   N1 + 1/(1 + 1/(N2 + 1/(1 + ... + 1/Nm))),
/// every second term pinned to one. Evaluated bottom-up with exact
/// rationals; the result is reduced. Serves as the independent ground
/// truth for the key encoding: encode_path(p) satisfies
/// nv/dv == eval_cf(p) and snv/sdv == eval_cf(p with last ordinal + 1).
Rational eval_cf(const TreePath& path);

/// eval_cf generalized to positive rational terms. Exists for the
/// recursion identity
///   eval_cf(p + [d, e]) == eval_cf_terms(p + [d + 1/(1 + 1/e)]),
/// which the property tests instantiate with rational d, e.
Rational eval_cf_terms(const std::vector<Rational>& terms);

/// Plain simple continued fraction N1 + 1/(N2 + ... + 1/Nm) over the
/// ordinals. Kept as the contrast encoding: appending a first child
/// collides with bumping the last ordinal, and the value order flips
/// direction on every second tree level.
Rational trop_eval(const TreePath& path);

/// Explicit tree model with no key arithmetic: each node's path mapped
/// to its child count, the virtual root included as the empty path.
/// Child ordinals are always the contiguous range 1..count. Ground
/// truth for membership, preorder, and renumbering costs.
class NaiveTree {
 public:
  /// Just the root, no children.
  NaiveTree() { nodes_[TreePath{}] = 0; }

  /// Builds from an explicit path -> child-count table. The root entry
  /// must be present, every node's children must be exactly 1..count,
  /// and no stray paths are allowed. Violations raise errc::parse.
  explicit NaiveTree(const std::map<TreePath, BigInt>& nodes);

  const std::map<TreePath, BigInt>& nodes() const { return nodes_; }

  bool contains(const TreePath& path) const { return nodes_.count(path) != 0; }

  /// Child count of an existing node; errc::missing_parent otherwise.
  BigInt child_count(const TreePath& path) const;

  /// Adds a child with the next free ordinal; returns its path.
  TreePath append_child(const TreePath& parent);

  /// Adds a child at the 1-based position (at most count + 1), shifting
  /// the ordinals >= position, and every path beneath them, up by one.
  /// Returns the new node's path.
  TreePath insert_child_at(const TreePath& parent, const BigInt& position);

  /// Node count, root excluded.
  std::size_t size() const { return nodes_.size() - 1; }

 private:
  std::map<TreePath, BigInt> nodes_;
};

/// Depth-first preorder of every non-root path, siblings ascending.
std::vector<TreePath> naive_preorder(const NaiveTree& tree);

}  // namespace ratkey
