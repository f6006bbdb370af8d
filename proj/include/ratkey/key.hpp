#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ratkey/bigint.hpp"
#include "ratkey/rational.hpp"

namespace ratkey {

/// Tree position as a sequence of 1-based sibling ordinals, root to leaf.
/// The empty path names the virtual super-root.
using TreePath = std::vector<BigInt>;

/// Rational ordering key of one tree node.
///
/// nv/dv is the node's own key and snv/sdv the key of its next sibling
/// (allocated whether or not that sibling exists). Sorting nodes by nv/dv
/// yields depth-first preorder, and every descendant's key falls strictly
/// inside the open interval (nv/dv, snv/sdv), which makes subtree filters
/// a pair of integer cross-multiplications.
///
/// Viewed as the column matrix [[nv, snv], [dv, sdv]], every key is a
/// product of unimodular factors, so nv*sdv - dv*snv == -1 and all four
/// adjacent pairs are coprime. Keys are therefore always in lowest terms
/// and never need reduction.
///
/// The super-root is the fixed quadruple (0, 1, 1, 0). It takes part in
/// the matrix algebra but has no rational value of its own: comparisons
/// and ancestry predicates reject it.
struct NodeKey {
  BigInt nv;
  BigInt dv;
  BigInt snv;
  BigInt sdv;

  friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

/// NodeKey narrowed to 64-bit components for interop with fixed-width
/// consumers (for example SQL bigint columns). Produced only by
/// narrow_key, which refuses to wrap.
struct NodeKey64 {
  std::int64_t nv;
  std::int64_t dv;
  std::int64_t snv;
  std::int64_t sdv;

  friend bool operator==(const NodeKey64&, const NodeKey64&) = default;
};

/// Integer 2x2 matrix [[a, b], [c, d]] with determinant +1 or -1.
/// Maps old keys to new keys when a subtree is relocated.
struct RelocationMap {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt d;

  friend bool operator==(const RelocationMap&, const RelocationMap&) = default;
};

/// Result of unwinding a key back into tree coordinates: the sibling
/// ordinals root to leaf, and the full key chain in the same order with
/// the decoded node itself last.
struct DecodedKey {
  TreePath path;
  std::vector<NodeKey> chain;
};

/// The super-root key (0, 1, 1, 0).
NodeKey root_key();

bool is_root(const NodeKey& key);

/// nv*sdv - dv*snv; -1 for every well-formed key.
BigInt key_determinant(const NodeKey& key);

/// Structural well-formedness: non-negative components, determinant -1,
/// and (unless root) positive denominators with nv/dv >= 1. Throws
/// errc::corrupt_key. Does not prove the quadruple is reachable from the
/// root; see is_canonical.
void validate_key(const NodeKey& key);

/// True iff the quadruple is exactly the key some tree position encodes
/// to. Structural checks plus a decode round-trip.
bool is_canonical(const NodeKey& key);

/// Key of the c-th child (c >= 1): the mediant step
///   (nv + c*snv, dv + c*sdv, nv + (c+1)*snv, dv + (c+1)*sdv).
/// Touches no other key, which is why inserts never re-encode siblings.
NodeKey child_key(const NodeKey& parent, const BigInt& ordinal);

/// Key of the next sibling: (snv, sdv, 2*snv - nv, 2*sdv - dv).
/// Equals child_key(parent, c + 1) for the c-th child. Rejects the root.
NodeKey next_sibling_key(const NodeKey& key);

/// Fold child_key over the ordinals, starting at the super-root.
NodeKey encode_path(const TreePath& path);

/// Rebuild the ordinal path and every ancestor key from nv/dv alone,
/// with no store access: a root-to-leaf walk that peels one continued-
/// fraction quotient per level. Requires gcd(nv, dv) == 1 and
/// nv >= dv >= 1; inputs whose expansion leaves the encoding's image
/// raise errc::not_a_node.
DecodedKey decode_key(const BigInt& nv, const BigInt& dv);

/// Parent key in O(1), recovered from the quadruple itself:
/// the parent's sibling pair is (snv - nv, sdv - dv). Root for top-level
/// keys. Input must be canonical and non-root.
NodeKey parent_key(const NodeKey& key);

/// 1-based ordinal of this key among its siblings. Input canonical,
/// non-root.
BigInt child_ordinal(const NodeKey& key);

/// Total order by exact key value nv/dv, via integer cross-
/// multiplication; never leaves integer arithmetic. Agrees with
/// depth-first preorder. Both keys must be non-root.
std::strong_ordering compare_keys(const NodeKey& a, const NodeKey& b);

/// True iff candidate lies strictly inside me's sibling interval:
///   nv_me/dv_me < nv_c/dv_c < snv_me/sdv_me.
/// Strict, so a node is not its own descendant. Both non-root.
bool is_descendant(const NodeKey& me, const NodeKey& candidate);

/// Mirror of is_descendant with the roles swapped. Both non-root.
bool is_ancestor(const NodeKey& me, const NodeKey& candidate);

/// Key quadruple as the matrix [[nv, snv], [dv, sdv]].
RelocationMap as_matrix(const NodeKey& key);

/// Exact integer inverse [[-sdv, snv], [dv, -nv]] of the key's matrix,
/// using determinant -1. Throws errc::corrupt_key otherwise.
RelocationMap invert_key(const NodeKey& key);

RelocationMap identity_map();

/// Matrix product lhs * rhs.
RelocationMap multiply(const RelocationMap& lhs, const RelocationMap& rhs);

BigInt map_determinant(const RelocationMap& map);

/// Map rewriting keys when the subtree under the n-th child of p0 moves
/// to become the m-th child of p1:
///   p1 * [[1, 0], [m - n, 1]] * p0^-1.
/// Determinant is always +1.
RelocationMap relocation_map(const NodeKey& p0, const BigInt& n,
                             const NodeKey& p1, const BigInt& m);

/// Left-multiply the key's matrix by the relocation map. The input must
/// have been inside the moved subtree (moved child included); results
/// that are not canonical keys raise errc::relocation_domain.
NodeKey apply_relocation(const RelocationMap& map, const NodeKey& key);

/// nv/dv as an exact rational. Non-root only.
Rational key_value(const NodeKey& key);

/// snv/sdv as an exact rational. Non-root only.
Rational sibling_value(const NodeKey& key);

/// Checked narrowing of all four components; throws errc::overflow.
NodeKey64 narrow_key(const NodeKey& key);

}  // namespace ratkey
