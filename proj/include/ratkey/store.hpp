#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ratkey/key.hpp"

namespace ratkey {

/// One stored node: its key plus an opaque UTF-8 payload.
struct NodeRecord {
  NodeKey key;
  std::string payload;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

/// Strict weak order on keys by value nv/dv, cross-multiplied. Distinct
/// canonical keys never share a value, so this orders store contents
/// totally, and the order is exactly depth-first preorder.
struct KeyValueOrder {
  bool operator()(const NodeKey& a, const NodeKey& b) const {
    return a.nv * b.dv < b.nv * a.dv;
  }
};

/// File-backed node table ordered by key value.
///
/// Ordinal allocation is tracked per parent and never reused: a child
/// moved away leaves a gap, which the keys tolerate since they need
/// not be dense. Sorting happens in memory; the SQL text emitted by
/// emit_sql_predicate covers filtering only.
///
/// Concurrency contract: any number of concurrent readers, or one
/// writer with exclusive access. No operation blocks.
class TreeStore {
 public:
  TreeStore() = default;

  std::size_t size() const { return records_.size(); }
  bool contains(const NodeKey& key) const { return records_.count(key) != 0; }

  /// Records in key order (= preorder), payloads keyed by node.
  const std::map<NodeKey, std::string, KeyValueOrder>& entries() const {
    return records_;
  }

  /// Highest child ordinal ever allocated under the key; 0 if none.
  BigInt child_count(const NodeKey& key) const;

  /// Stores a child of the parent (the root included) under the next
  /// free ordinal. Writes exactly one record and reads none besides the
  /// parent-existence check. Unknown parent raises errc::missing_parent.
  NodeRecord insert_child(const NodeKey& parent, std::string payload);

  /// All records strictly inside the key's sibling interval, in key
  /// order; the whole store for the root. The node itself is excluded.
  std::vector<NodeRecord> subtree(const NodeKey& key) const;

  /// Ancestor keys root-side first, the node itself excluded. Computed
  /// from nv/dv alone; reads no records.
  std::vector<NodeKey> ancestors(const NodeKey& key) const;

  /// Moves the n-th child of p0, with its whole subtree, to become the
  /// m-th child of p1, rewriting each contained record through the
  /// relocation map. m must be p1's next free ordinal; the identity
  /// move (p0 == p1, n == m) is the one allowed exception and leaves
  /// the records byte-identical. Returns how many records were
  /// rewritten, the moved child included. Records outside the subtree
  /// are untouched.
  std::size_t move_subtree(const NodeKey& p0, const BigInt& n,
                           const NodeKey& p1, const BigInt& m);

  /// Writes the store as text, one record per line in key order:
  /// nv TAB dv TAB snv TAB sdv TAB payload, the payload with TAB,
  /// newline, and backslash escaped. UTF-8, LF endings, bit-exact.
  void save(const std::filesystem::path& file) const;

  /// Reads a file written by save (any line order). Unreadable file
  /// raises errc::io; malformed lines, non-canonical or duplicate keys,
  /// and records whose parent node is absent raise errc::parse. Child
  /// counts are rebuilt as the highest ordinal present per parent.
  static TreeStore load(const std::filesystem::path& file);

 private:
  std::map<NodeKey, std::string, KeyValueOrder> records_;
  std::map<NodeKey, BigInt, KeyValueOrder> counts_;
};

enum class PredicateKind { ancestors, descendants };

/// Integer-only SQL boolean expression selecting the key's ancestors or
/// descendants from a table with the given key columns, e.g. for
/// descendants of (2,1,3,1): `(nv * 1 > 2 * dv) AND (nv * 1 < 3 * dv)`.
/// The ancestor form also needs the sibling columns. Asking for the
/// ancestors of the root raises errc::no_predicate.
std::string emit_sql_predicate(PredicateKind kind, const NodeKey& key,
                               const std::string& nv_col,
                               const std::string& dv_col,
                               const std::string& snv_col = "snv",
                               const std::string& sdv_col = "sdv");

/// Payload escaping used by the store file format: TAB becomes `\t`,
/// newline `\n`, backslash `\\`. Everything else passes through.
std::string escape_payload(std::string_view payload);

/// Inverse of escape_payload; unknown escapes raise errc::parse.
std::string unescape_payload(std::string_view text);

}  // namespace ratkey
