#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ratkey/oracle.hpp"

namespace ratkey {

/// Classic nested-set numbering of one node: the left and right values
/// assigned by a depth-first walk. A node is an ancestor of another
/// exactly when its (lv, rv) interval strictly contains the other's.
struct LvRvNode {
  std::int64_t lv;
  std::int64_t rv;
  TreePath path;

  friend bool operator==(const LvRvNode&, const LvRvNode&) = default;
};

/// Numbers every node of the tree depth-first, siblings left to right:
/// a tree of N nodes uses the integers 1..2N, each exactly once. The
/// root is virtual and gets no numbers.
std::map<TreePath, LvRvNode> lvrv_encode(const NaiveTree& tree);

/// Inserts a child at the given 1-based position under the parent and
/// returns how many existing nodes had their lv or rv changed by the
/// renumbering. This is the write cost the rational keys avoid: their
/// insert touches exactly one record regardless of position.
std::size_t lvrv_insert(NaiveTree& tree, const TreePath& parent,
                        const BigInt& position);

/// Shape of the insert workload: parents drawn uniformly from the whole
/// tree, drawn from the leftmost root-to-leaf chain (keeps inserting
/// near the left edge, the nested-set worst region), or always the node
/// inserted last (grows one deep chain, the key bit-growth worst case).
enum class WorkloadShape { uniform, leftmost, chain };

struct WorkloadSpec {
  std::uint64_t inserts = 0;
  std::uint64_t moves = 0;
  std::uint64_t seed = 0;
  WorkloadShape shape = WorkloadShape::uniform;
};

enum class Encoding { rational, lvrv };
enum class OpKind { insert, move };

const char* shape_name(WorkloadShape shape);
const char* encoding_name(Encoding encoding);
const char* op_name(OpKind op);

/// Workload outcome: for each encoding and operation kind, a histogram
/// mapping rows-touched to how often that cost occurred, plus the
/// largest key numerator bit length seen at each depth.
struct BenchReport {
  WorkloadSpec spec;
  std::map<std::pair<Encoding, OpKind>, std::map<std::uint64_t, std::uint64_t>>
      rows_touched;
  std::map<std::size_t, std::size_t> max_nv_bits;

  /// Deterministic tab-separated text: the spec echo, then one
  /// `rows_touched <encoding> <op> <rows> <count>` line per histogram
  /// bucket, then one `max_nv_bits <depth> <bits>` line per depth.
  std::string to_tsv() const;
};

/// Runs the workload against both encodings side by side: all inserts,
/// then all moves, on a rational-key store and an LV/RV-numbered mirror
/// of the same logical tree. "Rows touched" counts records whose
/// persisted bytes change. Deterministic for a fixed spec. A workload
/// with moves but no inserts has no nodes to move and raises
/// errc::invalid_workload.
BenchReport run_workload(const WorkloadSpec& spec);

}  // namespace ratkey
