#include "ratkey/bench.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "ratkey/store.hpp"

namespace ratkey {

std::map<TreePath, LvRvNode> lvrv_encode(const NaiveTree& tree) {
  std::map<TreePath, LvRvNode> out;
  std::int64_t next = 0;
  auto walk = [&](auto&& self, const TreePath& path) -> void {
    BigInt count = tree.child_count(path);
    TreePath child = path;
    child.push_back(0);
    for (BigInt i = 1; i <= count; ++i) {
      child.back() = i;
      std::int64_t lv = ++next;
      self(self, child);
      out.emplace(child, LvRvNode{lv, ++next, child});
    }
  };
  walk(walk, TreePath{});
  return out;
}

std::size_t lvrv_insert(NaiveTree& tree, const TreePath& parent,
                        const BigInt& position) {
  std::map<TreePath, LvRvNode> before = lvrv_encode(tree);
  tree.insert_child_at(parent, position);
  std::map<TreePath, LvRvNode> after = lvrv_encode(tree);

  std::size_t changed = 0;
  for (const auto& [path, node] : before) {
    TreePath now = path;
    if (now.size() > parent.size() &&
        std::equal(parent.begin(), parent.end(), now.begin()) &&
        now[parent.size()] >= position) {
      now[parent.size()] += 1;
    }
    const LvRvNode& renumbered = after.at(now);
    if (renumbered.lv != node.lv || renumbered.rv != node.rv) ++changed;
  }
  return changed;
}

const char* shape_name(WorkloadShape shape) {
  switch (shape) {
    case WorkloadShape::uniform: return "uniform";
    case WorkloadShape::leftmost: return "leftmost";
    case WorkloadShape::chain: return "chain";
  }
  return "unknown";
}

const char* encoding_name(Encoding encoding) {
  return encoding == Encoding::rational ? "rational" : "lvrv";
}

const char* op_name(OpKind op) {
  return op == OpKind::insert ? "insert" : "move";
}

std::string BenchReport::to_tsv() const {
  std::string out;
  out += "spec\tinserts\t" + std::to_string(spec.inserts) + "\n";
  out += "spec\tmoves\t" + std::to_string(spec.moves) + "\n";
  out += "spec\tseed\t" + std::to_string(spec.seed) + "\n";
  out += std::string("spec\tshape\t") + shape_name(spec.shape) + "\n";
  for (const auto& [bucket, histogram] : rows_touched) {
    for (const auto& [rows, count] : histogram) {
      out += std::string("rows_touched\t") + encoding_name(bucket.first) +
             "\t" + op_name(bucket.second) + "\t" + std::to_string(rows) +
             "\t" + std::to_string(count) + "\n";
    }
  }
  for (const auto& [depth, bits] : max_nv_bits) {
    out += "max_nv_bits\t" + std::to_string(depth) + "\t" +
           std::to_string(bits) + "\n";
  }
  return out;
}

namespace {

// The logical tree both encodings maintain, nodes named by stable ids
// so renumbering costs can be attributed across structural changes.
// Id 0 is the virtual root.
struct LogicalTree {
  std::vector<std::size_t> parent{0};
  std::vector<std::vector<std::size_t>> kids{{}};

  std::size_t add(std::size_t under) {
    std::size_t id = parent.size();
    parent.push_back(under);
    kids.emplace_back();
    kids[under].push_back(id);
    return id;
  }

  void move(std::size_t id, std::size_t dest) {
    auto& old_kids = kids[parent[id]];
    old_kids.erase(std::find(old_kids.begin(), old_kids.end(), id));
    kids[dest].push_back(id);
    parent[id] = dest;
  }

  bool in_subtree(std::size_t id, std::size_t top) const {
    for (;;) {
      if (id == top) return true;
      if (id == 0) return false;
      id = parent[id];
    }
  }

  std::size_t depth(std::size_t id) const {
    std::size_t d = 0;
    while (id != 0) {
      id = parent[id];
      ++d;
    }
    return d;
  }

  void collect(std::size_t id, std::vector<std::size_t>& out) const {
    out.push_back(id);
    for (std::size_t kid : kids[id]) collect(kid, out);
  }

  // lv/rv numbering by id; the root stays (0, 0).
  std::vector<std::pair<std::int64_t, std::int64_t>> number() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out(parent.size(),
                                                           {0, 0});
    std::int64_t next = 0;
    auto walk = [&](auto&& self, std::size_t id) -> void {
      for (std::size_t kid : kids[id]) {
        out[kid].first = ++next;
        self(self, kid);
        out[kid].second = ++next;
      }
    };
    walk(walk, 0);
    return out;
  }
};

std::size_t changed_pairs(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& before,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& after) {
  std::size_t changed = 0;
  for (std::size_t id = 1; id < before.size(); ++id) {
    if (before[id] != after[id]) ++changed;
  }
  return changed;
}

}  // namespace

BenchReport run_workload(const WorkloadSpec& spec) {
  if (spec.moves > 0 && spec.inserts == 0) {
    throw tree_error(errc::invalid_workload,
                     "a workload with moves needs inserts to move");
  }

  BenchReport report;
  report.spec = spec;

  std::mt19937_64 rng(spec.seed);
  LogicalTree tree;
  TreeStore store;
  std::vector<NodeKey> key{root_key()};  // by id
  std::size_t last_inserted = 0;

  auto bump = [&](Encoding encoding, OpKind op, std::uint64_t rows) {
    ++report.rows_touched[{encoding, op}][rows];
  };

  for (std::uint64_t i = 0; i < spec.inserts; ++i) {
    std::size_t parent_id = 0;
    switch (spec.shape) {
      case WorkloadShape::uniform:
        parent_id = rng() % key.size();
        break;
      case WorkloadShape::leftmost: {
        std::vector<std::size_t> chain{0};
        while (!tree.kids[chain.back()].empty()) {
          chain.push_back(tree.kids[chain.back()].front());
        }
        parent_id = chain[rng() % chain.size()];
        break;
      }
      case WorkloadShape::chain:
        parent_id = last_inserted;
        break;
    }

    auto before = tree.number();
    std::size_t id = tree.add(parent_id);
    auto after = tree.number();
    before.resize(after.size(), {0, 0});
    before[id] = after[id];  // the new node is not a renumbered one
    bump(Encoding::lvrv, OpKind::insert, changed_pairs(before, after));

    NodeRecord record =
        store.insert_child(key[parent_id], "n" + std::to_string(id));
    key.push_back(record.key);
    bump(Encoding::rational, OpKind::insert, 1);
    last_inserted = id;
  }

  for (std::uint64_t i = 0; i < spec.moves; ++i) {
    std::size_t moved = 1 + rng() % (key.size() - 1);
    std::size_t dest = rng() % key.size();
    while (tree.in_subtree(dest, moved)) dest = rng() % key.size();

    NodeKey p0 = key[tree.parent[moved]];
    BigInt n = child_ordinal(key[moved]);
    NodeKey p1 = key[dest];
    BigInt m = store.child_count(p1) + 1;

    auto before = tree.number();
    tree.move(moved, dest);
    auto after = tree.number();
    bump(Encoding::lvrv, OpKind::move, changed_pairs(before, after));

    std::size_t rewritten = store.move_subtree(p0, n, p1, m);
    bump(Encoding::rational, OpKind::move, rewritten);

    RelocationMap map = relocation_map(p0, n, p1, m);
    std::vector<std::size_t> ids;
    tree.collect(moved, ids);
    for (std::size_t id : ids) key[id] = apply_relocation(map, key[id]);
  }

  for (std::size_t id = 1; id < key.size(); ++id) {
    std::size_t depth = tree.depth(id);
    std::size_t bits = bit_length(key[id].nv);
    auto it = report.max_nv_bits.find(depth);
    if (it == report.max_nv_bits.end() || it->second < bits) {
      report.max_nv_bits[depth] = bits;
    }
  }
  return report;
}

}  // namespace ratkey
