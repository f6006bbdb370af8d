#include "ratkey/oracle.hpp"

#include <algorithm>

#include "ratkey/keyio.hpp"

namespace ratkey {

namespace {

const Rational kOne(BigInt(1));

void require_terms(bool nonempty, const char* what) {
  if (!nonempty) {
    throw tree_error(errc::no_value,
                     std::string(what) + " of the empty path is undefined");
  }
}

bool is_prefix(const TreePath& prefix, const TreePath& path) {
  return path.size() > prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), path.begin());
}

}  // namespace

Rational eval_cf(const TreePath& path) {
  require_terms(!path.empty(), "continued-fraction value");
  std::vector<Rational> terms;
  terms.reserve(path.size());
  for (const BigInt& ordinal : path) {
    if (ordinal < 1) {
      throw tree_error(errc::invalid_ordinal,
                       "ordinal must be >= 1, got " + ordinal.str());
    }
    terms.emplace_back(ordinal);
  }
  return eval_cf_terms(terms);
}

Rational eval_cf_terms(const std::vector<Rational>& terms) {
  require_terms(!terms.empty(), "continued-fraction value");
  for (const Rational& term : terms) {
    if (term.num() <= 0) {
      throw tree_error(errc::invalid_ordinal,
                       "term must be positive, got " + term.str());
    }
  }
  Rational value = terms.back();
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    value = terms[i] + (kOne + value.reciprocal()).reciprocal();
  }
  return value;
}

Rational trop_eval(const TreePath& path) {
  require_terms(!path.empty(), "simple continued-fraction value");
  for (const BigInt& ordinal : path) {
    if (ordinal < 1) {
      throw tree_error(errc::invalid_ordinal,
                       "ordinal must be >= 1, got " + ordinal.str());
    }
  }
  Rational value(path.back());
  for (std::size_t i = path.size() - 1; i-- > 0;) {
    value = Rational(path[i]) + value.reciprocal();
  }
  return value;
}

NaiveTree::NaiveTree(const std::map<TreePath, BigInt>& nodes) : nodes_(nodes) {
  if (nodes_.count(TreePath{}) == 0) {
    throw tree_error(errc::parse, "tree table has no root entry");
  }
  for (const auto& [path, count] : nodes_) {
    if (count < 0) {
      throw tree_error(errc::parse, "negative child count at '" +
                                        to_string(path) + "'");
    }
    TreePath child = path;
    child.push_back(0);
    for (BigInt i = 1; i <= count; ++i) {
      child.back() = i;
      if (nodes_.count(child) == 0) {
        throw tree_error(errc::parse,
                         "tree table is missing '" + to_string(child) + "'");
      }
    }
    if (path.empty()) continue;
    TreePath parent(path.begin(), path.end() - 1);
    auto it = nodes_.find(parent);
    if (it == nodes_.end() || path.back() < 1 || path.back() > it->second) {
      throw tree_error(errc::parse, "stray tree table entry '" +
                                        to_string(path) + "'");
    }
  }
}

BigInt NaiveTree::child_count(const TreePath& path) const {
  auto it = nodes_.find(path);
  if (it == nodes_.end()) {
    throw tree_error(errc::missing_parent,
                     "no node at path '" + to_string(path) + "'");
  }
  return it->second;
}

TreePath NaiveTree::append_child(const TreePath& parent) {
  return insert_child_at(parent, child_count(parent) + 1);
}

TreePath NaiveTree::insert_child_at(const TreePath& parent,
                                    const BigInt& position) {
  BigInt count = child_count(parent);
  if (position < 1 || position > count + 1) {
    throw tree_error(errc::invalid_ordinal,
                     "insert position " + position.str() +
                         " is outside 1.." + BigInt(count + 1).str());
  }
  if (position == count + 1) {  // append: nothing shifts
    nodes_[parent] = count + 1;
    TreePath inserted = parent;
    inserted.push_back(position);
    nodes_.emplace(inserted, 0);
    return inserted;
  }
  std::map<TreePath, BigInt> shifted;
  for (const auto& [path, cnt] : nodes_) {
    TreePath moved = path;
    if (is_prefix(parent, moved) && moved[parent.size()] >= position) {
      moved[parent.size()] += 1;
    }
    shifted.emplace(std::move(moved), cnt);
  }
  shifted[parent] = count + 1;
  TreePath inserted = parent;
  inserted.push_back(position);
  shifted.emplace(inserted, 0);
  nodes_ = std::move(shifted);
  return inserted;
}

namespace {

void preorder_walk(const NaiveTree& tree, const TreePath& path,
                   std::vector<TreePath>& out) {
  BigInt count = tree.child_count(path);
  TreePath child = path;
  child.push_back(0);
  for (BigInt i = 1; i <= count; ++i) {
    child.back() = i;
    out.push_back(child);
    preorder_walk(tree, child, out);
  }
}

}  // namespace

std::vector<TreePath> naive_preorder(const NaiveTree& tree) {
  std::vector<TreePath> out;
  out.reserve(tree.size());
  preorder_walk(tree, TreePath{}, out);
  return out;
}

}  // namespace ratkey
