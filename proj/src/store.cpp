#include "ratkey/store.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <utility>

namespace ratkey {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (unsigned char c : text) {
    if (!std::isdigit(c)) return false;
  }
  return true;
}

tree_error line_error(std::size_t lineno, const std::string& what) {
  return tree_error(errc::parse,
                    "line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

BigInt TreeStore::child_count(const NodeKey& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? BigInt(0) : it->second;
}

NodeRecord TreeStore::insert_child(const NodeKey& parent, std::string payload) {
  if (!is_root(parent) && !contains(parent)) {
    throw tree_error(errc::missing_parent, "parent is not in the store");
  }
  BigInt ordinal = child_count(parent) + 1;
  NodeKey key = child_key(parent, ordinal);
  records_.emplace(key, payload);
  counts_[parent] = ordinal;
  return NodeRecord{key, std::move(payload)};
}

std::vector<NodeRecord> TreeStore::subtree(const NodeKey& key) const {
  std::vector<NodeRecord> out;
  if (is_root(key)) {
    for (const auto& [k, payload] : records_) out.push_back({k, payload});
    return out;
  }
  if (!is_canonical(key)) {
    throw tree_error(errc::not_canonical, "not a canonical node key");
  }
  for (auto it = records_.upper_bound(key);
       it != records_.end() &&
       it->first.nv * key.sdv < key.snv * it->first.dv;
       ++it) {
    out.push_back({it->first, it->second});
  }
  return out;
}

std::vector<NodeKey> TreeStore::ancestors(const NodeKey& key) const {
  DecodedKey decoded = decode_key(key.nv, key.dv);
  if (decoded.chain.back() != key) {
    throw tree_error(errc::not_canonical, "not a canonical node key");
  }
  decoded.chain.pop_back();
  return decoded.chain;
}

std::size_t TreeStore::move_subtree(const NodeKey& p0, const BigInt& n,
                                    const NodeKey& p1, const BigInt& m) {
  if (n < 1 || m < 1) {
    throw tree_error(errc::invalid_ordinal,
                     "child ordinals must be >= 1, got " + n.str() + " and " +
                         m.str());
  }
  if (!is_root(p0) && !contains(p0)) {
    throw tree_error(errc::missing_parent, "source parent is not in the store");
  }
  if (!is_root(p1) && !contains(p1)) {
    throw tree_error(errc::missing_parent,
                     "destination parent is not in the store");
  }
  NodeKey moved = child_key(p0, n);
  auto hit = records_.find(moved);
  if (hit == records_.end()) {
    throw tree_error(errc::not_a_node,
                     "the source parent has no child " + n.str());
  }
  bool identity = p0 == p1 && n == m;
  if (!identity) {
    if (m != child_count(p1) + 1) {
      throw tree_error(errc::slot_conflict,
                       "slot " + m.str() + " is not the destination's next "
                       "free ordinal " + (child_count(p1) + 1).str());
    }
    if (moved == p1 || (!is_root(p1) && is_descendant(moved, p1))) {
      throw tree_error(errc::relocation_domain,
                       "destination lies inside the moved subtree");
    }
  }
  RelocationMap map = relocation_map(p0, n, p1, m);

  std::vector<std::pair<NodeKey, std::string>> old_records;
  old_records.emplace_back(hit->first, hit->second);
  for (auto it = records_.upper_bound(moved);
       it != records_.end() &&
       it->first.nv * moved.sdv < moved.snv * it->first.dv;
       ++it) {
    old_records.emplace_back(it->first, it->second);
  }
  std::vector<std::pair<NodeKey, BigInt>> old_counts;
  for (const auto& [key, payload] : old_records) {
    auto cit = counts_.find(key);
    if (cit != counts_.end()) old_counts.emplace_back(key, cit->second);
  }

  for (const auto& [key, payload] : old_records) {
    records_.erase(key);
    counts_.erase(key);
  }
  for (auto& [key, payload] : old_records) {
    records_.emplace(apply_relocation(map, key), std::move(payload));
  }
  for (const auto& [key, count] : old_counts) {
    counts_[apply_relocation(map, key)] = count;
  }
  if (!identity) counts_[p1] = m;
  return old_records.size();
}

void TreeStore::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw tree_error(errc::io, "cannot write '" + file.string() + "'");
  }
  for (const auto& [key, payload] : records_) {
    out << key.nv.str() << '\t' << key.dv.str() << '\t' << key.snv.str()
        << '\t' << key.sdv.str() << '\t' << escape_payload(payload) << '\n';
  }
  out.flush();
  if (!out) {
    throw tree_error(errc::io, "cannot write '" + file.string() + "'");
  }
}

TreeStore TreeStore::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw tree_error(errc::io, "cannot read '" + file.string() + "'");
  }
  std::string content(std::istreambuf_iterator<char>(in),
                      std::istreambuf_iterator<char>{});
  if (in.bad()) {
    throw tree_error(errc::io, "cannot read '" + file.string() + "'");
  }

  TreeStore store;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string_view line(content.data() + start, end - start);
    start = end + 1;
    ++lineno;

    std::vector<std::string_view> fields;
    std::size_t from = 0;
    for (;;) {
      std::size_t tab = line.find('\t', from);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(from));
        break;
      }
      fields.push_back(line.substr(from, tab - from));
      from = tab + 1;
    }
    if (fields.size() != 5) {
      throw line_error(lineno, "expected 5 tab-separated fields");
    }
    BigInt parts[4];
    for (int i = 0; i < 4; ++i) {
      if (!all_digits(fields[i])) {
        throw line_error(lineno, "bad integer field '" +
                                     std::string(fields[i]) + "'");
      }
      parts[i] = BigInt(std::string(fields[i]));
    }
    NodeKey key{parts[0], parts[1], parts[2], parts[3]};
    if (is_root(key) || !is_canonical(key)) {
      throw line_error(lineno, "not a canonical node key");
    }
    std::string payload;
    try {
      payload = unescape_payload(fields[4]);
    } catch (const tree_error& e) {
      throw line_error(lineno, e.what());
    }
    if (!store.records_.emplace(key, std::move(payload)).second) {
      throw line_error(lineno, "duplicate key");
    }
  }

  for (const auto& [key, payload] : store.records_) {
    NodeKey parent = parent_key(key);
    if (!is_root(parent) && !store.contains(parent)) {
      throw tree_error(errc::parse, "record " + key.nv.str() + "/" +
                                        key.dv.str() +
                                        " has no parent record");
    }
    BigInt ordinal = child_ordinal(key);
    auto it = store.counts_.find(parent);
    if (it == store.counts_.end() || it->second < ordinal) {
      store.counts_[parent] = ordinal;
    }
  }
  return store;
}

std::string emit_sql_predicate(PredicateKind kind, const NodeKey& key,
                               const std::string& nv_col,
                               const std::string& dv_col,
                               const std::string& snv_col,
                               const std::string& sdv_col) {
  if (!is_canonical(key)) {
    throw tree_error(errc::not_canonical, "not a canonical node key");
  }
  if (kind == PredicateKind::descendants) {
    return "(" + nv_col + " * " + key.dv.str() + " > " + key.nv.str() + " * " +
           dv_col + ") AND (" + nv_col + " * " + key.sdv.str() + " < " +
           key.snv.str() + " * " + dv_col + ")";
  }
  if (is_root(key)) {
    throw tree_error(errc::no_predicate, "the root has no ancestors");
  }
  return "(" + nv_col + " * " + key.dv.str() + " < " + key.nv.str() + " * " +
         dv_col + ") AND (" + snv_col + " * " + key.dv.str() + " > " +
         key.nv.str() + " * " + sdv_col + ")";
}

std::string escape_payload(std::string_view payload) {
  std::string out;
  out.reserve(payload.size());
  for (char c : payload) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_payload(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out += text[i];
      continue;
    }
    if (++i == text.size()) {
      throw tree_error(errc::parse, "dangling backslash in payload");
    }
    switch (text[i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case '\\': out += '\\'; break;
      default:
        throw tree_error(errc::parse, std::string("unknown escape '\\") +
                                          text[i] + "' in payload");
    }
  }
  return out;
}

}  // namespace ratkey
