#include "ratkey/key.hpp"

#include <utility>

namespace ratkey {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_ordinal: return "invalid_ordinal";
    case errc::not_canonical: return "not_canonical";
    case errc::not_a_node: return "not_a_node";
    case errc::no_sibling: return "no_sibling";
    case errc::corrupt_key: return "corrupt_key";
    case errc::relocation_domain: return "relocation_domain";
    case errc::overflow: return "overflow";
    case errc::missing_parent: return "missing_parent";
    case errc::slot_conflict: return "slot_conflict";
    case errc::no_predicate: return "no_predicate";
    case errc::no_value: return "no_value";
    case errc::invalid_workload: return "invalid_workload";
    case errc::parse: return "parse";
    case errc::io: return "io";
  }
  return "unknown";
}

namespace {

std::string key_text(const NodeKey& key) {
  return key.nv.str() + "/" + key.dv.str() + ":" + key.snv.str() + "/" +
         key.sdv.str();
}

void require_non_root(const NodeKey& key, const char* op) {
  if (is_root(key)) {
    throw tree_error(errc::not_a_node,
                     std::string(op) + ": the super-root has no key value");
  }
}

}  // namespace

NodeKey root_key() { return NodeKey{0, 1, 1, 0}; }

bool is_root(const NodeKey& key) { return key == root_key(); }

BigInt key_determinant(const NodeKey& key) {
  return key.nv * key.sdv - key.dv * key.snv;
}

void validate_key(const NodeKey& key) {
  if (key.nv < 0 || key.dv < 0 || key.snv < 0 || key.sdv < 0) {
    throw tree_error(errc::corrupt_key,
                     "negative component in key " + key_text(key));
  }
  if (key_determinant(key) != -1) {
    throw tree_error(errc::corrupt_key,
                     "key determinant is not -1: " + key_text(key));
  }
  if (is_root(key)) return;
  if (key.dv < 1 || key.sdv < 1 || key.nv < key.dv) {
    throw tree_error(errc::corrupt_key,
                     "key outside the node range: " + key_text(key));
  }
}

bool is_canonical(const NodeKey& key) {
  if (is_root(key)) return true;
  try {
    validate_key(key);
    DecodedKey decoded = decode_key(key.nv, key.dv);
    return decoded.chain.back() == key;
  } catch (const tree_error&) {
    return false;
  }
}

NodeKey child_key(const NodeKey& parent, const BigInt& ordinal) {
  if (ordinal < 1) {
    throw tree_error(errc::invalid_ordinal,
                     "child ordinal must be >= 1, got " + ordinal.str());
  }
  return NodeKey{parent.nv + ordinal * parent.snv,
                 parent.dv + ordinal * parent.sdv,
                 parent.nv + (ordinal + 1) * parent.snv,
                 parent.dv + (ordinal + 1) * parent.sdv};
}

NodeKey next_sibling_key(const NodeKey& key) {
  if (is_root(key)) {
    throw tree_error(errc::no_sibling, "the super-root has no sibling");
  }
  return NodeKey{key.snv, key.sdv, 2 * key.snv - key.nv, 2 * key.sdv - key.dv};
}

NodeKey encode_path(const TreePath& path) {
  NodeKey key = root_key();
  for (const BigInt& ordinal : path) key = child_key(key, ordinal);
  return key;
}

DecodedKey decode_key(const BigInt& nv, const BigInt& dv) {
  if (dv >= 1 && gcd(nv, dv) != 1) {
    throw tree_error(errc::not_canonical, "key value not in lowest terms: " +
                                              nv.str() + "/" + dv.str());
  }
  if (dv < 1 || nv < dv) {
    throw tree_error(errc::not_a_node,
                     "no node has value " + nv.str() + "/" + dv.str());
  }
  DecodedKey out;
  NodeKey anc = root_key();
  BigInt num = nv;
  BigInt den = dv;
  while (num > 0) {
    BigInt quot = num / den;
    BigInt rem = num % den;
    if (quot < 1) {
      throw tree_error(errc::not_a_node,
                       "no node has value " + nv.str() + "/" + dv.str());
    }
    anc = child_key(anc, quot);
    out.path.push_back(quot);
    out.chain.push_back(anc);
    num = rem;
    if (num != 0) {
      den -= rem;
      if (den == 0) den = 1;
    }
  }
  return out;
}

NodeKey parent_key(const NodeKey& key) {
  require_non_root(key, "parent_key");
  NodeKey parent;
  parent.snv = key.snv - key.nv;
  parent.sdv = key.sdv - key.dv;
  if (parent.snv < 1 || parent.sdv < 0) {
    throw tree_error(errc::not_canonical,
                     "key has no parent: " + key_text(key));
  }
  BigInt ordinal = key.nv / parent.snv;
  parent.nv = key.nv % parent.snv;
  parent.dv = key.dv - ordinal * parent.sdv;
  if (ordinal < 1 || parent.dv < 0 ||
      child_key(parent, ordinal) != key ||
      key_determinant(parent) != -1) {
    throw tree_error(errc::not_canonical,
                     "key has no parent: " + key_text(key));
  }
  return parent;
}

BigInt child_ordinal(const NodeKey& key) {
  require_non_root(key, "child_ordinal");
  BigInt step = key.snv - key.nv;
  if (step < 1) {
    throw tree_error(errc::not_canonical,
                     "key has no sibling ordinal: " + key_text(key));
  }
  BigInt ordinal = key.nv / step;
  if (ordinal < 1 || child_key(parent_key(key), ordinal) != key) {
    throw tree_error(errc::not_canonical,
                     "key has no sibling ordinal: " + key_text(key));
  }
  return ordinal;
}

std::strong_ordering compare_keys(const NodeKey& a, const NodeKey& b) {
  require_non_root(a, "compare_keys");
  require_non_root(b, "compare_keys");
  BigInt lhs = a.nv * b.dv;
  BigInt rhs = b.nv * a.dv;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_descendant(const NodeKey& me, const NodeKey& candidate) {
  require_non_root(me, "is_descendant");
  require_non_root(candidate, "is_descendant");
  return me.nv * candidate.dv < candidate.nv * me.dv &&
         candidate.nv * me.sdv < me.snv * candidate.dv;
}

bool is_ancestor(const NodeKey& me, const NodeKey& candidate) {
  return is_descendant(candidate, me);
}

RelocationMap as_matrix(const NodeKey& key) {
  return RelocationMap{key.nv, key.snv, key.dv, key.sdv};
}

RelocationMap invert_key(const NodeKey& key) {
  if (key_determinant(key) != -1) {
    throw tree_error(errc::corrupt_key,
                     "key determinant is not -1: " + key_text(key));
  }
  return RelocationMap{-key.sdv, key.snv, key.dv, -key.nv};
}

RelocationMap identity_map() { return RelocationMap{1, 0, 0, 1}; }

RelocationMap multiply(const RelocationMap& lhs, const RelocationMap& rhs) {
  return RelocationMap{lhs.a * rhs.a + lhs.b * rhs.c,
                       lhs.a * rhs.b + lhs.b * rhs.d,
                       lhs.c * rhs.a + lhs.d * rhs.c,
                       lhs.c * rhs.b + lhs.d * rhs.d};
}

BigInt map_determinant(const RelocationMap& map) {
  return map.a * map.d - map.b * map.c;
}

RelocationMap relocation_map(const NodeKey& p0, const BigInt& n,
                             const NodeKey& p1, const BigInt& m) {
  if (n < 1 || m < 1) {
    throw tree_error(errc::invalid_ordinal,
                     "child ordinals must be >= 1, got " + n.str() + " and " +
                         m.str());
  }
  validate_key(p0);
  validate_key(p1);
  RelocationMap shear{1, 0, m - n, 1};
  return multiply(multiply(as_matrix(p1), shear), invert_key(p0));
}

NodeKey apply_relocation(const RelocationMap& map, const NodeKey& key) {
  NodeKey moved{map.a * key.nv + map.b * key.dv,
                map.c * key.nv + map.d * key.dv,
                map.a * key.snv + map.b * key.sdv,
                map.c * key.snv + map.d * key.sdv};
  if (is_root(moved) || !is_canonical(moved)) {
    throw tree_error(errc::relocation_domain,
                     "key " + key_text(key) + " is outside the moved subtree");
  }
  return moved;
}

Rational key_value(const NodeKey& key) {
  require_non_root(key, "key_value");
  return Rational(key.nv, key.dv);
}

Rational sibling_value(const NodeKey& key) {
  require_non_root(key, "sibling_value");
  return Rational(key.snv, key.sdv);
}

NodeKey64 narrow_key(const NodeKey& key) {
  return NodeKey64{to_int64(key.nv), to_int64(key.dv), to_int64(key.snv),
                   to_int64(key.sdv)};
}

}  // namespace ratkey
