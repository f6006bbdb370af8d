#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ratkey/key.hpp"

namespace ratkey {

/// Canonical text form `nv/dv:snv/sdv` with decimal integers,
/// e.g. `65/23:82/29`. Round-trips bit-exactly through parse_key.
std::string to_string(const NodeKey& key);

/// Inverse of to_string(NodeKey). Syntax problems raise errc::parse;
/// a syntactically fine quadruple that is not a well-formed key raises
/// errc::corrupt_key. Accepts the root spelled `0/1:1/0`.
NodeKey parse_key(std::string_view text);

/// Dotted path form `2.4.3`. The empty path (the super-root) prints as
/// the empty string.
std::string to_string(const TreePath& path);

/// Parses either the dotted form `2.4.3` or the bracket form
/// `[◦ 2 ◦ 4 ◦ 3]` (a white bullet before each ordinal, spaces
/// optional). `[]` is the empty path. Ordinals are positive decimals;
/// anything else raises errc::parse.
TreePath parse_path(std::string_view text);

std::ostream& operator<<(std::ostream& out, const NodeKey& key);

}  // namespace ratkey
