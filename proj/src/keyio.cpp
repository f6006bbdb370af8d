#include "ratkey/keyio.hpp"

#include <cctype>
#include <ostream>

namespace ratkey {

namespace {

constexpr std::string_view kBullet = "\xe2\x97\xa6";  // U+25E6 white bullet

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (unsigned char c : text) {
    if (!std::isdigit(c)) return false;
  }
  return true;
}

BigInt parse_uint(std::string_view token, std::string_view whole) {
  if (!all_digits(token)) {
    throw tree_error(errc::parse, "expected a decimal integer in '" +
                                      std::string(whole) + "'");
  }
  return BigInt(std::string(token));
}

BigInt parse_ordinal(std::string_view token, std::string_view whole) {
  BigInt value = parse_uint(token, whole);
  if (value < 1) {
    throw tree_error(errc::parse,
                     "ordinal must be >= 1 in path '" + std::string(whole) + "'");
  }
  return value;
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

TreePath parse_bracket_path(std::string_view text) {
  TreePath path;
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos >= text.size() || text[pos] != '[') {
    throw tree_error(errc::parse, "path '" + std::string(text) +
                                      "' does not start with '['");
  }
  ++pos;
  for (;;) {
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    if (text.compare(pos, kBullet.size(), kBullet) != 0) {
      throw tree_error(errc::parse, "expected '" + std::string(kBullet) +
                                        "' before each ordinal in '" +
                                        std::string(text) + "'");
    }
    pos += kBullet.size();
    skip_spaces(text, pos);
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    path.push_back(parse_ordinal(text.substr(start, pos - start), text));
  }
  skip_spaces(text, pos);
  if (pos != text.size()) {
    throw tree_error(errc::parse, "trailing characters after ']' in '" +
                                      std::string(text) + "'");
  }
  return path;
}

}  // namespace

std::string to_string(const NodeKey& key) {
  return key.nv.str() + "/" + key.dv.str() + ":" + key.snv.str() + "/" +
         key.sdv.str();
}

NodeKey parse_key(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos ||
      text.find(':', colon + 1) != std::string_view::npos) {
    throw tree_error(errc::parse, "key '" + std::string(text) +
                                      "' is not of the form nv/dv:snv/sdv");
  }
  std::string_view halves[2] = {text.substr(0, colon), text.substr(colon + 1)};
  BigInt parts[4];
  for (int h = 0; h < 2; ++h) {
    std::size_t slash = halves[h].find('/');
    if (slash == std::string_view::npos ||
        halves[h].find('/', slash + 1) != std::string_view::npos) {
      throw tree_error(errc::parse, "key '" + std::string(text) +
                                        "' is not of the form nv/dv:snv/sdv");
    }
    parts[2 * h] = parse_uint(halves[h].substr(0, slash), text);
    parts[2 * h + 1] = parse_uint(halves[h].substr(slash + 1), text);
  }
  NodeKey key{parts[0], parts[1], parts[2], parts[3]};
  validate_key(key);
  return key;
}

std::string to_string(const TreePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += path[i].str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const NodeKey& key) {
  return out << to_string(key);
}

TreePath parse_path(std::string_view text) {
  std::size_t first = 0;
  skip_spaces(text, first);
  if (first < text.size() && text[first] == '[') {
    return parse_bracket_path(text);
  }
  if (text.empty()) {
    throw tree_error(errc::parse, "empty path");
  }
  TreePath path;
  std::size_t start = 0;
  for (;;) {
    std::size_t dot = text.find('.', start);
    std::string_view token = dot == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, dot - start);
    path.push_back(parse_ordinal(token, text));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return path;
}

}  // namespace ratkey
