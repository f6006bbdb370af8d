#pragma once

#include <stdexcept>
#include <string>

namespace ratkey {

/// Error kinds raised by the key algebra, the store, and the text codecs.
enum class errc {
  invalid_ordinal,   // child ordinal < 1
  not_canonical,     // numerator/denominator share a factor
  not_a_node,        // rational has no tree position (nv < dv, zero CF term, root where a node is required)
  no_sibling,        // next_sibling_key of the super-root
  corrupt_key,       // quadruple violates the determinant invariant
  relocation_domain, // relocated key was not inside the moved subtree
  overflow,          // value does not fit the requested fixed width
  missing_parent,    // referenced tree position is not in the store
  slot_conflict,     // move destination is not the next free ordinal
  no_predicate,      // SQL predicate requested for a key that has none
  no_value,          // continued-fraction value of the empty path
  invalid_workload,  // malformed benchmark descriptor
  parse,             // malformed text (key, path, or store line)
  io,                // file could not be opened, read, or written
};

const char* errc_name(errc code) noexcept;

class tree_error : public std::runtime_error {
 public:
  tree_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace ratkey
