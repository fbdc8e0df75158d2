#pragma once

#include <string>
#include <string_view>

#include "tset/relation.hpp"

namespace tset {

/// Canonical relation document:
///   { "elements": ["a","b"], "relation": [["a","b"]] }
/// Labels in carrier order, pairs sorted by (source index, target index).
std::string to_json(const FiniteTSet& tset);

/// Parses a relation document. Unknown top-level keys, duplicate or empty
/// labels and non-transitive relations are rejected; with `close` set the
/// relation is transitively closed instead of rejected.
FiniteTSet parse_tset(std::string_view text, bool close = false);

/// Reads and parses a relation document from disk. I/O failures raise
/// Errc::malformed_document.
FiniteTSet load_tset(const std::string& path, bool close = false);

}  // namespace tset
