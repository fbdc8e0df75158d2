#pragma once

#include <initializer_list>
#include <string>

#include "tset/relation.hpp"
#include "tset/subset.hpp"

namespace tset::fixtures {

inline FiniteTSet e32() {
  return build({"a", "b", "x"}, {{"a", "a"}, {"b", "b"}, {"a", "x"}, {"b", "x"}});
}
inline FiniteTSet e33() { return build({"a", "b", "c", "d", "e"}, {{"a", "a"}}); }
inline FiniteTSet e51() {
  return build({"a", "b", "c", "d"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}});
}
inline FiniteTSet ch3() {
  return build({"a", "b", "c"},
               {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}, {"a", "c"}});
}
inline FiniteTSet empty2() { return build({"a", "b"}, {}); }
inline FiniteTSet reflexive_point() { return build({"a"}, {{"a", "a"}}); }
inline FiniteTSet irreflexive_point() { return build({"a"}, {}); }

/// Subset of `t` named by labels.
inline Subset named(const FiniteTSet& t, std::initializer_list<std::string> labels) {
  Subset s = Subset::empty(t.size());
  for (const auto& l : labels) s = s.with(*t.index_of(l));
  return s;
}

}  // namespace tset::fixtures
