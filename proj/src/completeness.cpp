#include "tset/completeness.hpp"

#include "tset/bounds.hpp"

namespace tset {
namespace {

// Pair quantifiers range over ordered pairs with x == y allowed; ub is
// symmetric in its arguments, so x <= y covers them all.
template <typename Pred>
bool all_pair_bounds(const FiniteTSet& tset, Pred pred) {
  for (std::size_t x = 0; x < tset.size(); ++x) {
    for (std::size_t y = x; y < tset.size(); ++y) {
      if (!pred(pair_upper_bounds(tset, x, y))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_bounded_complete(const FiniteTSet& tset) {
  return is_upper_cone(tset, tset.carrier()) &&
         all_pair_bounds(tset, [&](Subset b) {
           return b.is_empty() || is_upper_cone(tset, b);
         });
}

bool is_domain(const FiniteTSet& tset) {
  const std::size_t n = tset.size();
  const Subset::mask_type limit = Subset::mask_type{1} << n;
  for (Subset::mask_type bits = 1; bits < limit; ++bits) {
    const Subset d(n, bits);
    if (is_directed(tset, d) && sup(tset, d).is_empty()) return false;
  }
  return true;
}

bool is_bounded_complete_domain(const FiniteTSet& tset) {
  return is_bounded_complete(tset) && is_domain(tset);
}

bool is_finitely_complete(const FiniteTSet& tset) {
  return is_upper_cone(tset, tset.carrier()) &&
         all_pair_bounds(tset, [&](Subset b) { return is_upper_cone(tset, b); });
}

bool is_complete_domain(const FiniteTSet& tset) {
  return is_finitely_complete(tset) && is_domain(tset);
}

bool is_finitarily_complete(const FiniteTSet& tset) {
  return is_finitary(tset, tset.carrier()) &&
         all_pair_bounds(tset, [&](Subset b) { return is_finitary(tset, b); });
}

}  // namespace tset
