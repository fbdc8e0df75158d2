#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tset/subset.hpp"

namespace tset {

using LabelPair = std::pair<std::string, std::string>;

/// A finite carrier with a transitive binary relation.
///
/// Element i relates to element j (i ≼ j) iff bit j of successors(i) is set.
/// Nothing beyond transitivity is assumed: the relation may be irreflexive,
/// non-symmetric and non-antisymmetric. Instances are immutable.
class FiniteTSet {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool related(std::size_t from, std::size_t to) const noexcept {
    return ((succ_[from] >> to) & 1U) != 0;
  }
  /// ↑x = {y : x ≼ y}. Contains x only when x ≼ x.
  Subset successors(std::size_t index) const { return {size(), succ_.at(index)}; }
  /// ↓x = {y : y ≼ x}.
  Subset predecessors(std::size_t index) const { return {size(), pred_.at(index)}; }
  Subset carrier() const { return Subset::full(size()); }

  /// All related pairs as indices, sorted by (source, target).
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// Same structure with the relation flipped; transitivity is preserved.
  FiniteTSet reversed() const;

  /// Row-major matrix code: bit (i * n + j) is set iff i ≼ j. Requires n ≤ 8.
  std::uint64_t matrix_code() const;
  /// Inverse of matrix_code() with labels e0..e(n-1). Validates transitivity.
  static FiniteTSet from_matrix_code(std::size_t n, std::uint64_t code);

  friend bool operator==(const FiniteTSet&, const FiniteTSet&) = default;

 private:
  friend FiniteTSet make_validated(std::vector<std::string> labels,
                                   std::vector<Subset::mask_type> succ);

  std::vector<std::string> labels_;
  std::vector<Subset::mask_type> succ_;
  std::vector<Subset::mask_type> pred_;
};

/// Builds a t-set holding exactly `pairs`. Rejects non-transitive input with
/// NotTransitiveError; use transitive_closure() to close instead.
FiniteTSet build(const std::vector<std::string>& labels,
                 const std::vector<LabelPair>& pairs);

/// Builds the t-set on `labels` whose relation is the smallest transitive
/// superset of `pairs`.
FiniteTSet transitive_closure(const std::vector<std::string>& labels,
                              const std::vector<LabelPair>& pairs);

/// Index-based counterpart of build(); labels default to e0..e(n-1).
FiniteTSet build_indexed(std::size_t n,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// "e0", "e1", ...; the labels used for enumerated structures.
std::vector<std::string> default_labels(std::size_t n);

struct ClassificationReport {
  bool reflexive = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool interpolative = false;
  bool abstract_base = false;

  bool poset = false;
  bool preorder = false;
  bool equivalence = false;
  bool continuous_information_system = false;

  friend bool operator==(const ClassificationReport&,
                         const ClassificationReport&) = default;
};

/// Exact truth value of each relation-class axiom.
///
/// The abstract-base axiom is checked over nonempty finite sets of
/// predecessors only; it suffices to test the full predecessor set of each
/// element, since an interpolant for the largest such set serves every
/// smaller one.
ClassificationReport classify(const FiniteTSet& tset);

bool is_reflexive(const FiniteTSet& tset);
bool is_symmetric(const FiniteTSet& tset);
bool is_antisymmetric(const FiniteTSet& tset);
bool is_interpolative(const FiniteTSet& tset);
bool is_abstract_base(const FiniteTSet& tset);

}  // namespace tset
