#pragma once

#include <cstddef>
#include <vector>

#include "tset/error.hpp"
#include "tset/relation.hpp"
#include "tset/subset.hpp"

namespace tset {

/// An explicit finite topology: a family of open Subsets containing ∅ and
/// the carrier, closed under pairwise union and intersection. Opens are kept
/// sorted by bit-vector value and deduplicated.
class Topology {
 public:
  std::size_t carrier_size() const noexcept { return carrier_size_; }
  const std::vector<Subset>& opens() const noexcept { return opens_; }
  bool is_open(Subset subset) const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  friend Topology build_topology(std::size_t, std::vector<Subset>);
  friend Topology topology_unchecked(std::size_t, std::vector<Subset>);

  std::size_t carrier_size_ = 0;
  std::vector<Subset> opens_;
};

/// Raised by build_topology for union/intersection closure failures; carries
/// the two opens whose union or intersection is missing.
class TopologyAxiomError : public Error {
 public:
  TopologyAxiomError(Errc code, Subset lhs, Subset rhs, const std::string& what)
      : Error(code, what), lhs_(lhs), rhs_(rhs) {}
  Subset lhs() const noexcept { return lhs_; }
  Subset rhs() const noexcept { return rhs_; }

 private:
  Subset lhs_;
  Subset rhs_;
};

/// Validates a user-supplied family without completing it.
/// Errors: carrier_mismatch, missing_empty_or_full, not_closed_under_union,
/// not_closed_under_intersection.
Topology build_topology(std::size_t carrier_size, std::vector<Subset> family);

/// All subsets of the carrier.
Topology discrete_topology(std::size_t carrier_size);

/// Opens are exactly the upper sets of the relation.
Topology alexandroff(const FiniteTSet& tset);

/// Opens are the upper sets U such that every directed D with a supremum in
/// U already meets U (sup(D) ∩ U ≠ ∅ implies D ∩ U ≠ ∅).
Topology scott_star(const FiniteTSet& tset);

/// Carrier size up to which is_compact searches subfamilies exhaustively.
inline constexpr std::size_t kCompactSearchLimit = 4;

/// Every subfamily of τ covering A has a finite subcover.
///
/// On a finite carrier every family is finite, so this is constantly true.
/// Up to kCompactSearchLimit elements it is still decided by enumerating
/// every covering subfamily and extracting a subcover of at most |A| opens;
/// beyond that it returns true without searching.
bool is_compact(Subset subset, const Topology& topology);

/// Greatest subset S of O with S ⊆ ↑(S), obtained by repeatedly deleting
/// members that lack a predecessor among the survivors.
Subset greatest_self_supported(const FiniteTSet& tset, Subset open);

/// For every open O ⊇ A there is a finitary F with A ⊆ F ⊆ O. Decided as
/// A ⊆ greatest_self_supported(O) for each such O.
bool is_strongly_compact(Subset subset, const FiniteTSet& tset,
                         const Topology& topology);

/// X and every ub({x,y}) are strongly compact.
bool is_strongly_compactly_complete(const FiniteTSet& tset,
                                    const Topology& topology);

/// X and every ub({x,y}) are compact.
bool is_compactly_complete(const FiniteTSet& tset, const Topology& topology);

/// True iff every open is an upper set of the relation.
bool opens_are_upper_sets(const FiniteTSet& tset, const Topology& topology);

}  // namespace tset
