#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tset/relation.hpp"
#include "tset/subset.hpp"
#include "tset/topology.hpp"

namespace tset {

// ---------------------------------------------------------------------------
// Enumeration

/// Largest carrier the sweep harness accepts, and the default ceiling when
/// SweepOptions::allow_large is off.
inline constexpr std::size_t kMaxSweepSize = 5;
inline constexpr std::size_t kDefaultSweepSize = 4;

enum class EnumerationStrategy {
  automatic,  // filter for n <= 4, prune for n = 5
  filter,     // test all 2^(n*n) matrices
  prune,      // depth-first, rejecting partial matrices as soon as a triple fails
};

/// Row-major matrix codes (see FiniteTSet::matrix_code) of every transitive
/// relation on n labeled elements, ascending. The first code is always 0.
std::vector<std::uint64_t> enumerate_codes(
    std::size_t n, EnumerationStrategy strategy = EnumerationStrategy::automatic);

/// Every t-set on {e0, ..., e(n-1)} in ascending matrix-code order.
std::vector<FiniteTSet> enumerate_tsets(std::size_t n);

// ---------------------------------------------------------------------------
// Built-in topologies

enum class TopologyKind { alexandroff, scott_star };

std::string_view topology_name(TopologyKind kind);
std::optional<TopologyKind> parse_topology_kind(std::string_view name);
Topology make_topology(TopologyKind kind, const FiniteTSet& tset);

// ---------------------------------------------------------------------------
// Theorem registry

enum class TheoremKind {
  equivalence,  // violation: clauses not all equal
  implication,  // two clauses (hypothesis, conclusion); violation: (true, false)
};

struct TheoremInfo {
  std::string id;
  std::string summary;
  TheoremKind kind = TheoremKind::equivalence;
  std::size_t clause_count = 0;
  /// "none", "domain" or "opens_are_upper_sets".
  std::string precondition = "none";
  bool topology_dependent = false;
  /// Deliberately false claim kept to prove that sweeps can fail.
  bool self_test = false;
  std::vector<std::string> decision_flags;
  std::vector<std::string> unverifiable_clauses;
  /// For self-test claims: the `check --pred` name that re-refutes a witness.
  std::string refuting_predicate;
};

const std::vector<TheoremInfo>& theorem_registry();
/// Throws Errc::unknown_theorem.
const TheoremInfo& find_theorem(std::string_view id);

/// Clause truth values for one structure. When the theorem's precondition
/// fails, `applicable` is false and `values` is empty. `witness` holds the
/// subsets (or subset family) behind the first failed universal clause.
struct ClauseVector {
  bool applicable = true;
  std::vector<bool> values;
  std::vector<Subset> witness;

  bool is_violation(TheoremKind kind) const;
};

/// Evaluates every clause of `theorem_id` on `tset`. `topology` must be given
/// exactly when the theorem is topology-dependent (MissingTopology /
/// UnexpectedTopology otherwise). Carriers above kMaxSweepSize raise
/// SizeOutOfRange: several clauses quantify over triples of subsets.
ClauseVector clause_vector(const FiniteTSet& tset, std::string_view theorem_id,
                           const Topology* topology = nullptr);

// ---------------------------------------------------------------------------
// Sweeps

struct Violation {
  std::size_t index = 0;  // position in the enumeration
  FiniteTSet tset;
  std::vector<bool> clauses;
  std::optional<TopologyKind> topology;
  std::vector<Subset> witness;
};

struct SweepOptions {
  /// Empty means the defaults (alexandroff, scott_star) for topology-dependent
  /// theorems; must stay empty for the others.
  std::vector<TopologyKind> topologies;
  unsigned jobs = 1;
  /// Permit n = 5.
  bool allow_large = false;
};

struct SweepReport {
  std::string theorem;
  std::size_t n = 0;
  std::size_t structures_checked = 0;
  /// Evaluated instances whose precondition held; one per (t-set, topology)
  /// pair for topology-dependent theorems.
  std::size_t structures_passing_precondition = 0;
  std::vector<TopologyKind> topologies;
  std::vector<Violation> violations;
  std::vector<std::string> decision_flags;
  std::vector<std::string> unverifiable_clauses;
};

/// Checks `theorem_id` on every t-set of size n. Deterministic: the report
/// does not depend on options.jobs.
/// Errors: SizeOutOfRange, UnknownTheorem, UnexpectedTopology.
SweepReport sweep(std::string_view theorem_id, std::size_t n,
                  const SweepOptions& options = {});

/// Report as JSON (keys: theorem, n, checked, precondition_passing,
/// topologies, violations, decision_flags, unverifiable_clauses).
std::string to_json(const SweepReport& report);

// ---------------------------------------------------------------------------
// Fixtures

/// "3.2", "3.3" or "5.1". "5.2" raises InfiniteCarrierUnsupported; anything
/// else UnknownExample.
FiniteTSet builtin_example(std::string_view id);

/// Reflexive total order on n elements labeled c0..c(n-1); the finite
/// stand-in for the natural-number chain.
FiniteTSet reflexive_chain(std::size_t n);

}  // namespace tset
