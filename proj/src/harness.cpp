#include "tset/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include <json.hpp>

#include "tset/bounds.hpp"
#include "tset/completeness.hpp"
#include "tset/error.hpp"
#include "tset/serialize.hpp"

namespace tset {
namespace {

using mask_type = Subset::mask_type;

// ---------------------------------------------------------------------------
// Enumeration

bool code_is_transitive(std::size_t n, std::uint64_t code) {
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t rows[kMaxSweepSize] = {};
  for (std::size_t i = 0; i < n; ++i) rows[i] = (code >> (i * n)) & row_mask;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (((rows[i] >> j) & 1U) && (rows[j] & ~rows[i]) != 0) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> filter_codes(std::size_t n) {
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < limit; ++code) {
    if (code_is_transitive(n, code)) out.push_back(code);
  }
  return out;
}

// Assigns matrix positions from the most significant (n*n - 1) down to 0,
// trying 0 before 1, so complete matrices come out in ascending code order.
// A triple is checked as soon as its lowest position is assigned.
class PruningEnumerator {
 public:
  explicit PruningEnumerator(std::size_t n) : n_(n) {}

  std::vector<std::uint64_t> run() {
    out_.clear();
    code_ = 0;
    descend(static_cast<int>(n_ * n_) - 1);
    return std::move(out_);
  }

 private:
  std::size_t pos(std::size_t i, std::size_t j) const { return i * n_ + j; }
  bool bit(std::size_t i, std::size_t j) const { return (code_ >> pos(i, j)) & 1U; }

  bool consistent(std::size_t p) const {
    const std::size_t i = p / n_;
    const std::size_t j = p % n_;
    auto assigned = [&](std::size_t a, std::size_t b) { return pos(a, b) >= p; };
    for (std::size_t k = 0; k < n_; ++k) {
      if (bit(i, j)) {
        if (assigned(j, k) && assigned(i, k) && bit(j, k) && !bit(i, k)) return false;
        if (assigned(k, i) && assigned(k, j) && bit(k, i) && !bit(k, j)) return false;
      } else {
        if (assigned(i, k) && assigned(k, j) && bit(i, k) && bit(k, j)) return false;
      }
    }
    return true;
  }

  void descend(int p) {
    if (p < 0) {
      out_.push_back(code_);
      return;
    }
    const auto position = static_cast<std::size_t>(p);
    for (int value = 0; value < 2; ++value) {
      if (value) code_ |= std::uint64_t{1} << position;
      if (consistent(position)) descend(p - 1);
      code_ &= ~(std::uint64_t{1} << position);
    }
  }

  std::size_t n_;
  std::uint64_t code_ = 0;
  std::vector<std::uint64_t> out_;
};

void require_sweep_size(std::size_t n, std::size_t ceiling) {
  if (n < 1 || n > ceiling) {
    throw Error(Errc::size_out_of_range,
                "carrier size " + std::to_string(n) + " outside 1.." +
                    std::to_string(ceiling));
  }
}

// ---------------------------------------------------------------------------
// Clause evaluation helpers

struct Clause {
  bool value = true;
  std::vector<Subset> witness;
};

std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  const mask_type limit = mask_type{1} << n;
  for (mask_type bits = 0; bits < limit; ++bits) out.emplace_back(n, bits);
  return out;
}

template <typename Pred>
Clause for_all(const std::vector<Subset>& domain, Pred pred) {
  for (const Subset& s : domain) {
    if (!pred(s)) return {false, {s}};
  }
  return {};
}

Clause for_all_pairs(const FiniteTSet& t, const std::function<bool(Subset)>& pred) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = x; y < t.size(); ++y) {
      if (!pred(pair_upper_bounds(t, x, y))) {
        return {false, {Subset::of(t.size(), {x, y})}};
      }
    }
  }
  return {};
}

Clause both(bool head, Clause rest) {
  if (!head) return {false, {}};
  return rest;
}

/// Families of 0..3 members drawn (with repetition) from `members`; `closed`
/// decides whether the combined set still has the property.
Clause for_all_families(const std::vector<Subset>& members, Subset empty_combination,
                        const std::function<Subset(Subset, Subset)>& combine,
                        const std::function<bool(Subset)>& closed) {
  if (!closed(empty_combination)) return {false, {}};
  const std::size_t m = members.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!closed(members[i])) return {false, {members[i]}};
    for (std::size_t j = i; j < m; ++j) {
      const Subset ij = combine(members[i], members[j]);
      if (!closed(ij)) return {false, {members[i], members[j]}};
      for (std::size_t k = j; k < m; ++k) {
        if (!closed(combine(ij, members[k]))) {
          return {false, {members[i], members[j], members[k]}};
        }
      }
    }
  }
  return {};
}

/// Implication over a space of instances: (true, false) with a witness if some
/// instance satisfies the hypothesis but not the conclusion, otherwise
/// (hypothesis ever satisfied, true).
struct InstanceImplication {
  bool hypothesis_seen = false;
  Clause conclusion;
};

ClauseVector from_equivalence(std::vector<Clause> clauses) {
  ClauseVector out;
  for (Clause& c : clauses) {
    out.values.push_back(c.value);
    if (!c.value && out.witness.empty()) out.witness = std::move(c.witness);
  }
  return out;
}

ClauseVector from_implication(bool hypothesis, Clause conclusion) {
  ClauseVector out;
  out.values = {hypothesis, conclusion.value};
  if (hypothesis && !conclusion.value) out.witness = std::move(conclusion.witness);
  return out;
}

ClauseVector from_instances(const InstanceImplication& r) {
  if (!r.conclusion.value) return from_implication(true, r.conclusion);
  return from_implication(r.hypothesis_seen, Clause{});
}

ClauseVector not_applicable() {
  ClauseVector out;
  out.applicable = false;
  return out;
}

// ---------------------------------------------------------------------------
// Per-theorem clause evaluators

struct Context {
  const FiniteTSet& t;
  const Topology* tau;
  std::vector<Subset> subsets;
  Subset carrier;

  Context(const FiniteTSet& tset, const Topology* topology)
      : t(tset), tau(topology), subsets(all_subsets(tset.size())), carrier(tset.carrier()) {}

  std::vector<Subset> finitary_upper_sets() const {
    std::vector<Subset> out;
    for (Subset s : subsets) {
      if (is_finitary(t, s) && is_upper_set(t, s)) out.push_back(s);
    }
    return out;
  }

  std::vector<bool> table(const std::function<bool(Subset)>& pred) const {
    std::vector<bool> out(subsets.size());
    for (Subset s : subsets) out[s.bits()] = pred(s);
    return out;
  }
};

Clause bounded_sups_exist(const Context& c) {
  return for_all(c.subsets, [&](Subset a) {
    return ub(c.t, a).is_empty() || !sup(c.t, a).is_empty();
  });
}

Clause finite_ub_empty_or_cone(const Context& c) {
  return for_all(c.subsets, [&](Subset a) {
    const Subset b = ub(c.t, a);
    return b.is_empty() || is_upper_cone(c.t, b);
  });
}

Clause nonempty_infs_exist(const Context& c) {
  return for_all(c.subsets, [&](Subset a) {
    return a.is_empty() || !inf(c.t, a).is_empty();
  });
}

Clause least_and_bounded_pair_sups(const Context& c) {
  return both(!le(c.t, c.carrier).is_empty(), for_all_pairs(c.t, [&](Subset b) {
                return b.is_empty() || !le(c.t, b).is_empty();
              }));
}

ClauseVector eval_t31(const Context& c) {
  return from_equivalence({{is_bounded_complete(c.t), {}},
                           least_and_bounded_pair_sups(c),
                           bounded_sups_exist(c),
                           finite_ub_empty_or_cone(c)});
}

ClauseVector eval_l31(const Context& c) {
  return from_equivalence({bounded_sups_exist(c), nonempty_infs_exist(c)});
}

ClauseVector eval_t32(const Context& c) {
  if (!is_domain(c.t)) return not_applicable();
  // Every subset of a finite carrier is finite, so the "finite bounded" and
  // "bounded" clauses quantify over the same family.
  return from_equivalence({{is_bounded_complete(c.t), {}},
                           least_and_bounded_pair_sups(c),
                           bounded_sups_exist(c),
                           finite_ub_empty_or_cone(c),
                           bounded_sups_exist(c),
                           nonempty_infs_exist(c)});
}

ClauseVector eval_t41(const Context& c) {
  return from_equivalence(
      {{is_finitely_complete(c.t), {}},
       both(!le(c.t, c.carrier).is_empty(),
            for_all_pairs(c.t, [&](Subset b) { return !le(c.t, b).is_empty(); })),
       for_all(c.subsets, [&](Subset a) { return !sup(c.t, a).is_empty(); }),
       for_all(c.subsets, [&](Subset a) { return is_upper_cone(c.t, ub(c.t, a)); })});
}

ClauseVector eval_t42(const Context& c) {
  constexpr bool kEverySubsetFinite = true;
  return from_equivalence(
      {{is_complete_domain(c.t), {}},
       {is_bounded_complete_domain(c.t) && !la(c.t, c.carrier).is_empty(), {}},
       for_all(c.subsets, [&](Subset a) { return !inf(c.t, a).is_empty(); }),
       for_all(c.subsets, [&](Subset a) { return !sup(c.t, a).is_empty(); }),
       for_all(c.subsets, [&](Subset a) {
         const bool in_scope = kEverySubsetFinite || is_directed(c.t, a);
         return !in_scope || !sup(c.t, a).is_empty();
       })});
}

ClauseVector eval_t51(const Context& c) {
  auto finitary = [&](Subset s) { return is_finitary(c.t, s); };
  std::vector<Subset> finitary_sets;
  for (Subset s : c.subsets) {
    if (finitary(s)) finitary_sets.push_back(s);
  }
  const auto upper = c.finitary_upper_sets();
  Clause pairwise_upper;
  for (std::size_t i = 0; i < upper.size() && pairwise_upper.value; ++i) {
    for (std::size_t j = i + 1; j < upper.size(); ++j) {
      if (!finitary(upper[i] & upper[j])) {
        pairwise_upper = {false, {upper[i], upper[j]}};
        break;
      }
    }
  }
  return from_equivalence(
      {{is_finitarily_complete(c.t), {}},
       both(finitary(c.carrier), pairwise_upper),
       for_all_families(finitary_sets, c.carrier, std::bit_and<Subset>(), finitary),
       for_all(c.subsets, [&](Subset b) { return finitary(ub(c.t, b)); })});
}

ClauseVector eval_p51(const Context& c) {
  auto finitary = [&](Subset s) { return is_finitary(c.t, s); };
  std::vector<Subset> finitary_sets;
  for (Subset s : c.subsets) {
    if (finitary(s)) finitary_sets.push_back(s);
  }
  InstanceImplication r;
  r.hypothesis_seen = true;  // the empty family always qualifies
  r.conclusion = for_all_families(finitary_sets, Subset::empty(c.t.size()),
                                  std::bit_or<Subset>(), finitary);
  return from_instances(r);
}

ClauseVector eval_r31(const Context& c) {
  return from_implication(is_abstract_base(c.t), {is_interpolative(c.t), {}});
}

ClauseVector eval_r32(const Context& c) {
  return from_implication(is_reflexive(c.t), {is_abstract_base(c.t), {}});
}

ClauseVector eval_r4x(const Context& c) {
  return from_implication(is_finitely_complete(c.t), {is_bounded_complete(c.t), {}});
}

ClauseVector eval_t52a(const Context& c) {
  constexpr bool kFiniteCarrier = true;
  return from_implication(kFiniteCarrier && is_reflexive(c.t),
                          {is_finitarily_complete(c.t), {}});
}

ClauseVector eval_t52b(const Context& c) {
  return from_implication(is_bounded_complete(c.t) && is_reflexive(c.t),
                          {is_finitarily_complete(c.t), {}});
}

ClauseVector eval_t61(const Context& c) {
  if (!opens_are_upper_sets(c.t, *c.tau)) return not_applicable();
  InstanceImplication r;
  for (Subset a : c.subsets) {
    if (!is_strongly_compact(a, c.t, *c.tau)) continue;
    r.hypothesis_seen = true;
    if (!is_compact(a, *c.tau)) {
      r.conclusion = {false, {a}};
      break;
    }
  }
  return from_instances(r);
}

ClauseVector eval_t63(const Context& c) {
  const auto sc = c.table([&](Subset s) { return is_strongly_compact(s, c.t, *c.tau); });
  std::vector<Subset> members;
  for (Subset s : c.subsets) {
    if (sc[s.bits()]) members.push_back(s);
  }
  InstanceImplication r;
  r.hypothesis_seen = true;  // the empty family
  r.conclusion = for_all_families(members, Subset::empty(c.t.size()),
                                  std::bit_or<Subset>(),
                                  [&](Subset s) { return static_cast<bool>(sc[s.bits()]); });
  return from_instances(r);
}

// X finitary and the intersection of any two finitary upper sets satisfies
// `pred` (memoised per subset).
Clause finitary_upper_intersections(const Context& c,
                                    const std::function<bool(Subset)>& pred) {
  if (!is_finitary(c.t, c.carrier)) return {false, {c.carrier}};
  const auto good = c.table(pred);
  const auto upper = c.finitary_upper_sets();
  for (std::size_t i = 0; i < upper.size(); ++i) {
    for (std::size_t j = i; j < upper.size(); ++j) {
      if (!good[(upper[i] & upper[j]).bits()]) return {false, {upper[i], upper[j]}};
    }
  }
  return {};
}

ClauseVector eval_t64a(const Context& c) {
  auto sc = [&](Subset s) { return is_strongly_compact(s, c.t, *c.tau); };
  return from_implication(is_strongly_compactly_complete(c.t, *c.tau),
                          finitary_upper_intersections(c, sc));
}

ClauseVector eval_t64b(const Context& c) {
  auto sc = [&](Subset s) { return is_strongly_compact(s, c.t, *c.tau); };
  const bool hypothesis =
      is_reflexive(c.t) && finitary_upper_intersections(c, sc).value;
  return from_implication(hypothesis,
                          {is_strongly_compactly_complete(c.t, *c.tau), {}});
}

ClauseVector eval_t65b(const Context& c) {
  auto compact = [&](Subset s) { return is_compact(s, *c.tau); };
  const bool hypothesis = is_reflexive(c.t) && opens_are_upper_sets(c.t, *c.tau) &&
                          finitary_upper_intersections(c, compact).value;
  return from_implication(hypothesis, {is_compactly_complete(c.t, *c.tau), {}});
}

ClauseVector eval_false_all_bc(const Context& c) {
  return from_implication(true, {is_bounded_complete(c.t), {c.carrier}});
}

ClauseVector eval_false_all_domain(const Context& c) {
  Clause conclusion = for_all(c.subsets, [&](Subset d) {
    return !is_directed(c.t, d) || !sup(c.t, d).is_empty();
  });
  return from_implication(true, conclusion);
}

ClauseVector eval_false_finitary_is_cone(const Context& c) {
  InstanceImplication r;
  for (Subset a : c.subsets) {
    if (!is_finitary(c.t, a)) continue;
    r.hypothesis_seen = true;
    if (!is_upper_cone(c.t, a)) {
      r.conclusion = {false, {a}};
      break;
    }
  }
  return from_instances(r);
}

using Evaluator = ClauseVector (*)(const Context&);

struct Entry {
  TheoremInfo info;
  Evaluator evaluate;
};

TheoremInfo equivalence(std::string id, std::string summary, std::size_t clauses,
                        std::vector<std::string> flags, std::string precondition = "none") {
  TheoremInfo info;
  info.id = std::move(id);
  info.summary = std::move(summary);
  info.kind = TheoremKind::equivalence;
  info.clause_count = clauses;
  info.precondition = std::move(precondition);
  info.decision_flags = std::move(flags);
  return info;
}

TheoremInfo implication(std::string id, std::string summary,
                        std::vector<std::string> flags, bool topology_dependent = false,
                        std::string precondition = "none") {
  TheoremInfo info;
  info.id = std::move(id);
  info.summary = std::move(summary);
  info.kind = TheoremKind::implication;
  info.clause_count = 2;
  info.precondition = std::move(precondition);
  info.topology_dependent = topology_dependent;
  info.decision_flags = std::move(flags);
  return info;
}

TheoremInfo self_test(std::string id, std::string summary, std::string refuting_predicate,
                      std::vector<std::string> flags = {}) {
  TheoremInfo info = implication(std::move(id), std::move(summary), std::move(flags));
  info.self_test = true;
  info.refuting_predicate = std::move(refuting_predicate);
  return info;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    const std::string diag = "pair_quantifier_includes_diagonal";
    const std::string domain = "domain_as_directed_completeness";
    const std::string ab = "abstract_base_nonempty_subsets";
    const std::string compact_const = "compactness_constant_on_finite_carriers";

    std::vector<Entry> t;
    t.push_back({equivalence("T3.1", "bounded completeness characterisations", 4, {diag}),
                 eval_t31});
    t.push_back({equivalence("L3.1", "bounded sups exist iff nonempty infs exist", 2, {}),
                 eval_l31});
    t.push_back({equivalence("T3.2", "bounded completeness characterisations on domains",
                             6, {diag, domain}, "domain"),
                 eval_t32});
    t.push_back({equivalence("T4.1", "finite completeness characterisations", 4, {diag}),
                 eval_t41});
    t.push_back({equivalence("T4.2", "complete domain characterisations", 5, {diag, domain}),
                 eval_t42});
    t.push_back({implication("P5.1", "finite unions of finitary sets are finitary",
                             {"duplicate_union_theorem_merged"}),
                 eval_p51});
    t.push_back({equivalence("T5.1", "finitary completeness characterisations", 4,
                             {diag, "intersection_step_read_as_induction"}),
                 eval_t51});
    t.push_back({implication("T5.2a", "finite preorders are finitarily complete", {diag}),
                 eval_t52a});
    t.push_back({implication("T5.2b",
                             "bounded complete preorders are finitarily complete", {diag}),
                 eval_t52b});
    t.push_back({implication("R3.1", "abstract bases are continuous information systems",
                             {ab}),
                 eval_r31});
    t.push_back({implication("R3.2", "preorders are abstract bases", {ab}), eval_r32});
    t.push_back({implication("R4.x", "finitely complete implies bounded complete", {diag}),
                 eval_r4x});
    t.push_back({implication("T6.1", "strongly compact sets are compact", {compact_const},
                             true, "opens_are_upper_sets"),
                 eval_t61});
    t.push_back({implication("T6.3", "finite unions of strongly compact sets are "
                                     "strongly compact", {}, true),
                 eval_t63});
    t.push_back({implication("T6.4A",
                             "strongly compactly complete implies finitary carrier and "
                             "strongly compact finitary upper intersections",
                             {diag}, true),
                 eval_t64a});
    t.push_back({implication("T6.4B",
                             "reflexive with finitary carrier and strongly compact finitary "
                             "upper intersections implies strongly compactly complete",
                             {diag}, true),
                 eval_t64b});
    {
      TheoremInfo info = implication(
          "T6.5B",
          "reflexive with upper opens, finitary carrier and compact finitary upper "
          "intersections implies compactly complete",
          {diag, compact_const, "compactly_complete_clause_renumbering"}, true);
      info.unverifiable_clauses = {"T6.5A"};
      t.push_back({std::move(info), eval_t65b});
    }
    t.push_back({self_test("FALSE_CLAIM_ALL_BC", "every t-set is bounded complete",
                           "bounded-complete", {diag}),
                 eval_false_all_bc});
    t.push_back({self_test("FALSE_CLAIM_ALL_DOMAIN", "every t-set is a domain", "domain",
                           {domain}),
                 eval_false_all_domain});
    t.push_back({self_test("FALSE_CLAIM_FINITARY_IS_CONE",
                           "every finitary subset is an upper cone", "upper-cone"),
                 eval_false_finitary_is_cone});
    return t;
  }();
  return table;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw Error(Errc::unknown_theorem, "unknown theorem id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Sweep workers

struct Partial {
  std::size_t passing = 0;
  std::vector<Violation> violations;
};

Partial sweep_range(const Entry& entry, std::size_t n,
                    const std::vector<std::uint64_t>& codes, std::size_t begin,
                    std::size_t end, const std::vector<TopologyKind>& topologies) {
  Partial out;
  for (std::size_t index = begin; index < end; ++index) {
    const FiniteTSet t = FiniteTSet::from_matrix_code(n, codes[index]);
    auto record = [&](const ClauseVector& cv, std::optional<TopologyKind> kind) {
      if (!cv.applicable) return;
      ++out.passing;
      if (cv.is_violation(entry.info.kind)) {
        out.violations.push_back({index, t, cv.values, kind, cv.witness});
      }
    };
    if (topologies.empty()) {
      record(entry.evaluate(Context(t, nullptr)), std::nullopt);
    } else {
      for (TopologyKind kind : topologies) {
        const Topology tau = make_topology(kind, t);
        record(entry.evaluate(Context(t, &tau)), kind);
      }
    }
  }
  return out;
}

nlohmann::ordered_json subset_labels(const FiniteTSet& t, Subset s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t i : s.members()) out.push_back(t.label(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> enumerate_codes(std::size_t n, EnumerationStrategy strategy) {
  require_sweep_size(n, kMaxSweepSize);
  if (strategy == EnumerationStrategy::automatic) {
    strategy = n <= kDefaultSweepSize ? EnumerationStrategy::filter
                                      : EnumerationStrategy::prune;
  }
  if (strategy == EnumerationStrategy::filter) return filter_codes(n);
  return PruningEnumerator(n).run();
}

std::vector<FiniteTSet> enumerate_tsets(std::size_t n) {
  std::vector<FiniteTSet> out;
  for (std::uint64_t code : enumerate_codes(n)) {
    out.push_back(FiniteTSet::from_matrix_code(n, code));
  }
  return out;
}

std::string_view topology_name(TopologyKind kind) {
  return kind == TopologyKind::alexandroff ? "alexandroff" : "scott-star";
}

std::optional<TopologyKind> parse_topology_kind(std::string_view name) {
  if (name == "alexandroff") return TopologyKind::alexandroff;
  if (name == "scott-star") return TopologyKind::scott_star;
  return std::nullopt;
}

Topology make_topology(TopologyKind kind, const FiniteTSet& tset) {
  return kind == TopologyKind::alexandroff ? alexandroff(tset) : scott_star(tset);
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& find_theorem(std::string_view id) { return find_entry(id).info; }

bool ClauseVector::is_violation(TheoremKind kind) const {
  if (!applicable || values.empty()) return false;
  if (kind == TheoremKind::implication) return values[0] && !values[1];
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) !=
         values.end();
}

ClauseVector clause_vector(const FiniteTSet& tset, std::string_view theorem_id,
                           const Topology* topology) {
  const Entry& entry = find_entry(theorem_id);
  require_sweep_size(tset.size(), kMaxSweepSize);
  if (entry.info.topology_dependent && topology == nullptr) {
    throw Error(Errc::missing_topology, entry.info.id + " needs a topology");
  }
  if (!entry.info.topology_dependent && topology != nullptr) {
    throw Error(Errc::unexpected_topology, entry.info.id + " takes no topology");
  }
  if (topology != nullptr) require_same_carrier(tset.size(), topology->carrier_size());
  return entry.evaluate(Context(tset, topology));
}

SweepReport sweep(std::string_view theorem_id, std::size_t n, const SweepOptions& options) {
  const Entry& entry = find_entry(theorem_id);
  require_sweep_size(n, options.allow_large ? kMaxSweepSize : kDefaultSweepSize);

  std::vector<TopologyKind> topologies = options.topologies;
  if (entry.info.topology_dependent) {
    if (topologies.empty()) topologies = {TopologyKind::alexandroff, TopologyKind::scott_star};
  } else if (!topologies.empty()) {
    throw Error(Errc::unexpected_topology, entry.info.id + " takes no topology");
  }

  const std::vector<std::uint64_t> codes = enumerate_codes(n);
  const std::size_t jobs =
      std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(codes.size(), 1));

  std::vector<Partial> partials(jobs);
  auto bounds_of = [&](std::size_t w) {
    return std::pair{codes.size() * w / jobs, codes.size() * (w + 1) / jobs};
  };
  if (jobs == 1) {
    partials[0] = sweep_range(entry, n, codes, 0, codes.size(), topologies);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        auto [begin, end] = bounds_of(w);
        partials[w] = sweep_range(entry, n, codes, begin, end, topologies);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  SweepReport report;
  report.theorem = entry.info.id;
  report.n = n;
  report.structures_checked = codes.size();
  report.topologies = topologies;
  for (Partial& p : partials) {
    report.structures_passing_precondition += p.passing;
    std::move(p.violations.begin(), p.violations.end(),
              std::back_inserter(report.violations));
  }
  report.decision_flags = entry.info.decision_flags;
  if (std::find(topologies.begin(), topologies.end(), TopologyKind::scott_star) !=
      topologies.end()) {
    report.decision_flags.push_back("scott_star_construction");
  }
  report.unverifiable_clauses = entry.info.unverifiable_clauses;
  return report;
}

std::string to_json(const SweepReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["theorem"] = report.theorem;
  doc["n"] = report.n;
  doc["checked"] = report.structures_checked;
  doc["precondition_passing"] = report.structures_passing_precondition;
  ordered_json topologies = ordered_json::array();
  for (TopologyKind kind : report.topologies) topologies.push_back(topology_name(kind));
  doc["topologies"] = topologies;

  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json entry;
    entry["index"] = v.index;
    entry["tset"] = ordered_json::parse(to_json(v.tset));
    entry["clauses"] = v.clauses;
    entry["topology"] = v.topology ? ordered_json(topology_name(*v.topology)) : ordered_json();
    ordered_json witness = ordered_json::array();
    for (Subset s : v.witness) witness.push_back(subset_labels(v.tset, s));
    entry["witness"] = witness;
    violations.push_back(entry);
  }
  doc["violations"] = violations;
  doc["decision_flags"] = report.decision_flags;
  doc["unverifiable_clauses"] = report.unverifiable_clauses;
  return doc.dump(2);
}

FiniteTSet builtin_example(std::string_view id) {
  if (id == "3.2") {
    return build({"a", "b", "x"}, {{"a", "a"}, {"b", "b"}, {"a", "x"}, {"b", "x"}});
  }
  if (id == "3.3") return build({"a", "b", "c", "d", "e"}, {{"a", "a"}});
  if (id == "5.1") {
    return build({"a", "b", "c", "d"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}});
  }
  if (id == "5.2") {
    throw Error(Errc::infinite_carrier_unsupported,
                "infinite carrier unsupported: example 5.2 ranges over the natural "
                "numbers; use reflexive_chain(n) as a finite approximation");
  }
  throw Error(Errc::unknown_example, "unknown example id '" + std::string(id) + "'");
}

FiniteTSet reflexive_chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<LabelPair> pairs;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(labels[i], labels[j]);
  }
  return build(labels, pairs);
}

}  // namespace tset
