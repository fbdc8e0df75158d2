#include "tset/topology.hpp"

#include <algorithm>
#include <string>

#include "tset/bounds.hpp"

namespace tset {
namespace {

std::string bits_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.members()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  const Subset::mask_type limit = Subset::mask_type{1} << n;
  out.reserve(limit);
  for (Subset::mask_type bits = 0; bits < limit; ++bits) out.emplace_back(n, bits);
  return out;
}

}  // namespace

Topology topology_unchecked(std::size_t carrier_size, std::vector<Subset> opens) {
  Topology t;
  t.carrier_size_ = carrier_size;
  t.opens_ = std::move(opens);
  return t;
}

bool Topology::is_open(Subset subset) const {
  require_same_carrier(carrier_size_, subset.carrier_size());
  return std::binary_search(opens_.begin(), opens_.end(), subset);
}

Topology build_topology(std::size_t carrier_size, std::vector<Subset> family) {
  for (const Subset& s : family) require_same_carrier(carrier_size, s.carrier_size());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  auto has = [&](Subset s) {
    return std::binary_search(family.begin(), family.end(), s);
  };
  if (!has(Subset::empty(carrier_size)) || !has(Subset::full(carrier_size))) {
    throw Error(Errc::missing_empty_or_full,
                "a topology must contain the empty set and the whole carrier");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Subset a = family[i];
      const Subset b = family[j];
      if (!has(a | b)) {
        throw TopologyAxiomError(Errc::not_closed_under_union, a, b,
                                 "union of opens " + bits_string(a) + " and " +
                                     bits_string(b) + " is not open");
      }
      if (!has(a & b)) {
        throw TopologyAxiomError(Errc::not_closed_under_intersection, a, b,
                                 "intersection of opens " + bits_string(a) +
                                     " and " + bits_string(b) + " is not open");
      }
    }
  }
  return topology_unchecked(carrier_size, std::move(family));
}

Topology discrete_topology(std::size_t carrier_size) {
  return topology_unchecked(carrier_size, all_subsets(carrier_size));
}

Topology alexandroff(const FiniteTSet& tset) {
  std::vector<Subset> opens;
  for (Subset s : all_subsets(tset.size())) {
    if (is_upper_set(tset, s)) opens.push_back(s);
  }
  return topology_unchecked(tset.size(), std::move(opens));
}

Topology scott_star(const FiniteTSet& tset) {
  std::vector<std::pair<Subset, Subset>> directed;  // (D, sup D)
  for (Subset d : all_subsets(tset.size())) {
    if (!is_directed(tset, d)) continue;
    Subset s = sup(tset, d);
    if (!s.is_empty()) directed.emplace_back(d, s);
  }

  std::vector<Subset> opens;
  for (Subset u : all_subsets(tset.size())) {
    if (!is_upper_set(tset, u)) continue;
    bool inaccessible = std::all_of(directed.begin(), directed.end(), [&](const auto& ds) {
      return (ds.second & u).is_empty() || !(ds.first & u).is_empty();
    });
    if (inaccessible) opens.push_back(u);
  }
  return topology_unchecked(tset.size(), std::move(opens));
}

bool is_compact(Subset subset, const Topology& topology) {
  require_same_carrier(topology.carrier_size(), subset.carrier_size());
  if (topology.carrier_size() > kCompactSearchLimit) return true;

  const auto& opens = topology.opens();
  const std::size_t m = opens.size();
  const std::size_t families = std::size_t{1} << m;
  std::vector<Subset::mask_type> cover(families, 0);
  for (std::size_t family = 1; family < families; ++family) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(family));
    cover[family] = cover[family & (family - 1)] | opens[low].bits();
  }

  for (std::size_t family = 0; family < families; ++family) {
    if ((subset.bits() & ~cover[family]) != 0) continue;
    // A covering family: pick one member per point of A.
    std::size_t picked = 0;
    Subset::mask_type covered = 0;
    for (std::size_t point : subset.members()) {
      if ((covered >> point) & 1U) continue;
      for (std::size_t i = 0; i < m; ++i) {
        if (((family >> i) & 1U) && opens[i].contains(point)) {
          covered |= opens[i].bits();
          ++picked;
          break;
        }
      }
    }
    if ((subset.bits() & ~covered) != 0 || picked > subset.count()) return false;
  }
  return true;
}

Subset greatest_self_supported(const FiniteTSet& tset, Subset open) {
  Subset current = open;
  while (true) {
    Subset next = current & up(tset, current);
    if (next == current) return current;
    current = next;
  }
}

bool is_strongly_compact(Subset subset, const FiniteTSet& tset,
                         const Topology& topology) {
  require_same_carrier(tset.size(), subset.carrier_size());
  require_same_carrier(tset.size(), topology.carrier_size());
  for (const Subset& open : topology.opens()) {
    if (!subset.is_subset_of(open)) continue;
    if (!subset.is_subset_of(greatest_self_supported(tset, open))) return false;
  }
  return true;
}

bool is_strongly_compactly_complete(const FiniteTSet& tset, const Topology& topology) {
  if (!is_strongly_compact(tset.carrier(), tset, topology)) return false;
  for (std::size_t x = 0; x < tset.size(); ++x) {
    for (std::size_t y = x; y < tset.size(); ++y) {
      if (!is_strongly_compact(pair_upper_bounds(tset, x, y), tset, topology)) {
        return false;
      }
    }
  }
  return true;
}

bool is_compactly_complete(const FiniteTSet& tset, const Topology& topology) {
  require_same_carrier(tset.size(), topology.carrier_size());
  if (!is_compact(tset.carrier(), topology)) return false;
  for (std::size_t x = 0; x < tset.size(); ++x) {
    for (std::size_t y = x; y < tset.size(); ++y) {
      if (!is_compact(pair_upper_bounds(tset, x, y), topology)) return false;
    }
  }
  return true;
}

bool opens_are_upper_sets(const FiniteTSet& tset, const Topology& topology) {
  require_same_carrier(tset.size(), topology.carrier_size());
  return std::all_of(topology.opens().begin(), topology.opens().end(),
                     [&](Subset o) { return is_upper_set(tset, o); });
}

}  // namespace tset
