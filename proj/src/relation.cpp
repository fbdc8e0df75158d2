#include "tset/relation.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "tset/error.hpp"

namespace tset {

using mask_type = Subset::mask_type;

namespace {

void validate_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) {
    throw Error(Errc::empty_carrier, "carrier must contain at least one element");
  }
  if (labels.size() > kMaxCarrier) {
    throw Error(Errc::carrier_too_large,
                "carrier has " + std::to_string(labels.size()) +
                    " elements; at most " + std::to_string(kMaxCarrier) +
                    " are supported");
  }
  std::unordered_map<std::string_view, std::size_t> seen;
  for (const std::string& label : labels) {
    if (label.empty()) {
      throw Error(Errc::malformed_document, "element labels must be non-empty");
    }
    if (!seen.emplace(label, 0).second) {
      throw Error(Errc::duplicate_label, "duplicate element label '" + label + "'");
    }
  }
}

std::vector<mask_type> rows_from_pairs(const std::vector<std::string>& labels,
                                       const std::vector<LabelPair>& pairs) {
  validate_labels(labels);
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

  std::vector<mask_type> succ(labels.size(), 0);
  for (const auto& [from, to] : pairs) {
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end() || t == index.end()) {
      throw Error(Errc::unknown_label, "pair (" + from + "," + to +
                                           ") references an unknown element '" +
                                           (f == index.end() ? from : to) + "'");
    }
    succ[f->second] |= mask_type{1} << t->second;
  }
  return succ;
}

// Warshall on bit rows.
void close_rows(std::vector<mask_type>& succ) {
  for (std::size_t k = 0; k < succ.size(); ++k) {
    for (std::size_t i = 0; i < succ.size(); ++i) {
      if ((succ[i] >> k) & 1U) succ[i] |= succ[k];
    }
  }
}

}  // namespace

FiniteTSet make_validated(std::vector<std::string> labels,
                          std::vector<mask_type> succ) {
  validate_labels(labels);
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!((succ[i] >> j) & 1U)) continue;
      mask_type missing = succ[j] & ~succ[i];
      if (missing != 0) {
        std::size_t k = static_cast<std::size_t>(std::countr_zero(missing));
        throw NotTransitiveError(
            {i, j, k}, "relation is not transitive: witness triple (" + labels[i] +
                           "," + labels[j] + "," + labels[k] + "): (" + labels[i] +
                           "," + labels[j] + ") and (" + labels[j] + "," + labels[k] +
                           ") are present but (" + labels[i] + "," + labels[k] +
                           ") is missing");
      }
    }
  }

  FiniteTSet result;
  result.pred_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((succ[i] >> j) & 1U) result.pred_[j] |= mask_type{1} << i;
    }
  }
  result.labels_ = std::move(labels);
  result.succ_ = std::move(succ);
  return result;
}

std::optional<std::size_t> FiniteTSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteTSet::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : successors(i).members()) out.emplace_back(i, j);
  }
  return out;
}

FiniteTSet FiniteTSet::reversed() const {
  return make_validated(labels_, pred_);
}

std::uint64_t FiniteTSet::matrix_code() const {
  const std::size_t n = size();
  if (n > 8) {
    throw Error(Errc::size_out_of_range, "matrix codes are limited to 8 elements");
  }
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    code |= static_cast<std::uint64_t>(succ_[i]) << (i * n);
  }
  return code;
}

FiniteTSet FiniteTSet::from_matrix_code(std::size_t n, std::uint64_t code) {
  if (n == 0 || n > 8) {
    throw Error(Errc::size_out_of_range, "matrix codes need 1 <= n <= 8");
  }
  if (n < 8 && (code >> (n * n)) != 0) {
    throw Error(Errc::carrier_mismatch, "matrix code has bits beyond n*n");
  }
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::vector<mask_type> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    succ[i] = static_cast<mask_type>((code >> (i * n)) & row_mask);
  }
  return make_validated(default_labels(n), std::move(succ));
}

FiniteTSet build(const std::vector<std::string>& labels,
                 const std::vector<LabelPair>& pairs) {
  return make_validated(labels, rows_from_pairs(labels, pairs));
}

FiniteTSet transitive_closure(const std::vector<std::string>& labels,
                              const std::vector<LabelPair>& pairs) {
  auto succ = rows_from_pairs(labels, pairs);
  close_rows(succ);
  return make_validated(labels, std::move(succ));
}

FiniteTSet build_indexed(std::size_t n,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  auto labels = default_labels(n);
  std::vector<mask_type> succ(n, 0);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw Error(Errc::unknown_label, "pair index outside carrier");
    }
    succ[i] |= mask_type{1} << j;
  }
  return make_validated(std::move(labels), std::move(succ));
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

bool is_reflexive(const FiniteTSet& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.related(i, i)) return false;
  }
  return true;
}

bool is_symmetric(const FiniteTSet& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.successors(i) != t.predecessors(i)) return false;
  }
  return true;
}

bool is_antisymmetric(const FiniteTSet& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    Subset both = t.successors(i) & t.predecessors(i);
    if ((both - Subset::singleton(t.size(), i)).count() != 0) return false;
  }
  return true;
}

bool is_interpolative(const FiniteTSet& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t z : t.successors(x).members()) {
      if ((t.successors(x) & t.predecessors(z)).is_empty()) return false;
    }
  }
  return true;
}

bool is_abstract_base(const FiniteTSet& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    const Subset below = t.predecessors(x);
    if (below.is_empty()) continue;
    bool interpolated = false;
    for (std::size_t z : below.members()) {
      if (below.is_subset_of(t.predecessors(z))) {
        interpolated = true;
        break;
      }
    }
    if (!interpolated) return false;
  }
  return true;
}

ClassificationReport classify(const FiniteTSet& tset) {
  ClassificationReport r;
  r.reflexive = is_reflexive(tset);
  r.symmetric = is_symmetric(tset);
  r.antisymmetric = is_antisymmetric(tset);
  r.interpolative = is_interpolative(tset);
  r.abstract_base = is_abstract_base(tset);
  r.poset = r.reflexive && r.antisymmetric;
  r.preorder = r.reflexive;
  r.equivalence = r.reflexive && r.symmetric;
  r.continuous_information_system = r.interpolative;
  return r;
}

}  // namespace tset
