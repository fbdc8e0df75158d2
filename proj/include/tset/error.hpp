#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tset {

enum class Errc {
  duplicate_label,
  unknown_label,
  empty_carrier,
  carrier_too_large,
  not_transitive,
  carrier_mismatch,
  malformed_document,
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  size_out_of_range,
  unknown_theorem,
  missing_topology,
  unexpected_topology,
  unknown_example,
  infinite_carrier_unsupported,
};

/// Short stable name for an error code, e.g. "NotTransitive".
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by build() when rel[i][j] and rel[j][k] hold but rel[i][k] does not.
class NotTransitiveError : public Error {
 public:
  NotTransitiveError(std::array<std::size_t, 3> triple, const std::string& what)
      : Error(Errc::not_transitive, what), triple_(triple) {}

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

}  // namespace tset
