#include "tset/error.hpp"

namespace tset {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::empty_carrier: return "EmptyCarrier";
    case Errc::carrier_too_large: return "CarrierTooLarge";
    case Errc::not_transitive: return "NotTransitive";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::malformed_document: return "MalformedDocument";
    case Errc::missing_empty_or_full: return "MissingEmptyOrFull";
    case Errc::not_closed_under_union: return "NotClosedUnderUnion";
    case Errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case Errc::size_out_of_range: return "SizeOutOfRange";
    case Errc::unknown_theorem: return "UnknownTheorem";
    case Errc::missing_topology: return "MissingTopology";
    case Errc::unexpected_topology: return "UnexpectedTopology";
    case Errc::unknown_example: return "UnknownExample";
    case Errc::infinite_carrier_unsupported: return "InfiniteCarrierUnsupported";
  }
  return "Unknown";
}

}  // namespace tset
