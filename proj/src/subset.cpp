#include "tset/subset.hpp"

#include <string>

#include "tset/error.hpp"

namespace tset {
namespace {

Subset::mask_type full_mask(std::size_t n) {
  return n >= 32 ? ~Subset::mask_type{0} : (Subset::mask_type{1} << n) - 1;
}

}  // namespace

Subset::Subset(std::size_t carrier_size, mask_type bits)
    : carrier_size_(carrier_size), bits_(bits) {
  if (carrier_size > kMaxCarrier) {
    throw Error(Errc::carrier_too_large,
                "carrier size " + std::to_string(carrier_size) + " exceeds " +
                    std::to_string(kMaxCarrier));
  }
  if ((bits & ~full_mask(carrier_size)) != 0) {
    throw Error(Errc::carrier_mismatch,
                "subset has members beyond carrier size " +
                    std::to_string(carrier_size));
  }
}

Subset Subset::full(std::size_t carrier_size) {
  return {carrier_size, full_mask(carrier_size)};
}

Subset Subset::singleton(std::size_t carrier_size, std::size_t index) {
  if (index >= carrier_size) {
    throw Error(Errc::carrier_mismatch,
                "element index " + std::to_string(index) + " outside carrier");
  }
  return {carrier_size, mask_type{1} << index};
}

Subset Subset::of(std::size_t carrier_size,
                  std::initializer_list<std::size_t> indices) {
  Subset result = empty(carrier_size);
  for (std::size_t i : indices) result = result.with(i);
  return result;
}

bool Subset::is_full() const noexcept {
  return bits_ == full_mask(carrier_size_);
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_carrier(carrier_size_, other.carrier_size_);
  return (bits_ & ~other.bits_) == 0;
}

Subset Subset::with(std::size_t index) const {
  return *this | singleton(carrier_size_, index);
}

Subset Subset::complement() const {
  return {carrier_size_, ~bits_ & full_mask(carrier_size_)};
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same_carrier(a.carrier_size_, b.carrier_size_);
  Subset r = a;
  r.bits_ |= b.bits_;
  return r;
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same_carrier(a.carrier_size_, b.carrier_size_);
  Subset r = a;
  r.bits_ &= b.bits_;
  return r;
}

Subset operator-(const Subset& a, const Subset& b) {
  require_same_carrier(a.carrier_size_, b.carrier_size_);
  Subset r = a;
  r.bits_ &= ~b.bits_;
  return r;
}

void require_same_carrier(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw Error(Errc::carrier_mismatch,
                "carrier size mismatch: " + std::to_string(expected) + " vs " +
                    std::to_string(actual));
  }
}

}  // namespace tset
