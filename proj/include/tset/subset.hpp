#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace tset {

/// Largest carrier a FiniteTSet (and hence a Subset) may have.
inline constexpr std::size_t kMaxCarrier = 16;

/// A set of carrier elements stored as a fixed-width bit vector.
///
/// Bit i is set iff element i is a member. Binary operations require both
/// operands to share the same carrier size and throw Errc::carrier_mismatch
/// otherwise.
class Subset {
 public:
  using mask_type = std::uint32_t;

  /// Forward range over the indices of set bits, ascending.
  class MemberRange {
   public:
    class iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type = std::size_t;
      using difference_type = std::ptrdiff_t;
      using pointer = void;
      using reference = std::size_t;

      iterator() = default;
      explicit iterator(mask_type rest) : rest_(rest) {}
      std::size_t operator*() const {
        return static_cast<std::size_t>(std::countr_zero(rest_));
      }
      iterator& operator++() {
        rest_ &= rest_ - 1;
        return *this;
      }
      iterator operator++(int) {
        iterator old = *this;
        ++*this;
        return old;
      }
      bool operator==(const iterator&) const = default;

     private:
      mask_type rest_ = 0;
    };

    explicit MemberRange(mask_type bits) : bits_(bits) {}
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

   private:
    mask_type bits_;
  };

  Subset() = default;
  /// Throws carrier_too_large or carrier_mismatch (bits beyond the carrier).
  Subset(std::size_t carrier_size, mask_type bits);

  static Subset empty(std::size_t carrier_size) { return {carrier_size, 0}; }
  static Subset full(std::size_t carrier_size);
  static Subset singleton(std::size_t carrier_size, std::size_t index);
  static Subset of(std::size_t carrier_size,
                   std::initializer_list<std::size_t> indices);

  std::size_t carrier_size() const noexcept { return carrier_size_; }
  mask_type bits() const noexcept { return bits_; }
  bool contains(std::size_t index) const noexcept {
    return index < carrier_size_ && ((bits_ >> index) & 1U) != 0;
  }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept;
  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  MemberRange members() const noexcept { return MemberRange(bits_); }

  /// Throws carrier_mismatch if carrier sizes differ.
  bool is_subset_of(const Subset& other) const;
  Subset with(std::size_t index) const;
  Subset complement() const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  /// Set difference a \ b.
  friend Subset operator-(const Subset& a, const Subset& b);

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  // Declaration order gives <=> the (carrier_size, bits) ordering.
  std::size_t carrier_size_ = 0;
  mask_type bits_ = 0;
};

/// Throws Errc::carrier_mismatch when the two sizes differ.
void require_same_carrier(std::size_t expected, std::size_t actual);

}  // namespace tset
