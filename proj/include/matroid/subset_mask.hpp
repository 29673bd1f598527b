// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_SUBSET_MASK_HPP_
#define MATROID_SUBSET_MASK_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "matroid/error.hpp"

namespace matroid {

using Bits = std::uint32_t;

// Ground sets are capped at the width of Bits.
inline constexpr std::size_t kMaxGroundSize = 32;

constexpr Bits full_bits(std::size_t width) {
  return width >= kMaxGroundSize ? ~Bits{0} : (Bits{1} << width) - 1;
}

constexpr std::size_t popcount(Bits bits) {
  return static_cast<std::size_t>(std::popcount(bits));
}

// Shifts that treat a full-width shift as clearing every bit.
constexpr Bits shift_up(Bits bits, std::size_t by) {
  return by >= kMaxGroundSize ? 0 : bits << by;
}
constexpr Bits shift_down(Bits bits, std::size_t by) {
  return by >= kMaxGroundSize ? 0 : bits >> by;
}

// Gosper's hack: the next larger mask with the same popcount. Returns 0 once
// the sequence leaves `limit` bits.
constexpr Bits next_same_popcount(Bits v) {
  const Bits t = v | (v - 1);
  if (t == ~Bits{0}) return 0;
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

// Calls fn(mask) for every k-subset of {0..n-1} in ascending numeric order.
template <typename Fn>
void for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(Bits{0});
    return;
  }
  const Bits limit = full_bits(n);
  Bits v = full_bits(k);
  while (true) {
    fn(v);
    if (v == (limit & ~full_bits(n - k))) break;
    v = next_same_popcount(v);
  }
}

// Calls fn(sub) for every subset of `bits`, starting from 0.
template <typename Fn>
void for_each_subset_of(Bits bits, Fn&& fn) {
  Bits sub = 0;
  while (true) {
    fn(sub);
    if (sub == bits) break;
    sub = (sub - bits) & bits;
  }
}

// Packs the bits of `value` selected by `select` into the low bits, keeping
// their relative order.
constexpr Bits compress_bits(Bits value, Bits select) {
  Bits out = 0;
  Bits pos = 1;
  for (Bits s = select; s != 0; s &= s - 1) {
    const Bits low = s & -s;
    if (value & low) out |= pos;
    pos <<= 1;
  }
  return out;
}

// Inverse of compress_bits: spreads the low bits of `value` over `select`.
constexpr Bits expand_bits(Bits value, Bits select) {
  Bits out = 0;
  Bits pos = 1;
  for (Bits s = select; s != 0; s &= s - 1) {
    if (value & pos) out |= s & -s;
    pos <<= 1;
  }
  return out;
}

// A subset of the ground set {0..width-1}.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;

  SubsetMask(Bits bits, std::size_t width) : bits_(bits), width_(width) {
    if (width > kMaxGroundSize) {
      throw Error(Errc::kGroundSetTooLarge,
                  "width " + std::to_string(width) + " exceeds " +
                      std::to_string(kMaxGroundSize));
    }
    if ((bits & ~full_bits(width)) != 0) {
      throw Error(Errc::kOutOfRange, "mask has elements outside width " +
                                         std::to_string(width));
    }
  }

  static SubsetMask empty(std::size_t width) { return {0, width}; }
  static SubsetMask full(std::size_t width) { return {full_bits(width), width}; }

  static SubsetMask of(std::size_t width, std::initializer_list<std::size_t> elements) {
    Bits bits = 0;
    for (std::size_t e : elements) {
      if (e >= width) {
        throw Error(Errc::kOutOfRange, "element " + std::to_string(e) +
                                           " not below width " +
                                           std::to_string(width));
      }
      bits |= Bits{1} << e;
    }
    return {bits, width};
  }

  constexpr Bits bits() const { return bits_; }
  constexpr std::size_t width() const { return width_; }
  constexpr std::size_t size() const { return popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }

  constexpr bool contains(std::size_t element) const {
    return element < width_ && ((bits_ >> element) & 1u) != 0;
  }

  bool subset_of(const SubsetMask& other) const {
    check_same_width(other);
    return (bits_ & ~other.bits_) == 0;
  }

  SubsetMask complement() const { return {~bits_ & full_bits(width_), width_}; }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (Bits b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
    a.check_same_width(b);
    return {a.bits_ | b.bits_, a.width_};
  }
  friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
    a.check_same_width(b);
    return {a.bits_ & b.bits_, a.width_};
  }
  friend SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
    a.check_same_width(b);
    return {a.bits_ & ~b.bits_, a.width_};
  }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;

 private:
  void check_same_width(const SubsetMask& other) const {
    if (width_ != other.width_) {
      throw Error(Errc::kWidthMismatch,
                  "subset widths " + std::to_string(width_) + " and " +
                      std::to_string(other.width_));
    }
  }

  Bits bits_ = 0;
  std::size_t width_ = 0;
};

}  // namespace matroid

#endif  // MATROID_SUBSET_MASK_HPP_
