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

#ifndef MATROID_MATROID_HPP_
#define MATROID_MATROID_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matroid/bijection.hpp"
#include "matroid/error.hpp"
#include "matroid/subset_mask.hpp"

namespace matroid {

// A matroid on {0..size()-1} held as its family of bases. Every value has
// passed the basis axioms; the only way to build one is from_bases().
class Matroid {
 public:
  // Validates the family: nonempty, equicardinal, and closed under basis
  // exchange. Duplicates are removed and the result is sorted by mask value.
  static Matroid from_bases(std::size_t n, std::vector<Bits> family) {
    if (n > kMaxGroundSize) {
      throw Error(Errc::kGroundSetTooLarge, "ground set of size " +
                                                std::to_string(n) + " exceeds " +
                                                std::to_string(kMaxGroundSize));
    }
    if (family.empty()) throw Error(Errc::kEmptyFamily, "no bases given");
    for (Bits b : family) {
      if ((b & ~full_bits(n)) != 0) {
        throw Error(Errc::kWidthMismatch,
                    "basis mask " + std::to_string(b) + " exceeds width " +
                        std::to_string(n));
      }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    const std::size_t r = popcount(family.front());
    for (Bits b : family) {
      if (popcount(b) != r) {
        throw Error(Errc::kUnequalCardinality,
                    "bases " + std::to_string(family.front()) + " and " +
                        std::to_string(b) + " differ in size");
      }
    }
    check_exchange(family);
    return Matroid(n, std::move(family));
  }

  static Matroid from_bases(std::size_t n, std::span<const SubsetMask> family) {
    std::vector<Bits> raw;
    raw.reserve(family.size());
    for (const SubsetMask& m : family) {
      if (m.width() != n) {
        throw Error(Errc::kWidthMismatch, "basis of width " +
                                              std::to_string(m.width()) +
                                              " for ground set of size " +
                                              std::to_string(n));
      }
      raw.push_back(m.bits());
    }
    return from_bases(n, std::move(raw));
  }

  std::size_t size() const { return n_; }
  std::size_t rank() const { return popcount(bases_.front()); }
  const std::vector<Bits>& bases() const { return bases_; }
  std::size_t num_bases() const { return bases_.size(); }
  SubsetMask ground() const { return SubsetMask::full(n_); }

  bool is_basis(Bits bits) const {
    return std::binary_search(bases_.begin(), bases_.end(), bits);
  }

  // Unchecked rank of a raw mask: max |B & bits| over bases.
  std::size_t rank_of(Bits bits) const {
    const std::size_t cap = std::min(popcount(bits), rank());
    std::size_t best = 0;
    for (Bits b : bases_) {
      best = std::max(best, popcount(b & bits));
      if (best == cap) break;
    }
    return best;
  }

  bool independent(Bits bits) const {
    for (Bits b : bases_) {
      if ((bits & ~b) == 0) return true;
    }
    return false;
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(std::size_t n, std::vector<Bits> bases) : n_(n), bases_(std::move(bases)) {}

  // family is sorted and deduplicated.
  static void check_exchange(const std::vector<Bits>& family) {
    auto has = [&](Bits b) {
      return std::binary_search(family.begin(), family.end(), b);
    };
    for (Bits b1 : family) {
      for (Bits b2 : family) {
        const Bits only_b2 = b2 & ~b1;
        for (Bits out = b1 & ~b2; out != 0; out &= out - 1) {
          const Bits x = out & -out;
          bool found = false;
          for (Bits in = only_b2; in != 0 && !found; in &= in - 1) {
            found = has((b1 & ~x) | (in & -in));
          }
          if (!found) {
            throw Error(Errc::kExchangeViolation,
                        "bases " + std::to_string(b1) + " and " + std::to_string(b2) +
                            ": removing element " +
                            std::to_string(std::countr_zero(x)) +
                            " admits no exchange");
          }
        }
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<Bits> bases_;
};

namespace detail {

inline void check_width(const Matroid& m, const SubsetMask& a) {
  if (a.width() != m.size()) {
    throw Error(Errc::kWidthMismatch, "subset of width " + std::to_string(a.width()) +
                                          " on matroid of size " +
                                          std::to_string(m.size()));
  }
}

inline std::vector<std::size_t> elements_of(Bits bits) {
  std::vector<std::size_t> out;
  for (; bits != 0; bits &= bits - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return out;
}

}  // namespace detail

inline std::size_t rank(const Matroid& m, const SubsetMask& a) {
  detail::check_width(m, a);
  return m.rank_of(a.bits());
}

inline std::size_t nullity(const Matroid& m, const SubsetMask& a) {
  return a.size() - rank(m, a);
}

inline std::size_t rank_lack(const Matroid& m, const SubsetMask& a) {
  return m.rank() - rank(m, a);
}

inline bool is_independent(const Matroid& m, const SubsetMask& a) {
  detail::check_width(m, a);
  return m.independent(a.bits());
}

inline bool spans(const Matroid& m, const SubsetMask& a) { return rank_lack(m, a) == 0; }

inline SubsetMask loops(const Matroid& m) {
  Bits used = 0;
  for (Bits b : m.bases()) used |= b;
  return {full_bits(m.size()) & ~used, m.size()};
}

inline SubsetMask isthmuses(const Matroid& m) {
  Bits common = full_bits(m.size());
  for (Bits b : m.bases()) common &= b;
  return {common, m.size()};
}

// A minor together with the original index of each of its elements.
struct Minor {
  Matroid matroid;
  std::vector<std::size_t> elements;
};

// M|A, renumbered by ascending original index.
inline Minor restriction(const Matroid& m, const SubsetMask& a) {
  detail::check_width(m, a);
  const Bits keep = a.bits();
  const std::size_t r = m.rank_of(keep);
  std::vector<Bits> family;
  for (Bits b : m.bases()) {
    const Bits part = b & keep;
    if (popcount(part) == r) family.push_back(compress_bits(part, keep));
  }
  return {Matroid::from_bases(a.size(), std::move(family)), detail::elements_of(keep)};
}

inline Matroid restrict_to(const Matroid& m, const SubsetMask& a) {
  return restriction(m, a).matroid;
}

// M/A computed through a chosen basis `e` of M|A: bases are B\A over the
// bases B of M meeting A exactly in e.
inline Minor contraction_through(const Matroid& m, const SubsetMask& a, const SubsetMask& e) {
  detail::check_width(m, a);
  detail::check_width(m, e);
  const Bits cut = a.bits();
  if ((e.bits() & ~cut) != 0 || !m.independent(e.bits()) ||
      popcount(e.bits()) != m.rank_of(cut)) {
    throw Error(Errc::kHypothesis, "contraction witness is not a basis of the restriction");
  }
  const Bits keep = full_bits(m.size()) & ~cut;
  std::vector<Bits> family;
  for (Bits b : m.bases()) {
    if ((b & cut) == e.bits()) family.push_back(compress_bits(b & keep, keep));
  }
  return {Matroid::from_bases(m.size() - a.size(), std::move(family)),
          detail::elements_of(keep)};
}

// Least (by mask value) basis of M|A, used as the fixed contraction witness.
inline SubsetMask least_basis_within(const Matroid& m, const SubsetMask& a) {
  detail::check_width(m, a);
  const std::size_t r = m.rank_of(a.bits());
  Bits best = ~Bits{0};
  for (Bits b : m.bases()) {
    const Bits part = b & a.bits();
    if (popcount(part) == r) best = std::min(best, part);
  }
  return {best, m.size()};
}

inline Minor contraction(const Matroid& m, const SubsetMask& a) {
  return contraction_through(m, a, least_basis_within(m, a));
}

inline Matroid contract(const Matroid& m, const SubsetMask& a) {
  return contraction(m, a).matroid;
}

inline Matroid dual(const Matroid& m) {
  std::vector<Bits> family;
  family.reserve(m.num_bases());
  const Bits all = full_bits(m.size());
  for (Bits b : m.bases()) family.push_back(all & ~b);
  return Matroid::from_bases(m.size(), std::move(family));
}

inline void check_combined_size(std::size_t a, std::size_t b) {
  if (a + b > kMaxGroundSize) {
    throw Error(Errc::kGroundSetTooLarge, "combined ground set of size " +
                                              std::to_string(a + b) + " exceeds " +
                                              std::to_string(kMaxGroundSize));
  }
}

// M on 0..M.n-1 followed by N shifted up by M.n.
inline Matroid direct_sum(const Matroid& m, const Matroid& n) {
  check_combined_size(m.size(), n.size());
  std::vector<Bits> family;
  family.reserve(m.num_bases() * n.num_bases());
  for (Bits b : m.bases()) {
    for (Bits c : n.bases()) family.push_back(b | shift_up(c, m.size()));
  }
  return Matroid::from_bases(m.size() + n.size(), std::move(family));
}

// Image of M under phi: element i becomes phi(i).
inline Matroid relabel(const Matroid& m, const Bijection& phi) {
  if (phi.size() != m.size()) {
    throw Error(Errc::kSizeMismatch, "bijection of size " + std::to_string(phi.size()) +
                                         " on matroid of size " +
                                         std::to_string(m.size()));
  }
  std::vector<Bits> family;
  family.reserve(m.num_bases());
  for (Bits b : m.bases()) family.push_back(phi.image(b));
  return Matroid::from_bases(m.size(), std::move(family));
}

inline Matroid uniform(std::size_t k, std::size_t n) {
  if (k > n) {
    throw Error(Errc::kOutOfRange, "uniform rank " + std::to_string(k) +
                                       " exceeds size " + std::to_string(n));
  }
  if (n > kMaxGroundSize) {
    throw Error(Errc::kGroundSetTooLarge, "ground set of size " + std::to_string(n));
  }
  std::vector<Bits> family;
  for_each_k_subset(n, k, [&](Bits b) { family.push_back(b); });
  return Matroid::from_bases(n, std::move(family));
}

inline Matroid free_matroid(std::size_t n) { return uniform(n, n); }
inline Matroid zero_matroid(std::size_t n) { return uniform(0, n); }
inline Matroid empty_matroid() { return uniform(0, 0); }

}  // namespace matroid

#endif  // MATROID_MATROID_HPP_
