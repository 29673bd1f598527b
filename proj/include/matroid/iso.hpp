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

#ifndef MATROID_ISO_HPP_
#define MATROID_ISO_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "matroid/bijection.hpp"
#include "matroid/matroid.hpp"
#include "matroid/subset_mask.hpp"

namespace matroid {

// Complete isomorphism invariant: the lexicographically least sorted list of
// basis masks over all relabelings of the ground set.
struct IsoKey {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::vector<Bits> canonical_bases;

  friend bool operator==(const IsoKey&, const IsoKey&) = default;
  friend auto operator<=>(const IsoKey&, const IsoKey&) = default;
};

struct CanonicalForm {
  IsoKey key;
  // Sends each element to its position in the canonical labeling.
  Bijection labeling;
};

namespace detail {

// Compares two blocks of images that all lie in [2^k, 2^(k+1)). For sorted
// lists of equal total length, list order equals "the family holding the
// smallest element of the symmetric difference is smaller"; returns <0 when
// `a` wins.
inline int compare_blocks(const std::vector<Bits>& a, const std::vector<Bits>& b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return i < a.size() ? -1 : 1;
}

struct PartialLabeling {
  std::array<std::uint8_t, kMaxGroundSize> position{};
  Bits used = 0;
};

// twin[e] = least element e' such that swapping e and e' preserves the
// bases. Swaps of this kind compose, so twins form classes.
inline std::vector<std::size_t> transposition_twins(const Matroid& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> twin(n);
  for (std::size_t e = 0; e < n; ++e) {
    twin[e] = e;
    for (std::size_t f = 0; f < e; ++f) {
      if (twin[f] != f) continue;
      std::vector<Bits> swapped;
      swapped.reserve(m.num_bases());
      const Bits be = Bits{1} << e;
      const Bits bf = Bits{1} << f;
      for (Bits b : m.bases()) {
        const bool has_e = b & be;
        const bool has_f = b & bf;
        swapped.push_back(has_e == has_f ? b : b ^ be ^ bf);
      }
      std::sort(swapped.begin(), swapped.end());
      if (swapped == m.bases()) {
        twin[e] = f;
        break;
      }
    }
  }
  return twin;
}

}  // namespace detail

// Positions are filled from 0 upward. Masks below 2^k are exactly the subsets
// of the first k positions, so the prefix of the sorted image list that lies
// below 2^k depends only on the first k placements. Keeping every partial
// labeling whose prefix is optimal at each depth therefore yields the global
// minimum exactly.
inline CanonicalForm canonical_form(const Matroid& m) {
  const std::size_t n = m.size();
  IsoKey key{n, m.rank(), {}};
  key.canonical_bases.reserve(m.num_bases());
  // The empty basis has no top element, so no block below picks it up.
  if (m.rank() == 0) key.canonical_bases.push_back(0);

  const std::vector<std::size_t> twin = detail::transposition_twins(m);
  std::vector<Bits> twins_below(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = 0; f < e; ++f) {
      if (twin[f] == twin[e]) twins_below[e] |= Bits{1} << f;
    }
  }
  std::vector<detail::PartialLabeling> frontier(1);

  std::vector<Bits> best_block;
  std::vector<Bits> block;
  for (std::size_t depth = 0; depth < n; ++depth) {
    std::vector<detail::PartialLabeling> next;
    bool have_best = false;
    for (const auto& partial : frontier) {
      for (std::size_t e = 0; e < n; ++e) {
        const Bits bit = Bits{1} << e;
        if (partial.used & bit) continue;
        if (twins_below[e] & ~partial.used) continue;
        const Bits within = partial.used | bit;
        block.clear();
        for (Bits b : m.bases()) {
          if ((b & bit) == 0 || (b & ~within) != 0) continue;
          Bits image = Bits{1} << depth;
          for (Bits rest = b & ~bit; rest != 0; rest &= rest - 1) {
            image |= Bits{1} << partial.position[static_cast<std::size_t>(
                         std::countr_zero(rest))];
          }
          block.push_back(image);
        }
        std::sort(block.begin(), block.end());
        const int cmp = have_best ? detail::compare_blocks(block, best_block) : -1;
        if (cmp > 0) continue;
        if (cmp < 0) {
          next.clear();
          best_block = block;
          have_best = true;
        }
        detail::PartialLabeling child = partial;
        child.position[e] = static_cast<std::uint8_t>(depth);
        child.used = within;
        next.push_back(std::move(child));
      }
    }
    key.canonical_bases.insert(key.canonical_bases.end(), best_block.begin(),
                               best_block.end());
    frontier = std::move(next);
  }

  std::vector<std::size_t> forward(n);
  for (std::size_t e = 0; e < n; ++e) forward[e] = frontier.front().position[e];
  return {std::move(key), Bijection(std::move(forward))};
}

inline IsoKey canonical_key(const Matroid& m) { return canonical_form(m).key; }

inline Matroid canonical_matroid(const Matroid& m) {
  return Matroid::from_bases(m.size(), canonical_key(m).canonical_bases);
}

// A bijection carrying the bases of m exactly onto the bases of other.
inline std::optional<Bijection> is_isomorphic(const Matroid& m, const Matroid& other) {
  if (m.size() != other.size() || m.rank() != other.rank() ||
      m.num_bases() != other.num_bases()) {
    return std::nullopt;
  }
  if (m == other) return Bijection::identity(m.size());
  CanonicalForm a = canonical_form(m);
  CanonicalForm b = canonical_form(other);
  if (a.key != b.key) return std::nullopt;
  return a.labeling.then(b.labeling.inverse());
}

}  // namespace matroid

#endif  // MATROID_ISO_HPP_
