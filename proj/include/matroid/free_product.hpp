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

#ifndef MATROID_FREE_PRODUCT_HPP_
#define MATROID_FREE_PRODUCT_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "matroid/bijection.hpp"
#include "matroid/error.hpp"
#include "matroid/iso.hpp"
#include "matroid/matroid.hpp"
#include "matroid/subset_mask.hpp"

namespace matroid {

// Ground-set layout of a product M□N: M on 0..M.n-1, N on M.n..M.n+N.n-1.
struct FactorSplit {
  Matroid left;
  Matroid right;
  // The subset of the product's ground set that plays the role of the left
  // factor's ground set.
  SubsetMask witness;
};

// All independent sets of m, sorted and deduplicated.
inline std::vector<Bits> independent_sets(const Matroid& m) {
  std::vector<Bits> out;
  for (Bits b : m.bases()) {
    for_each_subset_of(b, [&](Bits sub) { out.push_back(sub); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All spanning sets of m: complements of the independent sets of the dual.
inline std::vector<Bits> spanning_sets(const Matroid& m) {
  std::vector<Bits> out;
  const Bits all = full_bits(m.size());
  for (Bits coindependent : independent_sets(dual(m))) out.push_back(all & ~coindependent);
  std::sort(out.begin(), out.end());
  return out;
}

// The independence criterion defining M□N: A∩S independent in M and
// λ_M(A∩S) >= ν_N(A∩T). `a` is a mask on the combined layout.
inline bool free_product_independent(const Matroid& m, const Matroid& n, Bits a) {
  const Bits left = a & full_bits(m.size());
  const Bits right = shift_down(a, m.size());
  if (!m.independent(left)) return false;
  const std::size_t lack = m.rank() - popcount(left);
  const std::size_t null = popcount(right) - n.rank_of(right);
  return lack >= null;
}

// Bases of M□N are A∩S independent in M, A∩T spanning N, and
// ρ(M) - |A∩S| = |A∩T| - ρ(N); they are assembled directly by size class.
inline Matroid free_product(const Matroid& m, const Matroid& n) {
  check_combined_size(m.size(), n.size());
  const std::size_t total_rank = m.rank() + n.rank();

  std::vector<std::vector<Bits>> spanning_by_size(n.size() + 1);
  for (Bits s : spanning_sets(n)) spanning_by_size[popcount(s)].push_back(s);

  std::vector<Bits> family;
  for (Bits left : independent_sets(m)) {
    const std::size_t want = total_rank - popcount(left);
    if (want > n.size()) continue;
    for (Bits right : spanning_by_size[want]) family.push_back(left | shift_up(right, m.size()));
  }
  return Matroid::from_bases(m.size() + n.size(), std::move(family));
}

// Moves the first `front` elements after the following `back` elements:
// i -> i + back for i < front, i -> i - front otherwise. Relabeling
// dual(N)□dual(M) by block_swap(N.n, M.n) lands on the layout of dual(M□N).
inline Bijection block_swap(std::size_t front, std::size_t back) {
  std::vector<std::size_t> forward(front + back);
  for (std::size_t i = 0; i < front + back; ++i) {
    forward[i] = i < front ? i + back : i - front;
  }
  return Bijection(std::move(forward));
}

struct MinRankSubsets {
  std::size_t min_rank = 0;
  std::vector<SubsetMask> minimizers;  // ascending mask order
};

inline MinRankSubsets min_rank_over_k_subsets(const Matroid& l, std::size_t k) {
  if (k > l.size()) {
    throw Error(Errc::kOutOfRange, "subset size " + std::to_string(k) +
                                       " exceeds ground set size " +
                                       std::to_string(l.size()));
  }
  MinRankSubsets out{std::numeric_limits<std::size_t>::max(), {}};
  for_each_k_subset(l.size(), k, [&](Bits u) {
    const std::size_t r = l.rank_of(u);
    if (r < out.min_rank) {
      out.min_rank = r;
      out.minimizers.clear();
    }
    if (r == out.min_rank) out.minimizers.emplace_back(u, l.size());
  });
  return out;
}

// For L = M□N: every U with |U| = |S| that meets a nonloop of N and whose
// complement meets a nonisthmus of M has rank_L(U) > ρ(M).
inline bool strict_rank_check(const Matroid& m, const Matroid& n) {
  const Matroid l = free_product(m, n);
  const Bits left_block = full_bits(m.size());
  const Bits nonloops_n = shift_up(full_bits(n.size()) & ~loops(n).bits(), m.size());
  const Bits nonisthmus_m = left_block & ~isthmuses(m).bits();
  bool holds = true;
  for_each_k_subset(l.size(), m.size(), [&](Bits u) {
    const Bits v = full_bits(l.size()) & ~u;
    if ((u & nonloops_n) == 0 || (v & nonisthmus_m) == 0) return;
    if (l.rank_of(u) <= m.rank()) holds = false;
  });
  return holds;
}

// α_L: the number of A with L|A ≅ M and L/A ≅ N.
inline std::size_t count_factorizations(const Matroid& l, const Matroid& m, const Matroid& n) {
  if (l.size() != m.size() + n.size()) {
    throw Error(Errc::kSizeMismatch, "sizes " + std::to_string(m.size()) + " + " +
                                         std::to_string(n.size()) + " do not add up to " +
                                         std::to_string(l.size()));
  }
  const IsoKey left_key = canonical_key(m);
  const IsoKey right_key = canonical_key(n);
  std::size_t count = 0;
  for_each_k_subset(l.size(), m.size(), [&](Bits a) {
    const SubsetMask sub(a, l.size());
    if (canonical_key(restrict_to(l, sub)) != left_key) return;
    if (canonical_key(contract(l, sub)) != right_key) return;
    ++count;
  });
  return count;
}

// Searches the rank-minimizing k-subsets in ascending mask order and returns
// the first U with L ≅ (L|U)□(L/U).
inline FactorSplit recover_factors(const Matroid& l, std::size_t k) {
  const MinRankSubsets candidates = min_rank_over_k_subsets(l, k);
  const IsoKey target = canonical_key(l);
  for (const SubsetMask& u : candidates.minimizers) {
    Matroid left = restrict_to(l, u);
    Matroid right = contract(l, u);
    if (canonical_key(free_product(left, right)) == target) {
      return {std::move(left), std::move(right), u};
    }
  }
  throw Error(Errc::kNotAFreeProduct,
              "no split with a left factor of size " + std::to_string(k));
}

}  // namespace matroid

#endif  // MATROID_FREE_PRODUCT_HPP_
