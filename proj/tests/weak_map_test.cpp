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

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "matroid/all.hpp"
#include "oracles.hpp"

namespace matroid {
namespace {

using testing::catalog;
using testing::error_code_of;
using testing::isthmus;
using testing::loop;
using testing::two_double_points;

// Preimages of every independent set of q, not just its bases.
bool weak_on_all_independents(const Matroid& p, const Matroid& q,
                              const std::vector<std::size_t>& perm) {
  for (Bits a = 0; a <= full_bits(q.size()); ++a) {
    if (!oracle::contained_in_basis(q.bases(), a)) continue;
    Bits pre = 0;
    for (std::size_t e = 0; e < perm.size(); ++e) {
      if ((a >> perm[e]) & 1u) pre |= Bits{1} << e;
    }
    if (!oracle::contained_in_basis(p.bases(), pre)) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> first_weak_map(const Matroid& p, const Matroid& q) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (weak_on_all_independents(p, q, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

TEST(WeakMapTest, Examples) {
  const Matroid m = two_double_points();
  EXPECT_TRUE(is_weak_map(m, m, Bijection::identity(4)));

  const Matroid u12 = uniform(1, 2);
  const Matroid li = direct_sum(loop(), isthmus());
  EXPECT_TRUE(is_weak_map(u12, li, Bijection::identity(2)));
  EXPECT_FALSE(is_weak_map(li, u12, Bijection::identity(2)));
  EXPECT_FALSE(is_weak_map(li, u12, Bijection({1, 0})));
  EXPECT_FALSE(first_weak_map(li, u12));
  EXPECT_FALSE(find_weak_map(li, u12));
  ASSERT_TRUE(find_weak_map(u12, li));
  EXPECT_TRUE(find_weak_map(u12, li)->is_identity());
  EXPECT_TRUE(find_weak_map(m, m)->is_identity());
  EXPECT_EQ(find_weak_map(empty_matroid(), empty_matroid()), Bijection{});

  EXPECT_EQ(error_code_of([&] { is_weak_map(m, u12, Bijection::identity(4)); }),
            Errc::kSizeMismatch);
  EXPECT_EQ(error_code_of([&] { find_weak_map(m, u12); }), Errc::kSizeMismatch);
}

TEST(WeakMapTest, BasisPreimagesSuffice) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Matroid& p : catalog(n).classes) {
      for (const Matroid& q : catalog(n).classes) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
          ASSERT_EQ(is_weak_map(p, q, Bijection(perm)), weak_on_all_independents(p, q, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));

        const auto found = find_weak_map(p, q);
        const auto brute = first_weak_map(p, q);
        ASSERT_EQ(found.has_value(), brute.has_value());
        if (found) {
          ASSERT_EQ(found->forward(), *brute);
        }
      }
    }
  }
}

TEST(WeakMapTest, MutualWeakMapsMeanIsomorphic) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Matroid& p : catalog(n).classes) {
      for (const Matroid& q : catalog(n).classes) {
        const bool both = find_weak_map(p, q) && find_weak_map(q, p);
        EXPECT_EQ(both, is_isomorphic(p, q).has_value());
      }
    }
  }
}

TEST(WeakMapTest, ReflexiveAndClosedUnderComposition) {
  std::mt19937 rng(17);
  std::size_t composed = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto& classes = catalog(n).classes;
    for (const Matroid& c : classes) {
      const Matroid m = relabel(c, oracle::random_bijection(n, rng));
      EXPECT_TRUE(is_weak_map(m, m, Bijection::identity(n)));
    }
    for (int trial = 0; trial < 300; ++trial) {
      const Matroid& p = classes[rng() % classes.size()];
      const Matroid& q = classes[rng() % classes.size()];
      const Matroid& r = classes[rng() % classes.size()];
      const auto phi = find_weak_map(p, q);
      const auto psi = find_weak_map(q, r);
      if (!phi || !psi) continue;
      EXPECT_TRUE(is_weak_map(p, r, phi->then(*psi)));
      ++composed;
    }
  }
  EXPECT_GT(composed, 100u);
}

TEST(TheoremPhiTest, Examples) {
  // U = S gives identities, which are isomorphisms.
  const Matroid m = uniform(2, 3);
  const Matroid n = two_double_points();
  const TheoremMaps at_s = theorem_phi(m, n, SubsetMask(0b111, 7));
  EXPECT_TRUE(at_s.to_left.is_identity());
  EXPECT_TRUE(at_s.to_right.is_identity());

  // L = isthmus□loop, U = {1}: phi swaps 0 and 1.
  const Matroid l = free_product(isthmus(), loop());
  const SubsetMask u(0b10, 2);
  ASSERT_EQ(rank(l, u), 1u);
  const TheoremMaps swap = theorem_phi(isthmus(), loop(), u);
  EXPECT_EQ(swap.to_left, Bijection::identity(1));
  EXPECT_EQ(swap.to_right, Bijection::identity(1));
  EXPECT_TRUE(is_weak_map(restrict_to(l, u), isthmus(), swap.to_left));
  EXPECT_TRUE(is_weak_map(contract(l, u), loop(), swap.to_right));

  const Matroid big = free_product(m, n);
  std::size_t qualifying = 0;
  for_each_k_subset(7, 3, [&](Bits bits) {
    const SubsetMask x(bits, 7);
    if (rank(big, x) != m.rank()) return;
    ++qualifying;
    const TheoremMaps maps = theorem_phi(m, n, x);
    EXPECT_TRUE(is_weak_map(restrict_to(big, x), m, maps.to_left));
    EXPECT_TRUE(is_weak_map(contract(big, x), n, maps.to_right));
  });
  EXPECT_EQ(qualifying, min_rank_over_k_subsets(big, 3).minimizers.size());

  EXPECT_EQ(error_code_of([&] { theorem_phi(m, n, SubsetMask(0b11, 7)); }), Errc::kHypothesis);
  // {3,4,5} has rank 3 > 2 in L.
  EXPECT_EQ(error_code_of([&] { theorem_phi(m, n, SubsetMask(0b0111000, 7)); }),
            Errc::kHypothesis);
  EXPECT_EQ(error_code_of([&] { theorem_phi(m, n, SubsetMask(0b111, 6)); }),
            Errc::kWidthMismatch);
}

TEST(TheoremPhiTest, ArbitraryPairingsAlsoWork) {
  std::mt19937 rng(99);
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; a + b <= 6; ++b) {
      for (const Matroid& m : catalog(a).classes) {
        for (const Matroid& n : catalog(b).classes) {
          const Matroid l = free_product(m, n);
          for (const SubsetMask& u : min_rank_over_k_subsets(l, a).minimizers) {
            const std::size_t exchanged = popcount(~u.bits() & full_bits(a));
            for (int trial = 0; trial < 5; ++trial) {
              const TheoremMaps maps =
                  theorem_phi(m, n, u, oracle::random_bijection(exchanged, rng));
              ASSERT_TRUE(is_weak_map(restrict_to(l, u), m, maps.to_left));
              ASSERT_TRUE(is_weak_map(contract(l, u), n, maps.to_right));
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace matroid
