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

#ifndef MATROID_ENUMERATION_HPP_
#define MATROID_ENUMERATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/free_product.hpp"
#include "matroid/iso.hpp"
#include "matroid/matroid.hpp"
#include "matroid/parallel.hpp"
#include "matroid/subset_mask.hpp"

namespace matroid {

inline constexpr std::size_t kMaxCatalogSize = 7;

// Pairwise non-isomorphic matroids on n elements, each in canonical form,
// ordered by (rank, basis count, canonical bases).
struct Catalog {
  std::size_t n = 0;
  std::vector<Matroid> classes;

  std::size_t count() const { return classes.size(); }
  friend bool operator==(const Catalog&, const Catalog&) = default;
};

namespace detail {

inline bool catalog_order(const Matroid& a, const Matroid& b) {
  return std::forward_as_tuple(a.rank(), a.num_bases(), a.bases()) <
         std::forward_as_tuple(b.rank(), b.num_bases(), b.bases());
}

// Backtracking over the r-subsets of {0..n-1} in ascending mask order. Each
// candidate is either taken as a basis or ruled out; a branch dies as soon as
// some taken pair (B1, B2, x) has every exchange candidate B1-x+y ruled out.
class BasisFamilySearch {
 public:
  BasisFamilySearch(std::size_t n, std::size_t r) : n_(n) {
    for_each_k_subset(n, r, [&](Bits b) { candidates_.push_back(b); });
    index_.assign(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      index_[candidates_[i]] = static_cast<int>(i);
    }
  }

  std::size_t num_candidates() const { return candidates_.size(); }

  // All basis families whose least basis is candidate `first`.
  std::vector<std::vector<Bits>> run_from(std::size_t first) {
    found_.clear();
    status_.assign(candidates_.size(), kUndecided);
    taken_.clear();
    for (std::size_t i = 0; i < first; ++i) status_[i] = kOut;
    status_[first] = kIn;
    taken_.push_back(candidates_[first]);
    descend(first + 1);
    return std::move(found_);
  }

 private:
  enum Status : std::uint8_t { kUndecided, kIn, kOut };

  bool alive(Bits b) const { return status_[static_cast<std::size_t>(index_[b])] != kOut; }

  bool pair_dead(Bits b1, Bits b2) const {
    const Bits only_b2 = b2 & ~b1;
    for (Bits out = b1 & ~b2; out != 0; out &= out - 1) {
      const Bits x = out & -out;
      bool ok = false;
      for (Bits in = only_b2; in != 0 && !ok; in &= in - 1) ok = alive((b1 & ~x) | (in & -in));
      if (!ok) return true;
    }
    return false;
  }

  void descend(std::size_t i) {
    if (i == candidates_.size()) {
      found_.push_back(taken_);
      return;
    }
    const Bits c = candidates_[i];

    status_[i] = kIn;
    taken_.push_back(c);
    bool ok = true;
    for (Bits b : taken_) {
      if (pair_dead(c, b) || pair_dead(b, c)) {
        ok = false;
        break;
      }
    }
    if (ok) descend(i + 1);
    taken_.pop_back();

    status_[i] = kOut;
    ok = true;
    for (Bits b1 : taken_) {
      if (popcount(b1 & ~c) != 1) continue;
      for (Bits b2 : taken_) {
        if (pair_dead(b1, b2)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) descend(i + 1);
    status_[i] = kUndecided;
  }

  std::size_t n_;
  std::vector<Bits> candidates_;
  std::vector<int> index_;
  std::vector<Status> status_;
  std::vector<Bits> taken_;
  std::vector<std::vector<Bits>> found_;
};

inline void check_catalog_size(std::size_t n) {
  if (n > kMaxCatalogSize) {
    throw Error(Errc::kOutOfRange, "catalogs are limited to n <= " +
                                       std::to_string(kMaxCatalogSize));
  }
}

inline Catalog build_catalog(std::size_t n, const std::vector<Matroid>& labeled) {
  std::set<std::vector<Bits>> seen;
  Catalog out{n, {}};
  for (const Matroid& m : labeled) {
    IsoKey key = canonical_key(m);
    if (seen.insert(key.canonical_bases).second) {
      out.classes.push_back(Matroid::from_bases(n, std::move(key.canonical_bases)));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), catalog_order);
  return out;
}

}  // namespace detail

// Every matroid on the labeled set {0..n-1}, grouped by rank and then by
// least basis. Work is split across workers by (rank, least basis).
inline std::vector<Matroid> labeled_matroids(std::size_t n, std::size_t workers = 1) {
  detail::check_catalog_size(n);
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t r = 0; r <= n; ++r) {
    const std::size_t count = detail::BasisFamilySearch(n, r).num_candidates();
    for (std::size_t first = 0; first < count; ++first) tasks.emplace_back(r, first);
  }
  auto parts = parallel_map(tasks.size(), workers, [&](std::size_t t) {
    detail::BasisFamilySearch search(n, tasks[t].first);
    return search.run_from(tasks[t].second);
  });
  std::vector<Matroid> out;
  for (auto& part : parts) {
    for (auto& family : part) out.push_back(Matroid::from_bases(n, std::move(family)));
  }
  return out;
}

inline Catalog enumerate_matroids(std::size_t n, std::size_t workers = 1) {
  const std::vector<Matroid> labeled = labeled_matroids(n, workers);
  auto keys = parallel_map(labeled.size(), workers,
                           [&](std::size_t i) { return canonical_key(labeled[i]); });
  std::set<std::vector<Bits>> seen;
  Catalog out{n, {}};
  for (IsoKey& key : keys) {
    if (seen.insert(key.canonical_bases).second) {
      out.classes.push_back(Matroid::from_bases(n, std::move(key.canonical_bases)));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), detail::catalog_order);
  return out;
}

inline constexpr std::size_t kMaxIndependenceOracleSize = 4;

// Independent strategy for small n: scans every family of subsets of
// {0..n-1}, keeps those satisfying the independence axioms, and reads off
// the maximal members.
inline Catalog enumerate_matroids_by_independents(std::size_t n) {
  if (n > kMaxIndependenceOracleSize) {
    throw Error(Errc::kOutOfRange, "independence-axiom scan is limited to n <= " +
                                       std::to_string(kMaxIndependenceOracleSize));
  }
  const std::size_t num_sets = std::size_t{1} << n;
  const std::uint64_t num_families = std::uint64_t{1} << num_sets;
  std::vector<Matroid> labeled;
  for (std::uint64_t family = 0; family < num_families; ++family) {
    auto has = [&](std::size_t s) { return ((family >> s) & 1u) != 0; };
    if (!has(0)) continue;
    bool ok = true;
    for (std::size_t s = 0; s < num_sets && ok; ++s) {
      if (!has(s)) continue;
      for (std::size_t e = 0; e < n && ok; ++e) {
        if ((s >> e) & 1u) ok = has(s & ~(std::size_t{1} << e));
      }
    }
    for (std::size_t i = 0; i < num_sets && ok; ++i) {
      if (!has(i)) continue;
      for (std::size_t j = 0; j < num_sets && ok; ++j) {
        if (!has(j) || popcount(static_cast<Bits>(i)) >= popcount(static_cast<Bits>(j))) {
          continue;
        }
        bool augmented = false;
        for (std::size_t e = 0; e < n && !augmented; ++e) {
          const std::size_t bit = std::size_t{1} << e;
          augmented = (j & bit) && !(i & bit) && has(i | bit);
        }
        ok = augmented;
      }
    }
    if (!ok) continue;
    std::size_t top = 0;
    for (std::size_t s = 0; s < num_sets; ++s) {
      if (has(s)) top = std::max(top, popcount(static_cast<Bits>(s)));
    }
    std::vector<Bits> bases;
    for (std::size_t s = 0; s < num_sets; ++s) {
      if (has(s) && popcount(static_cast<Bits>(s)) == top) bases.push_back(static_cast<Bits>(s));
    }
    labeled.push_back(Matroid::from_bases(n, std::move(bases)));
  }
  return detail::build_catalog(n, labeled);
}

struct WelshResult {
  std::size_t products = 0;
  std::size_t distinct = 0;
  bool injective = false;

  friend bool operator==(const WelshResult&, const WelshResult&) = default;
};

// Forms every free product of a left class with a right class and counts the
// distinct isomorphism classes among them.
inline WelshResult welsh_check(const Catalog& left, const Catalog& right,
                               std::size_t workers = 1) {
  const std::size_t total = left.count() * right.count();
  if (total == 0) return {0, 0, true};
  auto keys = parallel_map(total, workers, [&](std::size_t i) {
    return canonical_key(free_product(left.classes[i / right.count()],
                                      right.classes[i % right.count()]));
  });
  std::set<IsoKey> distinct(keys.begin(), keys.end());
  return {total, distinct.size(), distinct.size() == total};
}

inline WelshResult welsh_check(std::size_t n, std::size_t m, std::size_t workers = 1) {
  const Catalog left = enumerate_matroids(n, workers);
  const Catalog right = m == n ? left : enumerate_matroids(m, workers);
  return welsh_check(left, right, workers);
}

}  // namespace matroid

#endif  // MATROID_ENUMERATION_HPP_
