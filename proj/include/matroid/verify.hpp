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

#ifndef MATROID_VERIFY_HPP_
#define MATROID_VERIFY_HPP_

// Structural checks of the free product, run pair by pair.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/enumeration.hpp"
#include "matroid/free_product.hpp"
#include "matroid/literal.hpp"
#include "matroid/matroid.hpp"
#include "matroid/parallel.hpp"
#include "matroid/weak_map.hpp"

namespace matroid {

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

class VerificationReport {
 public:
  void record(const std::string& name, bool ok, const std::string& context) {
    CheckTally& tally = find(name);
    if (ok) {
      ++tally.passed;
    } else {
      if (tally.failed == 0) tally.first_failure = context;
      ++tally.failed;
    }
  }

  void merge(const VerificationReport& other) {
    for (const CheckTally& t : other.tallies_) {
      CheckTally& mine = find(t.name);
      if (mine.failed == 0 && t.failed != 0) mine.first_failure = t.first_failure;
      mine.passed += t.passed;
      mine.failed += t.failed;
    }
  }

  bool all_passed() const {
    return std::all_of(tallies_.begin(), tallies_.end(),
                       [](const CheckTally& t) { return t.failed == 0; });
  }

  const std::vector<CheckTally>& tallies() const { return tallies_; }

 private:
  CheckTally& find(const std::string& name) {
    for (CheckTally& t : tallies_) {
      if (t.name == name) return t;
    }
    tallies_.push_back({name, 0, 0, {}});
    return tallies_.back();
  }

  std::vector<CheckTally> tallies_;
};

inline VerificationReport verify_pair(const Matroid& m, const Matroid& n) {
  VerificationReport report;
  const std::string context = to_literal(m) + " [] " + to_literal(n);

  std::optional<Matroid> product;
  try {
    product = free_product(m, n);
  } catch (const Error&) {
  }
  report.record("prop1-validity", product.has_value(), context);
  if (!product) return report;
  const Matroid& l = *product;
  const std::size_t total = l.size();

  bool agree = true;
  for (Bits a = 0; agree; ++a) {
    agree = l.independent(a) == free_product_independent(m, n, a);
    if (a == full_bits(total)) break;
  }
  report.record("prop1-independents", agree, context);

  report.record("rank-additivity", l.rank() == m.rank() + n.rank(), context);
  report.record("unit-laws",
                free_product(m, empty_matroid()) == m && free_product(empty_matroid(), n) == n,
                context);

  const SubsetMask left_block(full_bits(m.size()), total);
  report.record("prop2-minors",
                restrict_to(l, left_block) == m && contract(l, left_block) == n, context);

  report.record("prop3-duality",
                dual(l) == relabel(free_product(dual(n), dual(m)), block_swap(n.size(), m.size())),
                context);

  const MinRankSubsets min_rank = min_rank_over_k_subsets(l, m.size());
  report.record("lemma4-min-rank", min_rank.min_rank == m.rank(), context);
  report.record("lemma5-strict", strict_rank_check(m, n), context);

  bool weak = true;
  for (const SubsetMask& u : min_rank.minimizers) {
    if (min_rank.min_rank != m.rank()) break;
    const TheoremMaps maps = theorem_phi(m, n, u);
    weak = weak && is_weak_map(restrict_to(l, u), m, maps.to_left) &&
           is_weak_map(contract(l, u), n, maps.to_right);
  }
  report.record("theorem-weak-maps", weak, context);
  return report;
}

// Runs verify_pair over all pairs of catalog classes with n + m <= scale.
// Catalogs are enumerated up to min(scale, 6) elements.
inline VerificationReport verify_catalog_pairs(std::size_t scale, std::size_t workers = 1) {
  const std::size_t top = std::min<std::size_t>(scale, 6);
  std::vector<Catalog> catalogs;
  for (std::size_t k = 0; k <= top; ++k) catalogs.push_back(enumerate_matroids(k, workers));

  std::vector<std::pair<const Matroid*, const Matroid*>> pairs;
  for (std::size_t a = 0; a <= top; ++a) {
    for (std::size_t b = 0; a + b <= scale && b <= top; ++b) {
      for (const Matroid& m : catalogs[a].classes) {
        for (const Matroid& n : catalogs[b].classes) pairs.emplace_back(&m, &n);
      }
    }
  }
  auto parts = parallel_map(pairs.size(), workers, [&](std::size_t i) {
    return verify_pair(*pairs[i].first, *pairs[i].second);
  });
  VerificationReport report;
  for (const VerificationReport& part : parts) report.merge(part);
  return report;
}

}  // namespace matroid

#endif  // MATROID_VERIFY_HPP_
