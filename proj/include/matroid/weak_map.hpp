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

#ifndef MATROID_WEAK_MAP_HPP_
#define MATROID_WEAK_MAP_HPP_

// A bijection phi: P -> Q is a weak map when the preimage of every independent
// set of Q is independent in P. Independent sets are downward closed, so it is
// enough to test the preimages of the bases of Q.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matroid/bijection.hpp"
#include "matroid/error.hpp"
#include "matroid/free_product.hpp"
#include "matroid/matroid.hpp"
#include "matroid/subset_mask.hpp"

namespace matroid {

inline bool is_weak_map(const Matroid& p, const Matroid& q, const Bijection& phi) {
  if (p.size() != q.size() || phi.size() != p.size()) {
    throw Error(Errc::kSizeMismatch, "weak map between sizes " + std::to_string(p.size()) +
                                         " and " + std::to_string(q.size()) +
                                         " via bijection of size " +
                                         std::to_string(phi.size()));
  }
  const Bijection back = phi.inverse();
  for (Bits b : q.bases()) {
    if (!p.independent(back.image(b))) return false;
  }
  return true;
}

// The weak map P -> Q that is least in one-line notation, if any.
inline std::optional<Bijection> find_weak_map(const Matroid& p, const Matroid& q) {
  if (p.size() != q.size()) {
    throw Error(Errc::kSizeMismatch, "weak map between sizes " + std::to_string(p.size()) +
                                         " and " + std::to_string(q.size()));
  }
  if (p.rank() < q.rank()) return std::nullopt;
  const std::size_t n = p.size();
  std::vector<std::size_t> forward(n);
  std::vector<std::size_t> backward(n);
  Bits images = 0;

  // Assigns phi(i) in increasing order of candidate image; a basis of Q whose
  // elements are all hit already must pull back to an independent set.
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t target = 0; target < n; ++target) {
      const Bits bit = Bits{1} << target;
      if (images & bit) continue;
      forward[i] = target;
      backward[target] = i;
      images |= bit;
      bool ok = true;
      for (Bits b : q.bases()) {
        if ((b & bit) == 0 || (b & ~images) != 0) continue;
        Bits pre = 0;
        for (Bits rest = b; rest != 0; rest &= rest - 1) {
          pre |= Bits{1} << backward[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        if (!p.independent(pre)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
      images &= ~bit;
    }
    return false;
  };
  if (n == 0) return Bijection{};
  if (!search(search, 0)) return std::nullopt;
  return Bijection(std::move(forward));
}

// The bijections of the weak-map recovery argument for L = M□N and a U with
// |U| = |S| and rank_L(U) = ρ(M).
struct TheoremMaps {
  Bijection to_left;   // L|U -> M
  Bijection to_right;  // L/U -> N
};

// With V the complement of U, phi is f on V∩S, f^-1 on U∩T and the identity
// on (U∩S) ∪ (V∩T). `f` pairs the i-th element of V∩S (ascending) with the
// f(i)-th element of U∩T; by default the two are matched in ascending order.
inline TheoremMaps theorem_phi(const Matroid& m, const Matroid& n, const SubsetMask& u,
                               const std::optional<Bijection>& f = std::nullopt) {
  const std::size_t total = m.size() + n.size();
  check_combined_size(m.size(), n.size());
  if (u.width() != total) {
    throw Error(Errc::kWidthMismatch, "U has width " + std::to_string(u.width()) +
                                          ", product has size " + std::to_string(total));
  }
  if (u.size() != m.size()) {
    throw Error(Errc::kHypothesis, "|U| = " + std::to_string(u.size()) +
                                       " but |S| = " + std::to_string(m.size()));
  }
  const Matroid l = free_product(m, n);
  if (l.rank_of(u.bits()) != m.rank()) {
    throw Error(Errc::kHypothesis, "rank of U differs from the rank of the left factor");
  }

  const Bits left_block = full_bits(m.size());
  const Bits v = full_bits(total) & ~u.bits();
  const std::vector<std::size_t> v_s = detail::elements_of(v & left_block);
  const std::vector<std::size_t> u_t = detail::elements_of(u.bits() & ~left_block);
  const Bijection pairing = f.value_or(Bijection::identity(v_s.size()));
  if (pairing.size() != v_s.size()) {
    throw Error(Errc::kSizeMismatch, "pairing of size " + std::to_string(pairing.size()) +
                                         " for " + std::to_string(v_s.size()) +
                                         " exchanged elements");
  }

  std::vector<std::size_t> phi(total);
  for (std::size_t x = 0; x < total; ++x) phi[x] = x;
  for (std::size_t i = 0; i < v_s.size(); ++i) {
    phi[v_s[i]] = u_t[pairing(i)];
    phi[u_t[pairing(i)]] = v_s[i];
  }

  std::vector<std::size_t> to_left;
  for (std::size_t x : detail::elements_of(u.bits())) to_left.push_back(phi[x]);
  std::vector<std::size_t> to_right;
  for (std::size_t x : detail::elements_of(v)) to_right.push_back(phi[x] - m.size());
  return {Bijection(std::move(to_left)), Bijection(std::move(to_right))};
}

}  // namespace matroid

#endif  // MATROID_WEAK_MAP_HPP_
