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

#ifndef MATROID_BIJECTION_HPP_
#define MATROID_BIJECTION_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "matroid/error.hpp"
#include "matroid/subset_mask.hpp"

namespace matroid {

// A relabeling of {0..size-1}; forward()[i] is the image of i.
class Bijection {
 public:
  Bijection() = default;

  explicit Bijection(std::vector<std::size_t> forward) : forward_(std::move(forward)) {
    std::vector<bool> seen(forward_.size(), false);
    for (std::size_t image : forward_) {
      if (image >= forward_.size() || seen[image]) {
        throw Error(Errc::kInvariant, "not a permutation of 0.." +
                                          std::to_string(forward_.size()) + "-1");
      }
      seen[image] = true;
    }
  }

  static Bijection identity(std::size_t size) {
    std::vector<std::size_t> forward(size);
    std::iota(forward.begin(), forward.end(), std::size_t{0});
    return Bijection(std::move(forward));
  }

  std::size_t size() const { return forward_.size(); }
  std::size_t operator()(std::size_t i) const { return forward_.at(i); }
  const std::vector<std::size_t>& forward() const { return forward_; }

  Bijection inverse() const {
    std::vector<std::size_t> back(forward_.size());
    for (std::size_t i = 0; i < forward_.size(); ++i) back[forward_[i]] = i;
    return Bijection(std::move(back));
  }

  // (after.then(*this))(i) == after(this(i)).
  Bijection then(const Bijection& after) const {
    if (after.size() != size()) {
      throw Error(Errc::kSizeMismatch, "composing bijections of different sizes");
    }
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = after.forward_[forward_[i]];
    return Bijection(std::move(out));
  }

  Bits image(Bits bits) const {
    Bits out = 0;
    for (Bits b = bits; b != 0; b &= b - 1) {
      out |= Bits{1} << forward_[static_cast<std::size_t>(std::countr_zero(b))];
    }
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < forward_.size(); ++i) {
      if (forward_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Bijection&, const Bijection&) = default;

 private:
  std::vector<std::size_t> forward_;
};

}  // namespace matroid

#endif  // MATROID_BIJECTION_HPP_
