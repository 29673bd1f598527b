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

#ifndef MATROID_TESTS_FIXTURES_HPP_
#define MATROID_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <map>
#include <mutex>

#include "gtest/gtest.h"
#include "matroid/all.hpp"

namespace matroid::testing {

// Catalogs are enumerated once per process.
inline const Catalog& catalog(std::size_t n) {
  static std::map<std::size_t, Catalog> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_matroids(n)).first;
  return it->second;
}

// Two parallel classes {0,1} and {2,3}, rank 2.
inline Matroid two_double_points() { return parse_matroid("4:0,2;0,3;1,2;1,3"); }

// Runs fn and returns the code of the Error it throws.
template <typename Fn>
Errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvariant;
}

inline Matroid loop() { return zero_matroid(1); }
inline Matroid isthmus() { return free_matroid(1); }

}  // namespace matroid::testing

#endif  // MATROID_TESTS_FIXTURES_HPP_
