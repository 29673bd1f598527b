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

#ifndef MATROID_LITERAL_HPP_
#define MATROID_LITERAL_HPP_

// Text forms:
//   matroid   <n>:<basis>(;<basis>)*   e.g. 3:0,1;0,2;1,2   1:e   0:e
//   subset    comma-separated ascending indices, or `e` for the empty set
//   bijection one-line notation p0,p1,...   (`e` when empty)

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "matroid/bijection.hpp"
#include "matroid/error.hpp"
#include "matroid/matroid.hpp"
#include "matroid/subset_mask.hpp"

namespace matroid {

namespace detail {

inline std::size_t parse_index(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  if (text.empty()) throw Error(Errc::kParse, "empty number in '" + std::string(context) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::kParse, "unexpected character '" + std::string(1, c) + "' in '" +
                                    std::string(context) + "'");
    }
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::kParse, "bad number '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// Indices must be strictly ascending and below width.
inline Bits parse_index_list(std::string_view text, std::size_t width,
                             std::string_view context) {
  if (text == "e") return 0;
  Bits bits = 0;
  bool first = true;
  std::size_t prev = 0;
  for (std::string_view part : split(text, ',')) {
    const std::size_t idx = parse_index(part, context);
    if (idx >= width) {
      throw Error(Errc::kParse, "index " + std::to_string(idx) + " out of range in '" +
                                    std::string(context) + "'");
    }
    if (!first && idx <= prev) {
      throw Error(Errc::kParse, "indices not strictly ascending in '" +
                                    std::string(context) + "'");
    }
    bits |= Bits{1} << idx;
    prev = idx;
    first = false;
  }
  return bits;
}

inline std::string format_index_list(Bits bits) {
  if (bits == 0) return "e";
  std::string out;
  for (std::size_t e : elements_of(bits)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace detail

inline std::string to_literal(const Matroid& m) {
  std::string out = std::to_string(m.size()) + ":";
  bool first = true;
  for (Bits b : m.bases()) {
    if (!first) out += ';';
    out += detail::format_index_list(b);
    first = false;
  }
  return out;
}

inline std::string to_literal(const SubsetMask& a) { return detail::format_index_list(a.bits()); }

inline std::string to_literal(const Bijection& phi) {
  if (phi.size() == 0) return "e";
  std::string out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(phi(i));
  }
  return out;
}

inline Matroid parse_matroid(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::kParse, "missing ':' in matroid literal '" + std::string(text) + "'");
  }
  const std::size_t n = detail::parse_index(text.substr(0, colon), text);
  if (n > kMaxGroundSize) {
    throw Error(Errc::kGroundSetTooLarge, "ground set of size " + std::to_string(n));
  }
  std::vector<Bits> family;
  for (std::string_view part : detail::split(text.substr(colon + 1), ';')) {
    family.push_back(detail::parse_index_list(part, n, text));
  }
  std::vector<Bits> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::kParse, "duplicate basis in '" + std::string(text) + "'");
  }
  return Matroid::from_bases(n, std::move(family));
}

inline SubsetMask parse_subset(std::string_view text, std::size_t width) {
  return {detail::parse_index_list(text, width, text), width};
}

inline Bijection parse_bijection(std::string_view text) {
  if (text == "e") return Bijection{};
  std::vector<std::size_t> forward;
  for (std::string_view part : detail::split(text, ',')) {
    forward.push_back(detail::parse_index(part, text));
  }
  try {
    return Bijection(std::move(forward));
  } catch (const Error& e) {
    throw Error(Errc::kParse, "'" + std::string(text) + "' is not a permutation");
  }
}

}  // namespace matroid

#endif  // MATROID_LITERAL_HPP_
