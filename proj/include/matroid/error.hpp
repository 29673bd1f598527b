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

#ifndef MATROID_ERROR_HPP_
#define MATROID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace matroid {

enum class Errc {
  kEmptyFamily,
  kUnequalCardinality,
  kExchangeViolation,
  kWidthMismatch,
  kGroundSetTooLarge,
  kOutOfRange,
  kParse,
  kSizeMismatch,
  kNotAFreeProduct,
  kHypothesis,
  kInvariant,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kEmptyFamily: return "EmptyFamily";
    case Errc::kUnequalCardinality: return "UnequalCardinality";
    case Errc::kExchangeViolation: return "ExchangeViolation";
    case Errc::kWidthMismatch: return "WidthMismatch";
    case Errc::kGroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kParse: return "ParseError";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kNotAFreeProduct: return "NotAFreeProduct";
    case Errc::kHypothesis: return "HypothesisViolation";
    case Errc::kInvariant: return "InvariantViolation";
  }
  return "Unknown";
}

// All library failures are reported through this exception; code() tells
// callers which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace matroid

#endif  // MATROID_ERROR_HPP_
