// Copyright 2026 The lipkit Authors
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

#ifndef LIPKIT_ERROR_HPP_
#define LIPKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipkit {

// Numeric values are shared with lipkit_status in lipkit.h.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kAsymmetricMatrix = 3,
  kNegativeDistance = 4,
  kZeroOffDiagonal = 5,
  kNonzeroDiagonal = 6,
  kTriangleViolation = 7,
  kExponentOutOfRange = 8,
  kSingletonSpace = 9,
  kNotVanishingAtBase = 10,
  kBoundViolated = 11,
  kEmptySubset = 12,
  kDegeneratePair = 13,
  kNonUnitDirection = 14,
  kNotInClass = 15,
  kRatioTooLarge = 16,
  kUnbalancedMolecule = 17,
  kNonInjectiveMap = 18,
  kEmptySet = 19,
  kInvalidConfig = 20,
  kInvariantViolation = 21,
  kParseError = 22,
  kIoError = 23,
  kInternal = 24,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        indices_(std::move(indices)) {}

  ErrorCode code() const { return code_; }
  // Point indices that locate the failure, e.g. (i, j, k) for a triangle
  // violation d(i,j) > d(i,k) + d(k,j).
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace lipkit

#endif  // LIPKIT_ERROR_HPP_
