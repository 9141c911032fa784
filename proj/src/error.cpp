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

#include "lipkit/error.hpp"

namespace lipkit {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kAsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::kNegativeDistance: return "NegativeDistance";
    case ErrorCode::kZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::kNonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::kTriangleViolation: return "TriangleViolation";
    case ErrorCode::kExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::kSingletonSpace: return "SingletonSpace";
    case ErrorCode::kNotVanishingAtBase: return "NotVanishingAtBase";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kNonUnitDirection: return "NonUnitDirection";
    case ErrorCode::kNotInClass: return "NotInClass";
    case ErrorCode::kRatioTooLarge: return "RatioTooLarge";
    case ErrorCode::kUnbalancedMolecule: return "UnbalancedMolecule";
    case ErrorCode::kNonInjectiveMap: return "NonInjectiveMap";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lipkit
