// Copyright 2026 The qinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qinv/error.h"

namespace qinv {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kZeroVector:
            return "ZeroVector";
        case ErrorCode::kTooLarge:
            return "TooLarge";
        case ErrorCode::kUnnormalized:
            return "Unnormalized";
        case ErrorCode::kBadSubset:
            return "BadSubset";
        case ErrorCode::kDimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::kIndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::kSameIndex:
            return "SameIndex";
        case ErrorCode::kHermitianViolation:
            return "HermitianViolation";
        case ErrorCode::kNotUnitary:
            return "NotUnitary";
        case ErrorCode::kOddQubitCount:
            return "OddQubitCount";
        case ErrorCode::kEvenQubitCount:
            return "EvenQubitCount";
        case ErrorCode::kWrongQubitCount:
            return "WrongQubitCount";
        case ErrorCode::kInternalDisagreement:
            return "InternalDisagreement";
        case ErrorCode::kConditioningFailure:
            return "ConditioningFailure";
        case ErrorCode::kInvariantNotApplicable:
            return "InvariantNotApplicable";
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kParseError:
            return "ParseError";
        case ErrorCode::kIoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace qinv
