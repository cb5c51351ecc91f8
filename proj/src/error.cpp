// Copyright 2026 The petzlab Authors
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

#include "petzlab/error.hpp"

namespace petzlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonHermitian: return "NonHermitian";
    case ErrorKind::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::kNegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kTraceNotOne: return "TraceNotOne";
    case ErrorKind::kNegativeParameter: return "NegativeParameter";
    case ErrorKind::kCompletenessViolation: return "CompletenessViolation";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kSingularMarginal: return "SingularMarginal";
    case ErrorKind::kDimensionCap: return "DimensionCap";
    case ErrorKind::kSupportViolation: return "SupportViolation";
    case ErrorKind::kSingularState: return "SingularState";
    case ErrorKind::kFamilyNotResolution: return "FamilyNotResolution";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kIoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace petzlab
