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

#pragma once

// JSON codecs for reports, instances and operators. Operators are stored as
// {rows, cols, data} with data the base64 of row-major interleaved (re, im)
// little-endian float64 pairs. Non-finite reals are written as the strings
// "inf", "-inf" and "nan".

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "petzlab/inequalities.hpp"
#include "petzlab/opmath.hpp"

namespace petzlab {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "petzlab.report/1";
inline constexpr std::string_view kCandidateSchema = "petzlab.candidate/1";

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
/// Throws kIoFailure on malformed input.
std::vector<std::uint8_t> base64_decode(const std::string& text);

Json operator_to_json(const Matrix& m);
Matrix operator_from_json(const Json& j);

Json real_to_json(double v);
double real_from_json(const Json& j);

Json to_json(const RotationWitness& w);
RotationWitness witness_from_json(const Json& j);

Json to_json(const InstanceDigest& d);
InstanceDigest digest_from_json(const Json& j);

Json to_json(const InequalityReport& r);
InequalityReport report_from_json(const Json& j);

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

}  // namespace petzlab
