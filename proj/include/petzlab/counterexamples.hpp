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

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "petzlab/inequalities.hpp"
#include "petzlab/serialize.hpp"

namespace petzlab {

struct RefinementStep {
  std::string stage;  // baseline | tightened_100x | extended_precision | classical_oracle
  bool available = true;
  std::optional<double> gap;
  std::optional<Verdict> verdict;
  std::string note;
};

struct CounterexampleCandidate {
  InequalityReport report;
  Instance instance;
  std::vector<RefinementStep> refinement_history;
  /// Every available re-evaluation still reports a violation.
  bool survived = false;
};

/// Re-evaluates a violated report: once with clip and support cuts tightened
/// 100x, then (no extended-precision eigensolver is linked, which is recorded)
/// with the closed-form classical oracle when the instance is diagonal.
CounterexampleCandidate refine_candidate(const InequalityReport& baseline, const Instance& inst,
                                         const EvalOptions& opts);

Json to_json(const RefinementStep& s);
RefinementStep refinement_step_from_json(const Json& j);
Json to_json(const CounterexampleCandidate& c);
CounterexampleCandidate candidate_from_json(const Json& j);

/// Append-only JSON-lines store; appends are serialized by a mutex.
class CounterexampleStore {
 public:
  /// Opens (creating if needed) for append. Throws kIoFailure.
  explicit CounterexampleStore(const std::filesystem::path& path);

  void append(const CounterexampleCandidate& c);
  std::size_t appended() const;
  const std::filesystem::path& path() const { return path_; }

  /// Reads every candidate of a store file.
  static std::vector<CounterexampleCandidate> load(const std::filesystem::path& path);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  mutable std::mutex mu_;
  std::size_t appended_ = 0;
};

}  // namespace petzlab
