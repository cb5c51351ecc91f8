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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "petzlab/counterexamples.hpp"
#include "petzlab/inequalities.hpp"
#include "petzlab/states.hpp"
#include "petzlab/tolerances.hpp"

namespace petzlab {

struct CampaignConfig {
  std::uint64_t master_seed = 1;
  std::vector<InequalityId> checks;
  long long samples = 100;
  std::vector<int> dims{2, 2, 2};
  std::string family = "random";
  OptimizerBudget budget{};
  std::optional<Tolerances> tolerances;
  VerdictPolicy policy{};
  /// Directory receiving detail.jsonl, summary.csv, counterexamples.jsonl and
  /// config.json. Empty: nothing is written.
  std::filesystem::path output_path;
  /// 0 selects the OpenMP default.
  int jobs = 0;
};

/// Throws kInvalidConfig. `allow_empty` admits samples == 0 (hunt).
void validate(const CampaignConfig& cfg, bool allow_empty = false);

struct CheckSummary {
  InequalityId id{};
  long long samples = 0;
  long long holds = 0;
  long long violated = 0;
  long long inconclusive = 0;
  long long errors = 0;  // evaluation errors, counted as inconclusive
  double min_gap = 0.0;
  std::optional<double> certification_rate;  // rotated checks only
};

struct CampaignSummary {
  std::vector<CheckSummary> checks;
  double wall_time_s = 0.0;
  CampaignConfig config;
  long long candidates_persisted = 0;
  long long candidates_dropped = 0;
  std::vector<CounterexampleCandidate> surviving;
  /// A theorem or identity produced a violated verdict.
  bool proved_violation() const;
};

struct SampleResult {
  InequalityReport report;
  std::optional<CounterexampleCandidate> candidate;
};

/// One sample, keyed by (master_seed, sample_index, check); pure.
SampleResult run_sample(const CampaignConfig& cfg, InequalityId id, std::uint64_t sample_index);

/// OpenMP over samples; output independent of the worker count.
CampaignSummary run_campaign(const CampaignConfig& cfg);
/// Same results computed on the calling thread only.
CampaignSummary run_campaign_serial(const CampaignConfig& cfg);
/// Conjecture checks only; refines each violated verdict before persisting.
CampaignSummary hunt(const CampaignConfig& cfg);

void write_summary_csv(const CampaignSummary& s, std::ostream& out);
Json config_to_json(const CampaignConfig& cfg);

struct SweepRow {
  int n;
  double typical_mass;
  long long shell_count;
  double hoeffding_bound;
};

/// exact = false uses the dense projector and throws kDimensionCap beyond it.
std::vector<SweepRow> typicality_sweep(const DensityOperator& rho, const PsdOperator& sigma,
                                       double delta, const std::vector<int>& n_list, bool exact);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace petzlab
