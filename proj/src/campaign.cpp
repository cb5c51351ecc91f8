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

#include "petzlab/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "petzlab/typicality.hpp"

namespace petzlab {

void validate(const CampaignConfig& cfg, bool allow_empty) {
  if (cfg.checks.empty()) throw Error(ErrorKind::kInvalidConfig, "no checks selected");
  if (cfg.samples < (allow_empty ? 0 : 1)) {
    throw Error(ErrorKind::kInvalidConfig, "samples must be at least 1");
  }
  if (cfg.dims.empty()) throw Error(ErrorKind::kInvalidConfig, "dims must not be empty");
  for (int d : cfg.dims) {
    if (d < 2) throw Error(ErrorKind::kInvalidConfig, "each dimension must be at least 2");
  }
  if (cfg.budget.restarts < 1 || cfg.budget.iterations < 0) {
    throw Error(ErrorKind::kInvalidConfig, "optimizer budget must have at least one restart");
  }
  if (cfg.jobs < 0) throw Error(ErrorKind::kInvalidConfig, "jobs must be non-negative");
}

bool CampaignSummary::proved_violation() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckSummary& c) { return is_proved(c.id) && c.violated > 0; });
}

SampleResult run_sample(const CampaignConfig& cfg, InequalityId id, std::uint64_t sample_index) {
  CounterRng rng = CounterRng(cfg.master_seed, sample_index).fork(static_cast<std::uint64_t>(id) + 1);
  EvalOptions opts;
  opts.budget = cfg.budget;
  opts.policy = cfg.policy;
  opts.seed = rng();

  SampleResult out;
  Instance inst;
  try {
    inst = sample_instance(id, cfg.family, cfg.dims, rng);
    out.report = evaluate(id, inst, opts);
  } catch (const Error& e) {
    out.report = InequalityReport{};
    out.report.id = id;
    out.report.lhs = out.report.rhs = out.report.gap = std::numeric_limits<double>::quiet_NaN();
    out.report.verdict = Verdict::kInconclusive;
    out.report.note = std::string("error: ") + e.what();
  }
  out.report.digest.master_seed = cfg.master_seed;
  out.report.digest.sample_index = sample_index;
  out.report.digest.dims = cfg.dims;
  out.report.digest.sampler = cfg.family;

  if (is_conjecture(id) && out.report.verdict == Verdict::kViolated) {
    out.candidate = refine_candidate(out.report, inst, opts);
  }
  return out;
}

namespace {

bool is_rotated(InequalityId id) {
  return id == InequalityId::kMonoChannelRotated || id == InequalityId::kMonoPtRotated;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::ofstream open_file(const std::filesystem::path& p, std::ios::openmode mode = std::ios::trunc) {
  std::ofstream f(p, std::ios::out | mode);
  if (!f) throw Error(ErrorKind::kIoFailure, "cannot open " + p.string());
  return f;
}

CampaignSummary run_impl(const CampaignConfig& cfg, bool parallel) {
  const auto t0 = std::chrono::steady_clock::now();
  const long long per_check = cfg.samples;
  const long long total = per_check * static_cast<long long>(cfg.checks.size());
  std::vector<SampleResult> results(static_cast<std::size_t>(total));
  const Tolerances tol = cfg.tolerances.value_or(current_tolerances());

  if (parallel) {
    const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
      const ToleranceScope scope(tol);
#pragma omp for schedule(dynamic, 4)
      for (long long k = 0; k < total; ++k) {
        results[k] = run_sample(cfg, cfg.checks[k / per_check], static_cast<std::uint64_t>(k % per_check));
      }
    }
  } else {
    const ToleranceScope scope(tol);
    for (long long k = 0; k < total; ++k) {
      results[k] = run_sample(cfg, cfg.checks[k / per_check], static_cast<std::uint64_t>(k % per_check));
    }
  }

  CampaignSummary summary;
  summary.config = cfg;
  for (std::size_t c = 0; c < cfg.checks.size(); ++c) {
    CheckSummary cs;
    cs.id = cfg.checks[c];
    cs.samples = per_check;
    cs.min_gap = std::numeric_limits<double>::infinity();
    long long certified = 0;
    for (long long i = 0; i < per_check; ++i) {
      const auto& r = results[c * per_check + i].report;
      switch (r.verdict) {
        case Verdict::kHolds:
          ++cs.holds;
          break;
        case Verdict::kViolated:
          ++cs.violated;
          break;
        case Verdict::kInconclusive:
          ++cs.inconclusive;
          break;
      }
      if (r.note.rfind("error: ", 0) == 0) ++cs.errors;
      if (!std::isnan(r.gap)) cs.min_gap = std::min(cs.min_gap, r.gap);
      if (r.witness && r.witness->certified) ++certified;
    }
    if (is_rotated(cs.id) && per_check > 0) {
      cs.certification_rate = static_cast<double>(certified) / static_cast<double>(per_check);
    }
    summary.checks.push_back(cs);
  }
  for (const auto& r : results) {
    if (!r.candidate) continue;
    if (r.candidate->survived) {
      summary.surviving.push_back(*r.candidate);
    } else {
      ++summary.candidates_dropped;
    }
  }
  summary.candidates_persisted = static_cast<long long>(summary.surviving.size());
  summary.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (!cfg.output_path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_path, ec);
    if (ec) throw Error(ErrorKind::kIoFailure, "cannot create " + cfg.output_path.string());
    {
      auto detail = open_file(cfg.output_path / "detail.jsonl");
      for (const auto& r : results) detail << to_json(r.report).dump() << '\n';
      if (!detail) throw Error(ErrorKind::kIoFailure, "writing detail.jsonl failed");
    }
    {
      auto csv = open_file(cfg.output_path / "summary.csv");
      write_summary_csv(summary, csv);
      if (!csv) throw Error(ErrorKind::kIoFailure, "writing summary.csv failed");
    }
    {
      auto conf = open_file(cfg.output_path / "config.json");
      conf << config_to_json(cfg).dump(2) << '\n';
    }
    CounterexampleStore store(cfg.output_path / "counterexamples.jsonl");
    for (const auto& c : summary.surviving) store.append(c);
  }
  return summary;
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  return run_impl(cfg, true);
}

CampaignSummary run_campaign_serial(const CampaignConfig& cfg) {
  validate(cfg);
  return run_impl(cfg, false);
}

CampaignSummary hunt(const CampaignConfig& cfg) {
  validate(cfg, true);
  for (auto id : cfg.checks) {
    if (!is_conjecture(id)) {
      throw Error(ErrorKind::kInvalidConfig,
                  "hunt accepts conjecture checks only, got " + std::string(to_string(id)));
    }
  }
  return run_impl(cfg, true);
}

void write_summary_csv(const CampaignSummary& s, std::ostream& out) {
  out << "check,samples,holds,violated,inconclusive,min_gap,certification_rate,wall_time_s\n";
  for (const auto& c : s.checks) {
    out << to_string(c.id) << ',' << c.samples << ',' << c.holds << ',' << c.violated << ','
        << c.inconclusive << ',' << (c.samples > 0 ? format_real(c.min_gap) : "") << ','
        << (c.certification_rate ? format_real(*c.certification_rate) : "") << ','
        << format_real(s.wall_time_s) << '\n';
  }
}

Json config_to_json(const CampaignConfig& cfg) {
  Json j;
  j["master_seed"] = cfg.master_seed;
  Json checks = Json::array();
  for (auto id : cfg.checks) checks.push_back(to_string(id));
  j["checks"] = std::move(checks);
  j["samples"] = cfg.samples;
  j["dims"] = cfg.dims;
  j["family"] = cfg.family;
  j["budget"] = {{"restarts", cfg.budget.restarts}, {"iterations", cfg.budget.iterations}};
  const Tolerances t = cfg.tolerances.value_or(Tolerances{});
  j["tolerances"] = {{"herm_rel", t.herm_rel},       {"psd_rel", t.psd_rel},
                     {"support_rel", t.support_rel}, {"trace_tol", t.trace_tol},
                     {"supp_viol_tol", t.supp_viol_tol}, {"cptp_tol", t.cptp_tol}};
  j["verdict_tol"] = cfg.policy.verdict_tol;
  j["violation_floor"] = cfg.policy.violation_floor;
  j["version"] = kVersionTag;
  return j;
}

std::vector<SweepRow> typicality_sweep(const DensityOperator& rho, const PsdOperator& sigma,
                                       double delta, const std::vector<int>& n_list, bool exact) {
  std::vector<SweepRow> rows;
  const TypicalityPath path = exact ? TypicalityPath::kExact : TypicalityPath::kDense;
  for (int n : n_list) {
    const TypicalProjector tp = typical_projector(rho, sigma, delta, n, path);
    const EigenvalueShells shells = eigenvalue_shells(sigma, n, rho, delta, TypicalityPath::kExact);
    rows.push_back({n, typical_mass(tp, rho), static_cast<long long>(shells.shells.size()),
                    hoeffding_bound(tp)});
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "n,typical_mass,shell_count,hoeffding_bound\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_real(r.typical_mass) << ',' << r.shell_count << ','
        << format_real(r.hoeffding_bound) << '\n';
  }
}

}  // namespace petzlab
