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

#include "petzlab/counterexamples.hpp"

#include "petzlab/entropic.hpp"
#include "petzlab/tolerances.hpp"

namespace petzlab {

CounterexampleCandidate refine_candidate(const InequalityReport& baseline, const Instance& inst,
                                         const EvalOptions& opts) {
  CounterexampleCandidate c;
  c.report = baseline;
  c.instance = inst;
  c.refinement_history.push_back({"baseline", true, baseline.gap, baseline.verdict, ""});
  bool survived = baseline.verdict == Verdict::kViolated;

  {
    const ToleranceScope scope(current_tolerances().tightened(100.0));
    RefinementStep step{"tightened_100x", true, std::nullopt, std::nullopt, ""};
    try {
      const InequalityReport r = evaluate(baseline.id, inst, opts);
      step.gap = r.gap;
      step.verdict = r.verdict;
      survived = survived && r.verdict == Verdict::kViolated;
    } catch (const Error& e) {
      step.note = e.what();
      survived = false;
    }
    c.refinement_history.push_back(std::move(step));
  }

  c.refinement_history.push_back(
      {"extended_precision", false, std::nullopt, std::nullopt, "no extended-precision eigensolver"});

  RefinementStep oracle{"classical_oracle", false, std::nullopt, std::nullopt, ""};
  if (is_conjecture(baseline.id)) {
    if (const auto fe = classical_family(baseline.id, inst)) {
      const InequalityReport r = baseline.id <= InequalityId::kBuresChannel
                                     ? bures_report(baseline.id, *fe, opts.policy)
                                     : neglogf_report(baseline.id, *fe, opts.policy);
      oracle.available = true;
      oracle.gap = r.gap;
      oracle.verdict = r.verdict;
      survived = survived && r.verdict == Verdict::kViolated;
    } else {
      oracle.note = "instance is not diagonal";
    }
  }
  c.refinement_history.push_back(std::move(oracle));
  c.survived = survived;
  return c;
}

Json to_json(const RefinementStep& s) {
  Json j;
  j["stage"] = s.stage;
  j["available"] = s.available;
  j["gap"] = s.gap ? real_to_json(*s.gap) : Json(nullptr);
  j["verdict"] = s.verdict ? Json(to_string(*s.verdict)) : Json(nullptr);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

RefinementStep refinement_step_from_json(const Json& j) {
  RefinementStep s;
  s.stage = j.at("stage").get<std::string>();
  s.available = j.at("available").get<bool>();
  if (!j.at("gap").is_null()) s.gap = real_from_json(j.at("gap"));
  if (!j.at("verdict").is_null()) s.verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (j.contains("note")) s.note = j.at("note").get<std::string>();
  return s;
}

Json to_json(const CounterexampleCandidate& c) {
  Json j;
  j["schema"] = kCandidateSchema;
  j["report"] = to_json(c.report);
  j["instance"] = to_json(c.instance);
  Json h = Json::array();
  for (const auto& s : c.refinement_history) h.push_back(to_json(s));
  j["refinement_history"] = std::move(h);
  j["survived"] = c.survived;
  return j;
}

CounterexampleCandidate candidate_from_json(const Json& j) {
  try {
    CounterexampleCandidate c;
    c.report = report_from_json(j.at("report"));
    c.instance = instance_from_json(j.at("instance"));
    for (const auto& s : j.at("refinement_history")) {
      c.refinement_history.push_back(refinement_step_from_json(s));
    }
    c.survived = j.at("survived").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kIoFailure, std::string("malformed candidate: ") + e.what());
  }
}

CounterexampleStore::CounterexampleStore(const std::filesystem::path& path)
    : path_(path), out_(path, std::ios::app) {
  if (!out_) throw Error(ErrorKind::kIoFailure, "cannot open " + path.string());
}

void CounterexampleStore::append(const CounterexampleCandidate& c) {
  const std::string line = to_json(c).dump();
  std::lock_guard<std::mutex> lock(mu_);
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw Error(ErrorKind::kIoFailure, "write to " + path_.string() + " failed");
  ++appended_;
}

std::size_t CounterexampleStore::appended() const {
  std::lock_guard<std::mutex> lock(mu_);
  return appended_;
}

std::vector<CounterexampleCandidate> CounterexampleStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoFailure, "cannot open " + path.string());
  std::vector<CounterexampleCandidate> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(candidate_from_json(Json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kIoFailure, std::string("malformed line: ") + e.what());
    }
  }
  return out;
}

}  // namespace petzlab
