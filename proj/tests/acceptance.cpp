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

// Acceptance criteria runner: one PASS/FAIL line per criterion, exit status is
// the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "petzlab/campaign.hpp"
#include "petzlab/channels.hpp"
#include "petzlab/inequalities.hpp"
#include "petzlab/recovery.hpp"
#include "petzlab/typicality.hpp"

using namespace petzlab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int k, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s [%d] %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int pick(CounterRng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }

}  // namespace

int main() {
  const auto scratch = std::filesystem::temp_directory_path() / "petzlab_acceptance";
  std::filesystem::remove_all(scratch);
  std::filesystem::create_directories(scratch);

  criterion(1, "Petz map recovers sigma from N(sigma)", [] {
    CounterRng rng(101, 0);
    double worst = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 200; ++i) {
      const int din = pick(rng, 2, 4), dout = pick(rng, 2, 4);
      const int env = pick(rng, (din + dout - 1) / dout, 4);
      const QuantumChannel n = random_channel(din, dout, env, rng);
      const DensityOperator sigma = random_density(din, din, rng);
      const Matrix out = petzlab::apply(petz_map(sigma, n), petzlab::apply(n, sigma.matrix()));
      worst = std::max(worst, max_abs(out - sigma.matrix()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return Outcome{worst <= 1e-8 && secs < 10, fmt("max deviation %.2e over 200 pairs", worst)};
  });

  criterion(2, "proved inequalities never fall below -1e-8", [] {
    const InequalityId ids[] = {InequalityId::kMonoChannel, InequalityId::kMonoPt,
                                InequalityId::kJointConvexity, InequalityId::kSsa,
                                InequalityId::kConcavity};
    std::string detail;
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (InequalityId id : ids) {
      const int count = 10000;
      long long bad = 0, errors = 0;
      double min_gap = INFINITY;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : bad, errors) reduction(min : min_gap)
      for (int i = 0; i < count; ++i) {
        CounterRng dims_rng(202 + static_cast<int>(id), i);
        const std::vector<int> dims{pick(dims_rng, 2, 4), pick(dims_rng, 2, 4), pick(dims_rng, 2, 4)};
        CounterRng rng = dims_rng.fork(1);
        try {
          const double gap = evaluate(id, sample_instance(id, "random", dims, rng)).gap;
          if (gap < -1e-8) ++bad;
          min_gap = std::min(min_gap, gap);
        } catch (const Error&) {
          ++errors;
        }
      }
      ok = ok && bad == 0 && errors == 0;
      detail += std::string(to_string(id)) + fmt(" min %.1e", min_gap) +
                (bad || errors ? fmt(" bad %.0f err %.0f", double(bad), double(errors)) : "") + "; ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 300;
    return Outcome{ok, detail + "5 x 10^4 instances, dims in {2,3,4}"};
  });

  criterion(3, "saturating instances certify at restart 0 with F >= 1 - 1e-8", [] {
    int good = 0, total = 0;
    double worst = 1.0;
    for (InequalityId id : {InequalityId::kMonoChannelRotated, InequalityId::kMonoPtRotated}) {
      for (const char* fam : {"markov", "equal"}) {
        for (int i = 0; i < 25; ++i) {
          CounterRng rng(303, total);
          const Instance inst = sample_instance(id, fam, {2, 2, 2}, rng);
          const InequalityReport r = evaluate(id, inst, {{}, rng(), {}});
          const double f = r.witness->achieved_root_fidelity * r.witness->achieved_root_fidelity;
          worst = std::min(worst, f);
          good += r.verdict == Verdict::kHolds && r.witness->best_restart == 0 && f >= 1 - 1e-8;
          ++total;
        }
      }
    }
    return Outcome{good == total, fmt("%.0f/%.0f certified, min F %.12f", good, total, worst)};
  });

  criterion(4, "rotated Petz certification rate on random qubit channels", [] {
    CampaignConfig cfg;
    cfg.master_seed = 404;
    cfg.checks = {InequalityId::kMonoChannelRotated};
    cfg.samples = 500;
    cfg.dims = {2, 2, 2};
    const CampaignSummary s = run_campaign(cfg);
    const CheckSummary& c = s.checks.at(0);
    const double rate = c.certification_rate.value_or(0.0);
    return Outcome{rate >= 0.9 && c.violated == 0,
                   fmt("rate %.3f, violated %.0f, inconclusive %.0f", rate, double(c.violated),
                       double(c.inconclusive))};
  });

  criterion(5, "reduction identities agree within 1e-8", [] {
    std::string detail;
    bool ok = true;
    for (InequalityId id : {InequalityId::kReductionCq, InequalityId::kReductionFidelity,
                            InequalityId::kReductionSsa}) {
      double worst = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : worst)
      for (int i = 0; i < 1000; ++i) {
        CounterRng rng(505 + static_cast<int>(id), i);
        const std::vector<int> dims{pick(rng, 2, 3), pick(rng, 2, 3), pick(rng, 2, 3)};
        const InequalityReport r = evaluate(id, sample_instance(id, "random", dims, rng));
        worst = std::max(worst, -r.gap);
      }
      ok = ok && worst <= 1e-8;
      detail += std::string(to_string(id)) + fmt(" %.1e; ", worst);
    }
    return Outcome{ok, detail + "10^3 each"};
  });

  criterion(6, "finite-difference root-fidelity slope vanishes linearly", [] {
    CounterRng rng(606, 0);
    const SpaceShape shape{{"A", 2}, {"B", 2}};
    double c_fit = 0, worst_ratio = 0;
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
      const DensityOperator sigma = random_density(4, 4, rng), rho = random_density(4, 4, rng);
      const double s3 = std::abs(fd_root_fidelity_slope(sigma, rho, shape, 1e-3));
      const double s4 = std::abs(fd_root_fidelity_slope(sigma, rho, shape, 1e-4));
      c_fit = std::max({c_fit, s3 / 1e-3, s4 / 1e-4});
      worst_ratio = std::max(worst_ratio, s3 > 0 ? s4 / s3 : 0.0);
      ok = ok && s4 <= s3 / 5;
    }
    return Outcome{ok && std::isfinite(c_fit),
                   fmt("C = %.3f, max slope(1e-4)/slope(1e-3) = %.4f", c_fit, worst_ratio)};
  });

  criterion(7, "typical mass matches binomial oracle; dense and exact sets agree", [] {
    const DensityOperator s = diagonal_density({0.75, 0.25});
    const double m1 = typical_mass(typical_projector(s, s, 0.5, 1, TypicalityPath::kExact), s);
    const double m200 = typical_mass(typical_projector(s, s, 0.1, 200, TypicalityPath::kExact), s);
    const long double c0 = -std::log2(0.75L);
    const long double h = 0.75L * c0 + 0.25L * 2.0L;
    const double oracle200 = static_cast<double>(oracle::binomial_mass(200, 0.75L, c0, 2.0L, h, 0.1L));
    bool sets_ok = true;
    CounterRng rng(707, 0);
    std::vector<std::pair<DensityOperator, DensityOperator>> pairs{{s, s}};
    for (int i = 0; i < 3; ++i) pairs.emplace_back(random_density(2, 2, rng), random_density(2, 2, rng));
    for (const auto& [rho, sigma] : pairs) {
      for (int n = 1; n <= 8; ++n) {
        const TypicalProjector d = typical_projector(rho, sigma, 0.1, n);
        const TypicalProjector e = typical_projector(rho, sigma, 0.1, n, TypicalityPath::kExact);
        sets_ok = sets_ok && d.accepted_types == e.accepted_types;
        // every dense string is accepted iff its type class is
        const auto& acc = *d.accepted_strings;
        for (std::size_t k = 0; k < acc.size(); ++k) {
          std::vector<int> counts(2, 0);
          for (int j = 0; j < n; ++j) ++counts[(k >> j) & 1];
          sets_ok = sets_ok && acc[k] == e.accepts_type(counts);
        }
      }
    }
    const bool ok = m200 >= 0.95 && std::abs(m200 - oracle200) <= 1e-12 &&
                    std::abs(m1 - 0.75) <= 1e-15 && sets_ok;
    return Outcome{ok, fmt("mass(200) %.15f, |oracle diff| %.1e, mass(1) %.17g", m200,
                           std::abs(m200 - oracle200), m1) +
                           (sets_ok ? ", sets agree n<=8" : ", SET MISMATCH")};
  });

  criterion(8, "fidelity lemmas", [] {
    std::string detail;
    bool ok = true;
    for (InequalityId id : {InequalityId::kLemmaDivergence, InequalityId::kLemmaConjugation, InequalityId::kLemmaResolution}) {
      double min_gap = INFINITY;
      for (int i = 0; i < 1000; ++i) {
        CounterRng rng(808 + static_cast<int>(id), i);
        const std::vector<int> dims{pick(rng, 2, 4)};
        const std::string fam = i % 4 == 0 ? "equal" : "random";
        const InequalityReport r = evaluate(id, sample_instance(id, fam, dims, rng));
        min_gap = std::min(min_gap, r.gap);
      }
      const double floor = id == InequalityId::kLemmaConjugation ? 1e-9 : 1e-8;
      ok = ok && min_gap >= -floor;
      detail += std::string(to_string(id)) + fmt(" min gap %.1e; ", min_gap);
    }
    return Outcome{ok, detail + "10^3 each"};
  });

  criterion(9, "CLI campaign output identical with --jobs 1 and --jobs 8", [&] {
    const std::string cli = PETZLAB_CLI_PATH;
    const std::string common =
        " campaign --seed 909 --samples 40 --budget-restarts 4 --budget-iters 60"
        " --checks mono_channel,mono_pt_rotated,bures_ssa,neglogf_joint,lemma_resolution,reduction_cq";
    const auto a = scratch / "jobs1", b = scratch / "jobs8";
    const int ra = std::system((cli + common + " --jobs 1 --out " + a.string() + " >/dev/null 2>&1").c_str());
    const int rb = std::system((cli + common + " --jobs 8 --out " + b.string() + " >/dev/null 2>&1").c_str());
    const std::string da = slurp(a / "detail.jsonl"), db = slurp(b / "detail.jsonl");
    const bool ok = ra == 0 && rb == 0 && !da.empty() && da == db;
    return Outcome{ok, fmt("%.0f bytes each, exit codes %.0f/%.0f", double(da.size()), ra, rb)};
  });

  criterion(10, "bures_ssa hunt: no unrefined or irreproducible candidates", [&] {
    CampaignConfig cfg;
    cfg.master_seed = 1010;
    cfg.checks = {InequalityId::kBuresSsa};
    cfg.samples = 10000;
    cfg.dims = {2, 2, 2};
    cfg.output_path = scratch / "hunt";
    const CampaignSummary s = hunt(cfg);
    const auto stored = CounterexampleStore::load(cfg.output_path / "counterexamples.jsonl");
    bool ok = static_cast<long long>(stored.size()) == s.candidates_persisted;
    for (const auto& c : stored) {
      ok = ok && c.refinement_history.size() == 4 && c.survived &&
           evaluate(c.report.id, c.instance).gap == c.report.gap;
    }
    const CheckSummary& cs = s.checks.at(0);
    ok = ok && cs.errors == 0 && cs.holds + cs.violated + cs.inconclusive == 10000;
    return Outcome{ok, fmt("persisted %.0f, dropped %.0f, min gap %.3e", double(s.candidates_persisted),
                           double(s.candidates_dropped), cs.min_gap)};
  });

  std::printf("%d failure(s)\n", failures);
  return failures;
}
