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

// petzlab command-line front end.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "petzlab/campaign.hpp"
#include "petzlab/inequalities.hpp"
#include "petzlab/serialize.hpp"

namespace {

using namespace petzlab;

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kInvariant = 3 };

struct CampaignFlags {
  std::uint64_t seed = 1;
  long long samples = 100;
  std::vector<int> dims{2, 2, 2};
  std::vector<std::string> checks;
  std::string family = "random";
  int restarts = 20;
  int iters = 300;
  std::string out;
  int jobs = 0;
  double psd_rel = 0.0;
  double support_rel = 0.0;
};

void add_campaign_flags(CLI::App* cmd, CampaignFlags& f, bool with_checks) {
  cmd->add_option("--seed", f.seed, "master seed")->envname("PETZLAB_SEED");
  cmd->add_option("--samples", f.samples, "samples per check")->envname("PETZLAB_SAMPLES");
  cmd->add_option("--dims", f.dims, "per-factor dimensions, comma separated")
      ->delimiter(',')
      ->envname("PETZLAB_DIMS");
  if (with_checks) {
    cmd->add_option("--checks", f.checks, "check ids, comma separated")
        ->delimiter(',')
        ->envname("PETZLAB_CHECKS");
  }
  cmd->add_option("--family", f.family, "instance family: random, equal, markov, classical")
      ->envname("PETZLAB_FAMILY");
  cmd->add_option("--budget-restarts", f.restarts, "optimizer restarts")
      ->envname("PETZLAB_BUDGET_RESTARTS");
  cmd->add_option("--budget-iters", f.iters, "optimizer iterations per restart")
      ->envname("PETZLAB_BUDGET_ITERS");
  cmd->add_option("--out", f.out, "output directory")->envname("PETZLAB_OUT");
  cmd->add_option("--jobs", f.jobs, "worker threads (0: auto)")->envname("PETZLAB_JOBS");
  cmd->add_option("--psd-rel", f.psd_rel, "override the relative PSD clip tolerance")
      ->envname("PETZLAB_PSD_REL");
  cmd->add_option("--support-rel", f.support_rel, "override the relative support cut")
      ->envname("PETZLAB_SUPPORT_REL");
}

CampaignConfig to_config(const CampaignFlags& f, const std::vector<std::string>& default_checks) {
  CampaignConfig cfg;
  cfg.master_seed = f.seed;
  cfg.samples = f.samples;
  cfg.dims = f.dims;
  cfg.family = f.family;
  cfg.budget = {f.restarts, f.iters};
  cfg.output_path = f.out;
  cfg.jobs = f.jobs;
  for (const auto& c : f.checks.empty() ? default_checks : f.checks) {
    cfg.checks.push_back(parse_inequality_id(c));
  }
  if (f.psd_rel > 0.0 || f.support_rel > 0.0) {
    Tolerances t;
    if (f.psd_rel > 0.0) t.psd_rel = f.psd_rel;
    if (f.support_rel > 0.0) t.support_rel = f.support_rel;
    cfg.tolerances = t;
  }
  return cfg;
}

int report_summary(const CampaignSummary& s) {
  write_summary_csv(s, std::cout);
  std::cerr << "candidates persisted: " << s.candidates_persisted
            << ", dropped by refinement: " << s.candidates_dropped << '\n';
  if (s.proved_violation()) {
    std::cerr << "internal invariant violated: a proved statement reported a violation\n";
    return kInvariant;
  }
  return kOk;
}

DensityOperator diag_state(const std::vector<double>& d) { return diagonal_density(d); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"petzlab: Petz recovery and relative-entropy inequality workbench"};
  app.require_subcommand(1);

  CampaignFlags campaign_flags;
  auto* campaign = app.add_subcommand("campaign", "seeded sampling campaign over checks");
  add_campaign_flags(campaign, campaign_flags, true);

  CampaignFlags hunt_flags;
  auto* hunt_cmd = app.add_subcommand("hunt", "counterexample search over conjecture checks");
  add_campaign_flags(hunt_cmd, hunt_flags, true);

  CampaignFlags lemma_flags;
  lemma_flags.dims = {3};
  auto* lemmas = app.add_subcommand("lemmas", "fidelity lemma suite (divergence, conjugation, resolution)");
  add_campaign_flags(lemmas, lemma_flags, false);

  std::vector<double> rho_diag{0.75, 0.25};
  std::vector<double> sigma_diag{0.75, 0.25};
  double delta = 0.1;
  std::vector<int> n_list{25, 50, 100, 200};
  bool exact = false;
  std::string typ_out;
  auto* typ = app.add_subcommand("typicality", "typical-mass sweep over n");
  typ->add_option("--rho-diag", rho_diag, "eigenvalues of rho")->delimiter(',')->envname("PETZLAB_RHO_DIAG");
  typ->add_option("--sigma-diag", sigma_diag, "eigenvalues of sigma")
      ->delimiter(',')
      ->envname("PETZLAB_SIGMA_DIAG");
  typ->add_option("--delta", delta, "typicality window in bits")->envname("PETZLAB_DELTA");
  typ->add_option("--n-list", n_list, "block lengths")->delimiter(',')->envname("PETZLAB_N_LIST");
  typ->add_flag("--exact", exact, "type-class path (no dimension cap)")->envname("PETZLAB_EXACT");
  typ->add_option("--out", typ_out, "CSV file (default stdout)")->envname("PETZLAB_OUT");

  CampaignFlags opt_flags;
  opt_flags.dims = {2, 2, 2};
  std::string opt_check = "mono_channel_rotated";
  auto* opt = app.add_subcommand("petz-optimize", "rotated Petz witness search on one instance");
  opt->add_option("--seed", opt_flags.seed, "instance seed")->envname("PETZLAB_SEED");
  opt->add_option("--dims", opt_flags.dims, "instance dimensions")->delimiter(',')->envname("PETZLAB_DIMS");
  opt->add_option("--family", opt_flags.family, "instance family")->envname("PETZLAB_FAMILY");
  opt->add_option("--check", opt_check, "mono_channel_rotated or mono_pt_rotated");
  opt->add_option("--budget-restarts", opt_flags.restarts, "optimizer restarts")
      ->envname("PETZLAB_BUDGET_RESTARTS");
  opt->add_option("--budget-iters", opt_flags.iters, "iterations per restart")
      ->envname("PETZLAB_BUDGET_ITERS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*campaign) {
      const CampaignConfig cfg = to_config(
          campaign_flags, {"mono_channel", "mono_pt", "joint_convexity", "ssa", "concavity"});
      return report_summary(run_campaign(cfg));
    }
    if (*hunt_cmd) {
      return report_summary(hunt(to_config(hunt_flags, {"bures_ssa"})));
    }
    if (*lemmas) {
      return report_summary(run_campaign(to_config(lemma_flags, {"lemma_divergence", "lemma_conjugation", "lemma_resolution"})));
    }
    if (*typ) {
      const auto rows = typicality_sweep(diag_state(rho_diag), diag_state(sigma_diag), delta, n_list, exact);
      if (typ_out.empty()) {
        write_sweep_csv(rows, std::cout);
      } else {
        std::ofstream f(typ_out);
        if (!f) throw Error(ErrorKind::kIoFailure, "cannot open " + typ_out);
        write_sweep_csv(rows, f);
      }
      return kOk;
    }
    if (*opt) {
      const InequalityId id = parse_inequality_id(opt_check);
      if (id != InequalityId::kMonoChannelRotated && id != InequalityId::kMonoPtRotated) {
        throw Error(ErrorKind::kInvalidConfig, "--check must name a rotated check");
      }
      CampaignConfig cfg = to_config(opt_flags, {opt_check});
      cfg.samples = 1;
      validate(cfg);
      const SampleResult r = run_sample(cfg, id, 0);
      std::cout << to_json(r.report).dump(2) << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "petzlab: " << e.what() << '\n';
    return e.kind() == ErrorKind::kIoFailure ? kIo : kUsage;
  }
  return kUsage;
}
