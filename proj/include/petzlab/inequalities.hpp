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

// Checkers for the entropy inequalities, their remainder-term refinements and
// conjectures, the reduction identities between them, and three fidelity
// lemmas. Every checker returns an InequalityReport with a verdict.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "petzlab/channels.hpp"
#include "petzlab/opmath.hpp"
#include "petzlab/recovery.hpp"
#include "petzlab/rng.hpp"
#include "petzlab/states.hpp"

namespace petzlab {

inline constexpr std::string_view kVersionTag = "petzlab-0.1.0";

enum class InequalityId {
  kMonoChannel,
  kMonoPt,
  kJointConvexity,
  kSsa,
  kConcavity,
  kMonoChannelRotated,
  kMonoPtRotated,
  kBuresSsa,
  kBuresConcavity,
  kBuresPt,
  kBuresJoint,
  kBuresChannel,
  kNegLogFChannel,
  kNegLogFPt,
  kNegLogFJoint,
  kNegLogFSsa,
  kNegLogFConcavity,
  kLemmaDivergence,
  kLemmaConjugation,
  kLemmaResolution,
  kReductionCq,
  kReductionFidelity,
  kReductionSsa,
};

std::string_view to_string(InequalityId id);
/// Throws kInvalidConfig for an unknown name.
InequalityId parse_inequality_id(std::string_view name);
const std::vector<InequalityId>& all_inequality_ids();
/// Proved inequalities and exact identities: a violated verdict is a bug.
bool is_proved(InequalityId id);
/// Unrotated Petz remainders (the bures_* and neglogf_* checks).
bool is_conjecture(InequalityId id);

enum class Verdict { kHolds, kViolated, kInconclusive };
enum class RemainderKind { kNegLogF, kBuresSq, kNone };
std::string_view to_string(Verdict v);
std::string_view to_string(RemainderKind k);
Verdict parse_verdict(std::string_view s);
RemainderKind parse_remainder_kind(std::string_view s);

struct VerdictPolicy {
  double verdict_tol = 1e-8;
  double violation_floor = 1e-5;
};

Verdict classify(double gap, const VerdictPolicy& policy = {});

struct InstanceDigest {
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
  std::vector<int> dims;
  std::string sampler;
  std::string version{kVersionTag};
};

struct InequalityReport {
  InequalityId id{};
  double lhs = 0.0;  // bits
  double rhs = 0.0;  // bits (Bures checks: D_B^2)
  double gap = 0.0;  // lhs - rhs
  RemainderKind remainder_kind = RemainderKind::kNone;
  double remainder = 0.0;
  /// Bures checks only: lhs in nats minus D_B^2.
  std::optional<double> gap_nats;
  std::optional<RotationWitness> witness;
  Verdict verdict = Verdict::kHolds;
  InstanceDigest digest;
  std::string note;
};

// --- instances -------------------------------------------------------------------

/// Operators of one sampled instance. Which fields are populated depends on the
/// family: rho/sigma (two-state checks; rho holds omega for SSA-type checks),
/// probs with rho_members/sigma_members (ensembles), kraus (channel checks),
/// operators (W for lemma_conjugation, the resolution {W_d} for lemma_resolution).
struct Instance {
  std::string family;
  SpaceShape shape;
  std::optional<Matrix> rho;
  std::optional<Matrix> sigma;
  std::vector<double> probs;
  std::vector<Matrix> rho_members;
  std::vector<Matrix> sigma_members;
  std::vector<Matrix> kraus;
  std::vector<Matrix> operators;

  /// True when every operator is diagonal and the channel (if any) maps
  /// diagonal inputs to diagonal outputs.
  bool is_classical(double tol = 1e-14) const;
};

/// Families: "random", "equal" (rho = sigma or identical members), "markov"
/// (saturating instances), "classical" (all diagonal). dims are per-factor and
/// padded with 2 when short; see README for the per-check layout.
Instance sample_instance(InequalityId id, const std::string& family, const std::vector<int>& dims,
                         CounterRng& rng);

struct EvalOptions {
  OptimizerBudget budget{};
  std::uint64_t seed = 0;
  VerdictPolicy policy{};
};

/// Dispatches to the typed checker for `id`. Digest fields are left for the caller.
InequalityReport evaluate(InequalityId id, const Instance& inst, const EvalOptions& opts = {});

// --- typed checkers ----------------------------------------------------------------

/// Entropic gap and root fidelity of the unrotated Petz recovery for one of
/// the five families; the shared core of the Bures and -log F remainders.
struct FamilyEvaluation {
  double delta_bits;
  double root_fidelity;  // probability-averaged for ensemble families
};

FamilyEvaluation family_channel(const DensityOperator& rho, const PsdOperator& sigma,
                                const QuantumChannel& n);
/// N = Tr_A on shape {A, B}.
FamilyEvaluation family_pt(const DensityOperator& rho_ab, const PsdOperator& sigma_ab,
                           const SpaceShape& shape);
FamilyEvaluation family_joint_convexity(const std::vector<double>& probs,
                                        const std::vector<DensityOperator>& rhos,
                                        const std::vector<DensityOperator>& sigmas);
/// omega on shape {A, B, C}; recovery omega_AC^{1/2} omega_C^{-1/2} (.) omega_C^{-1/2} omega_AC^{1/2}.
FamilyEvaluation family_ssa(const DensityOperator& omega, const SpaceShape& shape);
FamilyEvaluation family_concavity(const Ensemble& e, const SpaceShape& shape);

/// omega_AC^{1/2} omega_C^{-1/2} omega_BC omega_C^{-1/2} omega_AC^{1/2} on the
/// full shape, for arbitrary labels a, b, c of a three-factor shape.
Matrix ssa_petz_output(const PsdOperator& omega, const SpaceShape& shape, const std::string& a,
                       const std::string& b, const std::string& c);

InequalityReport check_mono_channel(const DensityOperator& rho, const PsdOperator& sigma,
                                    const QuantumChannel& n, const VerdictPolicy& policy = {});
InequalityReport check_mono_pt(const DensityOperator& rho_ab, const PsdOperator& sigma_ab,
                               const SpaceShape& shape, const VerdictPolicy& policy = {});
InequalityReport check_joint_convexity(const std::vector<double>& probs,
                                       const std::vector<DensityOperator>& rhos,
                                       const std::vector<DensityOperator>& sigmas,
                                       const VerdictPolicy& policy = {});
InequalityReport check_ssa(const DensityOperator& omega, const SpaceShape& shape,
                           const VerdictPolicy& policy = {});
InequalityReport check_concavity(const Ensemble& e, const SpaceShape& shape,
                                 const VerdictPolicy& policy = {});

/// Verdict is holds when the witness certifies, inconclusive otherwise; never violated.
InequalityReport check_mono_channel_rotated(const DensityOperator& rho, const PsdOperator& sigma,
                                            const QuantumChannel& n, OptimizerBudget budget,
                                            std::uint64_t seed);
InequalityReport check_mono_pt_rotated(const DensityOperator& rho_ab, const PsdOperator& sigma_ab,
                                       const SpaceShape& shape, OptimizerBudget budget,
                                       std::uint64_t seed);

/// Bures remainder (ids bures_*) from a family evaluation: lhs = delta (bits),
/// rhs = 2(1 - root fidelity). Throws kInvalidConfig for any other id.
InequalityReport bures_report(InequalityId id, const FamilyEvaluation& fe,
                              const VerdictPolicy& policy = {});
/// -log2 F remainder (ids neglogf_*): rhs = -2 log2(root fidelity).
InequalityReport neglogf_report(InequalityId id, const FamilyEvaluation& fe,
                                const VerdictPolicy& policy = {});

InequalityReport check_bures_remainder(InequalityId id, const Instance& inst,
                                       const VerdictPolicy& policy = {});
InequalityReport check_neglogf_remainder(InequalityId id, const Instance& inst,
                                         const VerdictPolicy& policy = {});

// --- reductions ----------------------------------------------------------------------

struct IdentitySides {
  double lhs;
  double rhs;
};

/// (H(A|B)_avg - sum p H(A|B)_x, I(A;X|B)_theta) for an ensemble on shape {A, B}.
IdentitySides reduction_cq_identity(const Ensemble& e, const SpaceShape& shape);
/// (root fidelity of the SSA recovery on theta_XAB with B -> X, C -> B,
///  sum_x p sqrt F(rho^x, Petz_{avg, Tr_A}(rho^x_B))).
IdentitySides reduction_fidelity_blocks(const Ensemble& e, const SpaceShape& shape);

struct SsaSubstitution {
  Matrix generic_map_output;  // petz_map(omega_AC (x) omega_B, Tr_A) on omega_BC
  Matrix closed_form_output;  // omega_AC^{1/2} omega_C^{-1/2} omega_BC omega_C^{-1/2} omega_AC^{1/2}
  double cmi;                 // I(A;B|C) from entropies
  double cmi_via_divergence;  // D(omega_ABC||omega_AC (x) omega_B) - D(omega_BC||omega_C (x) omega_B)
  double map_discrepancy() const;
};

SsaSubstitution reduction_ssa_substitution(const DensityOperator& omega, const SpaceShape& shape);

/// (sqrt F(x = h) - sqrt F(x = 0)) / h for
/// sqrt F(sigma_AB, xi_AB^{1/2} xi_B^{-1/2} sigma_B xi_B^{-1/2} xi_AB^{1/2}), xi = sigma + x rho.
/// Throws kSingularState unless sigma_AB is positive definite.
double fd_root_fidelity_slope(const DensityOperator& sigma_ab, const DensityOperator& rho_ab,
                              const SpaceShape& shape, double h);

// --- lemmas --------------------------------------------------------------------------

/// D(rho||sigma) >= -2 log2(sqrt F(rho, sigma) / Tr rho); sigma any PSD operator.
InequalityReport check_lemma_divergence(const PsdOperator& rho, const PsdOperator& sigma,
                                const VerdictPolicy& policy = {});
/// sqrt F(rho, W sigma W^dag) = sqrt F(W^dag rho W, sigma); gap = -|difference|.
InequalityReport check_lemma_conjugation(const PsdOperator& rho, const PsdOperator& sigma, const Matrix& w,
                                const VerdictPolicy& policy = {});
/// sum_d sqrt F(W_d^dag rho W_d, sigma) >= sqrt F(rho, sigma). Throws
/// kFamilyNotResolution unless sum_d W_d = I within 1e-10.
InequalityReport check_lemma_resolution(const PsdOperator& rho, const PsdOperator& sigma,
                                const std::vector<Matrix>& family,
                                const VerdictPolicy& policy = {});

/// Closed-form (commuting) evaluation of the family behind a Bures or
/// conjecture id; nullopt unless the instance is classical.
std::optional<FamilyEvaluation> classical_family(InequalityId id, const Instance& inst);

// --- diagnostics ---------------------------------------------------------------------

/// The map sigma_AB^{1/2} V U sigma_B^{-1/2} (.) sigma_B^{-1/2} U^dag V^dag sigma_AB^{1/2}
/// evaluated on rho_B; its trace preservation is not asserted.
struct AltBoundDiagnostic {
  double output_trace;
  double root_fidelity;
  double delta_bits;
};

AltBoundDiagnostic alt_bound_diagnostic(const DensityOperator& rho_ab, const DensityOperator& sigma_ab,
                                        const SpaceShape& shape, const Matrix& u_b,
                                        const Matrix& v_ab);

}  // namespace petzlab
