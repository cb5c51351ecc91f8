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

#include "petzlab/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "petzlab/classical.hpp"
#include "petzlab/entropic.hpp"

namespace petzlab {

namespace {

constexpr std::array<std::pair<InequalityId, std::string_view>, 23> kIdNames{{
    {InequalityId::kMonoChannel, "mono_channel"},
    {InequalityId::kMonoPt, "mono_pt"},
    {InequalityId::kJointConvexity, "joint_convexity"},
    {InequalityId::kSsa, "ssa"},
    {InequalityId::kConcavity, "concavity"},
    {InequalityId::kMonoChannelRotated, "mono_channel_rotated"},
    {InequalityId::kMonoPtRotated, "mono_pt_rotated"},
    {InequalityId::kBuresSsa, "bures_ssa"},
    {InequalityId::kBuresConcavity, "bures_concavity"},
    {InequalityId::kBuresPt, "bures_pt"},
    {InequalityId::kBuresJoint, "bures_joint"},
    {InequalityId::kBuresChannel, "bures_channel"},
    {InequalityId::kNegLogFChannel, "neglogf_channel"},
    {InequalityId::kNegLogFPt, "neglogf_pt"},
    {InequalityId::kNegLogFJoint, "neglogf_joint"},
    {InequalityId::kNegLogFSsa, "neglogf_ssa"},
    {InequalityId::kNegLogFConcavity, "neglogf_concavity"},
    {InequalityId::kLemmaDivergence, "lemma_divergence"},
    {InequalityId::kLemmaConjugation, "lemma_conjugation"},
    {InequalityId::kLemmaResolution, "lemma_resolution"},
    {InequalityId::kReductionCq, "reduction_cq"},
    {InequalityId::kReductionFidelity, "reduction_fidelity"},
    {InequalityId::kReductionSsa, "reduction_ssa"},
}};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Which of the five inequality families an id is built on.
enum class Family { kChannel, kPt, kJoint, kSsa, kConcavity, kLemma };

Family family_of(InequalityId id) {
  switch (id) {
    case InequalityId::kMonoChannel:
    case InequalityId::kMonoChannelRotated:
    case InequalityId::kBuresChannel:
    case InequalityId::kNegLogFChannel:
      return Family::kChannel;
    case InequalityId::kMonoPt:
    case InequalityId::kMonoPtRotated:
    case InequalityId::kBuresPt:
    case InequalityId::kNegLogFPt:
      return Family::kPt;
    case InequalityId::kJointConvexity:
    case InequalityId::kBuresJoint:
    case InequalityId::kNegLogFJoint:
      return Family::kJoint;
    case InequalityId::kSsa:
    case InequalityId::kBuresSsa:
    case InequalityId::kNegLogFSsa:
    case InequalityId::kReductionSsa:
      return Family::kSsa;
    case InequalityId::kConcavity:
    case InequalityId::kBuresConcavity:
    case InequalityId::kNegLogFConcavity:
    case InequalityId::kReductionCq:
    case InequalityId::kReductionFidelity:
      return Family::kConcavity;
    default:
      return Family::kLemma;
  }
}

DensityOperator density(const Matrix& m) { return DensityOperator(hermitian_part(m)); }
PsdOperator psd(const Matrix& m) { return PsdOperator(hermitian_part(m)); }

double finite_bits(const EntropicValue& v) {
  if (!v.finite()) throw Error(ErrorKind::kSupportViolation, "relative entropy is infinite");
  return v.bits;
}

InequalityReport make_report(InequalityId id, double lhs, double rhs, RemainderKind kind,
                             double remainder, const VerdictPolicy& policy) {
  InequalityReport r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = lhs - rhs;
  if (std::isnan(r.gap)) r.gap = 0.0;  // inf - inf: both sides unbounded
  r.remainder_kind = kind;
  r.remainder = remainder;
  r.verdict = classify(r.gap, policy);
  return r;
}

InequalityReport identity_report(InequalityId id, double lhs, double rhs, double discrepancy,
                                 const VerdictPolicy& policy) {
  InequalityReport r = make_report(id, lhs, rhs, RemainderKind::kNone, 0.0, policy);
  r.gap = -discrepancy;
  r.verdict = classify(r.gap, policy);
  return r;
}

Labels two_labels(const SpaceShape& shape) {
  if (shape.size() != 2) throw Error(ErrorKind::kShapeMismatch, "expected a two-factor shape");
  return shape.labels();
}

Labels three_labels(const SpaceShape& shape) {
  if (shape.size() != 3) throw Error(ErrorKind::kShapeMismatch, "expected a three-factor shape");
  return shape.labels();
}

// omega_AC (x) omega_B laid out in A B C order.
Matrix ac_times_b(const Matrix& w_ac, const Matrix& w_b, int da, int db, int dc) {
  return permute_subsystems(tensor(w_ac, w_b), {da, dc, db}, {0, 2, 1});
}

std::vector<DensityOperator> densities(const std::vector<Matrix>& ms) {
  std::vector<DensityOperator> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(density(m));
  return out;
}

Ensemble ensemble_of(const Instance& inst) {
  return Ensemble(inst.probs, densities(inst.rho_members));
}

QuantumChannel channel_of(const Instance& inst) { return QuantumChannel::make(inst.kraus); }

const Matrix& need(const std::optional<Matrix>& m, const char* what) {
  if (!m) throw Error(ErrorKind::kInvalidConfig, std::string("instance lacks ") + what);
  return *m;
}

}  // namespace

std::string_view to_string(InequalityId id) {
  for (const auto& [k, v] : kIdNames) {
    if (k == id) return v;
  }
  return "unknown";
}

InequalityId parse_inequality_id(std::string_view name) {
  for (const auto& [k, v] : kIdNames) {
    if (v == name) return k;
  }
  throw Error(ErrorKind::kInvalidConfig, "unknown check '" + std::string(name) + "'");
}

const std::vector<InequalityId>& all_inequality_ids() {
  static const std::vector<InequalityId> ids = [] {
    std::vector<InequalityId> v;
    for (const auto& [k, name] : kIdNames) v.push_back(k);
    return v;
  }();
  return ids;
}

bool is_conjecture(InequalityId id) {
  return id >= InequalityId::kBuresSsa && id <= InequalityId::kNegLogFConcavity;
}

bool is_proved(InequalityId id) { return !is_conjecture(id); }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(RemainderKind k) {
  switch (k) {
    case RemainderKind::kNegLogF:
      return "neg_log_F";
    case RemainderKind::kBuresSq:
      return "bures_sq";
    case RemainderKind::kNone:
      return "none";
  }
  return "none";
}

Verdict parse_verdict(std::string_view s) {
  if (s == "holds") return Verdict::kHolds;
  if (s == "violated") return Verdict::kViolated;
  if (s == "inconclusive") return Verdict::kInconclusive;
  throw Error(ErrorKind::kInvalidConfig, "unknown verdict '" + std::string(s) + "'");
}

RemainderKind parse_remainder_kind(std::string_view s) {
  if (s == "neg_log_F") return RemainderKind::kNegLogF;
  if (s == "bures_sq") return RemainderKind::kBuresSq;
  if (s == "none") return RemainderKind::kNone;
  throw Error(ErrorKind::kInvalidConfig, "unknown remainder kind '" + std::string(s) + "'");
}

Verdict classify(double gap, const VerdictPolicy& policy) {
  if (gap >= -policy.verdict_tol) return Verdict::kHolds;
  if (gap < -policy.violation_floor) return Verdict::kViolated;
  return Verdict::kInconclusive;
}

bool Instance::is_classical(double tol) const {
  auto diagonal = [tol](const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (i != j && std::abs(m(i, j)) > tol) return false;
      }
    }
    return true;
  };
  if (rho && !diagonal(*rho)) return false;
  if (sigma && !diagonal(*sigma)) return false;
  for (const auto* list : {&rho_members, &sigma_members, &operators}) {
    for (const auto& m : *list) {
      if (!diagonal(m)) return false;
    }
  }
  if (!kraus.empty()) {
    const Eigen::Index din = kraus.front().cols();
    for (Eigen::Index x = 0; x < din; ++x) {
      Matrix img = Matrix::Zero(kraus.front().rows(), kraus.front().rows());
      for (const auto& k : kraus) img += k.col(x) * k.col(x).adjoint();
      if (!diagonal(img)) return false;
    }
  }
  return true;
}

// --- sampling --------------------------------------------------------------------------

namespace {

Matrix random_full_rank(int d, CounterRng& rng) { return random_density(d, d, rng).matrix(); }

Matrix random_state(int d, bool classical, CounterRng& rng) {
  return classical ? random_diagonal_density(d, rng).matrix() : random_full_rank(d, rng);
}

Matrix random_projector(int d, CounterRng& rng) {
  const Matrix u = random_unitary(d, rng);
  const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(d - 1, 1)));
  const Matrix cols = u.leftCols(rank);
  return cols * cols.adjoint();
}

Matrix random_diagonal_operator(int d, CounterRng& rng) {
  Matrix m = Matrix::Zero(d, d);
  const Matrix g = random_ginibre(d, 1, rng);
  for (int i = 0; i < d; ++i) m(i, i) = g(i, 0);
  return m;
}

}  // namespace

Instance sample_instance(InequalityId id, const std::string& family, const std::vector<int>& dims,
                         CounterRng& rng) {
  for (int d : dims) {
    if (d < 1) throw Error(ErrorKind::kInvalidConfig, "dimensions must be positive");
  }
  auto dim = [&](std::size_t i) { return i < dims.size() ? dims[i] : 2; };
  const bool classical = family == "classical";
  const bool equal = family == "equal";
  const bool markov = family == "markov";
  if (!classical && !equal && !markov && family != "random") {
    throw Error(ErrorKind::kInvalidConfig, "unknown instance family '" + family + "'");
  }

  Instance inst;
  inst.family = family;
  const int ensemble_size = 2 + static_cast<int>(rng() % 2);

  switch (family_of(id)) {
    case Family::kChannel: {
      if (markov) {
        const int da = dim(0), db = dim(1), dc = dim(2);
        inst.shape = SpaceShape{{"A", da}, {"B", db}, {"C", dc}};
        const Matrix w_ac = random_full_rank(da * dc, rng);
        const Matrix w_b = random_full_rank(db, rng);
        const Matrix tau_b = random_full_rank(db, rng);
        inst.rho = ac_times_b(w_ac, w_b, da, db, dc);
        inst.sigma = ac_times_b(w_ac, tau_b, da, db, dc);
        inst.kraus = partial_trace_channel(inst.shape, {"A"}).kraus();
        break;
      }
      const int din = dim(0), dout = dim(1), env = dim(2);
      inst.shape = SpaceShape{{"S", din}};
      inst.rho = random_state(din, classical, rng);
      inst.sigma = equal ? *inst.rho : random_state(din, classical, rng);
      if (classical) {
        std::vector<std::vector<double>> t(dout, std::vector<double>(din));
        for (int x = 0; x < din; ++x) {
          const auto col = random_probabilities(dout, rng);
          for (int y = 0; y < dout; ++y) t[y][x] = col[y];
        }
        inst.kraus = classical_channel(t).kraus();
      } else {
        inst.kraus = random_channel(din, dout, env, rng).kraus();
      }
      break;
    }
    case Family::kPt: {
      if (markov) {
        const int da = dim(0), db = dim(1), dc = dim(2);
        inst.shape = SpaceShape{{"A", da}, {"B", db * dc}};
        const Matrix w_ac = random_full_rank(da * dc, rng);
        inst.rho = ac_times_b(w_ac, random_full_rank(db, rng), da, db, dc);
        inst.sigma = ac_times_b(w_ac, random_full_rank(db, rng), da, db, dc);
        break;
      }
      const int da = dim(0), db = dim(1);
      inst.shape = SpaceShape{{"A", da}, {"B", db}};
      inst.rho = random_state(da * db, classical, rng);
      inst.sigma = equal ? *inst.rho : random_state(da * db, classical, rng);
      break;
    }
    case Family::kJoint: {
      const int d = dim(0);
      inst.shape = SpaceShape{{"S", d}};
      inst.probs = random_probabilities(ensemble_size, rng);
      for (int x = 0; x < ensemble_size; ++x) {
        inst.rho_members.push_back(random_state(d, classical, rng));
        inst.sigma_members.push_back(equal || markov ? inst.rho_members.back()
                                                     : random_state(d, classical, rng));
      }
      break;
    }
    case Family::kSsa: {
      const int da = dim(0), db = dim(1), dc = dim(2);
      inst.shape = SpaceShape{{"A", da}, {"B", db}, {"C", dc}};
      if (equal || markov) {
        inst.rho = ac_times_b(random_full_rank(da * dc, rng), random_full_rank(db, rng), da, db, dc);
      } else {
        inst.rho = random_state(da * db * dc, classical, rng);
      }
      break;
    }
    case Family::kConcavity: {
      const int da = dim(0), db = dim(1);
      inst.shape = SpaceShape{{"A", da}, {"B", db}};
      inst.probs = random_probabilities(ensemble_size, rng);
      const Matrix shared = random_state(da * db, classical, rng);
      for (int x = 0; x < ensemble_size; ++x) {
        inst.rho_members.push_back(equal || markov ? shared : random_state(da * db, classical, rng));
      }
      break;
    }
    case Family::kLemma: {
      const int d = dim(0);
      inst.shape = SpaceShape{{"S", d}};
      inst.rho = random_state(d, classical, rng);
      if (id == InequalityId::kLemmaDivergence) {
        const double scale = 0.25 + 1.75 * std::generate_canonical<double, 53>(rng);
        inst.sigma = equal ? *inst.rho : Matrix(scale * random_state(d, classical, rng));
      } else {
        inst.sigma = random_state(d, classical, rng);
      }
      if (id == InequalityId::kLemmaConjugation) {
        if (equal) {
          inst.operators.push_back(random_unitary(d, rng));
        } else {
          inst.operators.push_back(classical ? random_diagonal_operator(d, rng)
                                             : random_ginibre(d, d, rng));
        }
      } else if (id == InequalityId::kLemmaResolution) {
        if (equal) {
          const Matrix p = random_projector(d, rng);
          inst.operators = {p, identity(d) - p};
        } else {
          const Matrix w1 = 0.5 * (classical ? random_diagonal_operator(d, rng) : random_ginibre(d, d, rng));
          const Matrix w2 = 0.5 * (classical ? random_diagonal_operator(d, rng) : random_ginibre(d, d, rng));
          inst.operators = {w1, w2, identity(d) - w1 - w2};
        }
      }
      break;
    }
  }
  return inst;
}

// --- families ---------------------------------------------------------------------------

FamilyEvaluation family_channel(const DensityOperator& rho, const PsdOperator& sigma,
                                const QuantumChannel& n) {
  const DensityOperator n_rho = petzlab::apply(n, rho);
  const PsdOperator n_sigma = petzlab::apply(n, sigma);
  const double delta = finite_bits(rel_entropy(rho, sigma)) - finite_bits(rel_entropy(n_rho, n_sigma));
  const Matrix recovered = petzlab::apply(petz_map(sigma, n), n_rho.matrix());
  return {delta, root_fidelity(rho, psd(recovered))};
}

FamilyEvaluation family_pt(const DensityOperator& rho_ab, const PsdOperator& sigma_ab,
                           const SpaceShape& shape) {
  const Labels l = two_labels(shape);
  const DensityOperator rho_b(hermitian_part(partial_trace(rho_ab.matrix(), shape, {l[1]})));
  const PsdOperator sigma_b(hermitian_part(partial_trace(sigma_ab.matrix(), shape, {l[1]})));
  const double delta =
      finite_bits(rel_entropy(rho_ab, sigma_ab)) - finite_bits(rel_entropy(rho_b, sigma_b));
  const Matrix recovered = petz_partial_trace_apply(sigma_ab, shape, {l[0]}, rho_b.matrix());
  return {delta, root_fidelity(rho_ab, psd(recovered))};
}

FamilyEvaluation family_joint_convexity(const std::vector<double>& probs,
                                        const std::vector<DensityOperator>& rhos,
                                        const std::vector<DensityOperator>& sigmas) {
  if (rhos.size() != probs.size() || sigmas.size() != probs.size()) {
    throw Error(ErrorKind::kShapeMismatch, "ensemble sizes differ");
  }
  const int d = rhos.front().dim();
  Matrix rho_bar = Matrix::Zero(d, d);
  Matrix sigma_bar = Matrix::Zero(d, d);
  double avg = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    rho_bar += probs[x] * rhos[x].matrix();
    sigma_bar += probs[x] * sigmas[x].matrix();
    avg += probs[x] * finite_bits(rel_entropy(rhos[x], sigmas[x]));
  }
  const DensityOperator rb = density(rho_bar);
  const PsdOperator sb = psd(sigma_bar);
  const Matrix inner = mat_func(sb, SpectralFunction::kInvSqrt);
  const Matrix middle = inner * rb.matrix() * inner;
  double rf = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    const Matrix sx = mat_func(sigmas[x], SpectralFunction::kSqrt);
    rf += probs[x] * root_fidelity(rhos[x], psd(sx * middle * sx));
  }
  return {avg - finite_bits(rel_entropy(rb, sb)), rf};
}

Matrix ssa_petz_output(const PsdOperator& omega, const SpaceShape& shape, const std::string& a,
                       const std::string& b, const std::string& c) {
  const Labels ac = shape.restricted({a, c}).labels();
  const Labels bc = shape.restricted({b, c}).labels();
  const PsdOperator w_ac(hermitian_part(partial_trace(omega.matrix(), shape, ac)));
  const PsdOperator w_c(hermitian_part(partial_trace(omega.matrix(), shape, {c})));
  const Matrix w_bc = partial_trace(omega.matrix(), shape, bc);
  if (!w_c.positive_definite()) {
    throw Error(ErrorKind::kSingularMarginal, "conditioning marginal is not positive definite");
  }
  const Matrix left = embed(mat_func(w_ac, SpectralFunction::kSqrt), shape, ac) *
                      embed(mat_func(w_c, SpectralFunction::kInvSqrt), shape, {c});
  return left * embed(w_bc, shape, bc) * left.adjoint();
}

FamilyEvaluation family_ssa(const DensityOperator& omega, const SpaceShape& shape) {
  const Labels l = three_labels(shape);
  const double delta = cmi(omega, shape, l[0], l[1], l[2]);
  if (!std::isfinite(delta)) throw Error(ErrorKind::kSupportViolation, "CMI is infinite");
  return {delta, root_fidelity(omega, psd(ssa_petz_output(omega, shape, l[0], l[1], l[2])))};
}

FamilyEvaluation family_concavity(const Ensemble& e, const SpaceShape& shape) {
  const Labels l = two_labels(shape);
  const DensityOperator bar = e.average();
  double avg = 0.0;
  double rf = 0.0;
  for (std::size_t x = 0; x < e.size(); ++x) {
    const auto& m = e.members()[x];
    avg += e.probs()[x] * cond_entropy(m, shape, l[0], l[1]);
    const Matrix m_b = partial_trace(m.matrix(), shape, {l[1]});
    rf += e.probs()[x] * root_fidelity(m, psd(petz_partial_trace_apply(bar, shape, {l[0]}, m_b)));
  }
  return {cond_entropy(bar, shape, l[0], l[1]) - avg, rf};
}

// --- proved inequalities -----------------------------------------------------------------

InequalityReport check_mono_channel(const DensityOperator& rho, const PsdOperator& sigma,
                                    const QuantumChannel& n, const VerdictPolicy& policy) {
  const double lhs = rel_entropy(rho, sigma).value();
  const double rhs = rel_entropy(petzlab::apply(n, rho), petzlab::apply(n, sigma)).value();
  return make_report(InequalityId::kMonoChannel, lhs, rhs, RemainderKind::kNone, 0.0, policy);
}

InequalityReport check_mono_pt(const DensityOperator& rho_ab, const PsdOperator& sigma_ab,
                               const SpaceShape& shape, const VerdictPolicy& policy) {
  const Labels l = two_labels(shape);
  const PsdOperator rho_b(hermitian_part(partial_trace(rho_ab.matrix(), shape, {l[1]})));
  const PsdOperator sigma_b(hermitian_part(partial_trace(sigma_ab.matrix(), shape, {l[1]})));
  return make_report(InequalityId::kMonoPt, rel_entropy(rho_ab, sigma_ab).value(),
                     rel_entropy(rho_b, sigma_b).value(), RemainderKind::kNone, 0.0, policy);
}

InequalityReport check_joint_convexity(const std::vector<double>& probs,
                                       const std::vector<DensityOperator>& rhos,
                                       const std::vector<DensityOperator>& sigmas,
                                       const VerdictPolicy& policy) {
  if (rhos.size() != probs.size() || sigmas.size() != probs.size()) {
    throw Error(ErrorKind::kShapeMismatch, "ensemble sizes differ");
  }
  const int d = rhos.front().dim();
  Matrix rho_bar = Matrix::Zero(d, d);
  Matrix sigma_bar = Matrix::Zero(d, d);
  double lhs = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    rho_bar += probs[x] * rhos[x].matrix();
    sigma_bar += probs[x] * sigmas[x].matrix();
    if (probs[x] > 0.0) lhs += probs[x] * rel_entropy(rhos[x], sigmas[x]).value();
  }
  const double rhs = rel_entropy(psd(rho_bar), psd(sigma_bar)).value();
  return make_report(InequalityId::kJointConvexity, lhs, rhs, RemainderKind::kNone, 0.0, policy);
}

InequalityReport check_ssa(const DensityOperator& omega, const SpaceShape& shape,
                           const VerdictPolicy& policy) {
  const Labels l = three_labels(shape);
  return make_report(InequalityId::kSsa, cmi_via_entropies(omega, shape, l[0], l[1], l[2]), 0.0,
                     RemainderKind::kNone, 0.0, policy);
}

InequalityReport check_concavity(const Ensemble& e, const SpaceShape& shape,
                                 const VerdictPolicy& policy) {
  const Labels l = two_labels(shape);
  double rhs = 0.0;
  for (std::size_t x = 0; x < e.size(); ++x) {
    rhs += e.probs()[x] * cond_entropy(e.members()[x], shape, l[0], l[1]);
  }
  return make_report(InequalityId::kConcavity, cond_entropy(e.average(), shape, l[0], l[1]), rhs,
                     RemainderKind::kNone, 0.0, policy);
}

// --- rotated Petz ---------------------------------------------------------------------------

namespace {

InequalityReport rotated_report(InequalityId id, double delta, RotationWitness w) {
  InequalityReport r;
  r.id = id;
  r.lhs = delta;
  r.rhs = w.achieved_root_fidelity > 0.0 ? -2.0 * std::log2(w.achieved_root_fidelity) : kInf;
  r.gap = r.lhs - r.rhs;
  r.remainder_kind = RemainderKind::kNegLogF;
  r.remainder = r.rhs;
  r.verdict = w.certified ? Verdict::kHolds : Verdict::kInconclusive;
  r.witness = std::move(w);
  return r;
}

}  // namespace

InequalityReport check_mono_channel_rotated(const DensityOperator& rho, const PsdOperator& sigma,
                                            const QuantumChannel& n, OptimizerBudget budget,
                                            std::uint64_t seed) {
  const DensityOperator n_rho = petzlab::apply(n, rho);
  const PsdOperator n_sigma = petzlab::apply(n, sigma);
  const double delta =
      finite_bits(rel_entropy(rho, sigma)) - finite_bits(rel_entropy(n_rho, n_sigma));
  RotationWitness w = maximize_rotated_fidelity(rho, n_rho.matrix(), petz_map(sigma, n), budget,
                                                seed, std::exp2(-delta) - kCertTol);
  return rotated_report(InequalityId::kMonoChannelRotated, delta, std::move(w));
}

InequalityReport check_mono_pt_rotated(const DensityOperator& rho_ab, const PsdOperator& sigma_ab,
                                       const SpaceShape& shape, OptimizerBudget budget,
                                       std::uint64_t seed) {
  const Labels l = two_labels(shape);
  const Matrix rho_b = hermitian_part(partial_trace(rho_ab.matrix(), shape, {l[1]}));
  const PsdOperator sigma_b(hermitian_part(partial_trace(sigma_ab.matrix(), shape, {l[1]})));
  const double delta = finite_bits(rel_entropy(rho_ab, sigma_ab)) -
                       finite_bits(rel_entropy(PsdOperator(rho_b), sigma_b));
  const QuantumChannel recovery = petz_partial_trace(sigma_ab, shape, {l[0]});
  RotationWitness w = maximize_rotated_fidelity(rho_ab, rho_b, recovery, budget, seed,
                                                std::exp2(-delta) - kCertTol);
  return rotated_report(InequalityId::kMonoPtRotated, delta, std::move(w));
}

// --- conjectural remainders --------------------------------------------------------------------

namespace {

bool is_bures(InequalityId id) {
  return id >= InequalityId::kBuresSsa && id <= InequalityId::kBuresChannel;
}

bool is_neglogf(InequalityId id) {
  return id >= InequalityId::kNegLogFChannel && id <= InequalityId::kNegLogFConcavity;
}

}  // namespace

InequalityReport bures_report(InequalityId id, const FamilyEvaluation& fe,
                              const VerdictPolicy& policy) {
  if (!is_bures(id)) throw Error(ErrorKind::kInvalidConfig, "not a Bures remainder check");
  const double rhs = bures_sq_from_root_fidelity(fe.root_fidelity);
  InequalityReport r = make_report(id, fe.delta_bits, rhs, RemainderKind::kBuresSq, rhs, policy);
  r.gap_nats = fe.delta_bits * std::numbers::ln2 - rhs;
  return r;
}

InequalityReport neglogf_report(InequalityId id, const FamilyEvaluation& fe,
                                const VerdictPolicy& policy) {
  if (!is_neglogf(id)) throw Error(ErrorKind::kInvalidConfig, "not a -log F remainder check");
  const double rhs = fe.root_fidelity > 0.0 ? -2.0 * std::log2(fe.root_fidelity) : kInf;
  return make_report(id, fe.delta_bits, rhs, RemainderKind::kNegLogF, rhs, policy);
}

namespace {

FamilyEvaluation evaluate_family(Family f, const Instance& inst) {
  switch (f) {
    case Family::kChannel:
      return family_channel(density(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")),
                            channel_of(inst));
    case Family::kPt:
      return family_pt(density(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")), inst.shape);
    case Family::kJoint:
      return family_joint_convexity(inst.probs, densities(inst.rho_members),
                                    densities(inst.sigma_members));
    case Family::kSsa:
      return family_ssa(density(need(inst.rho, "omega")), inst.shape);
    case Family::kConcavity:
      return family_concavity(ensemble_of(inst), inst.shape);
    case Family::kLemma:
      break;
  }
  throw Error(ErrorKind::kInvalidConfig, "not an inequality family");
}

}  // namespace

InequalityReport check_bures_remainder(InequalityId id, const Instance& inst,
                                       const VerdictPolicy& policy) {
  if (!is_bures(id)) throw Error(ErrorKind::kInvalidConfig, "not a Bures remainder check");
  return bures_report(id, evaluate_family(family_of(id), inst), policy);
}

InequalityReport check_neglogf_remainder(InequalityId id, const Instance& inst,
                                         const VerdictPolicy& policy) {
  if (!is_neglogf(id)) throw Error(ErrorKind::kInvalidConfig, "not a -log F remainder check");
  return neglogf_report(id, evaluate_family(family_of(id), inst), policy);
}

// --- reductions -------------------------------------------------------------------------------

IdentitySides reduction_cq_identity(const Ensemble& e, const SpaceShape& shape) {
  const Labels l = two_labels(shape);
  double avg = 0.0;
  for (std::size_t x = 0; x < e.size(); ++x) {
    avg += e.probs()[x] * cond_entropy(e.members()[x], shape, l[0], l[1]);
  }
  const double lhs = cond_entropy(e.average(), shape, l[0], l[1]) - avg;
  const LabeledState theta = cq_state(e, shape, "X");
  return {lhs, cmi(theta.state, theta.shape, l[0], "X", l[1])};
}

IdentitySides reduction_fidelity_blocks(const Ensemble& e, const SpaceShape& shape) {
  const Labels l = two_labels(shape);
  const LabeledState theta = cq_state(e, shape, "X");
  const double lhs =
      root_fidelity(theta.state, psd(ssa_petz_output(theta.state, theta.shape, l[0], "X", l[1])));
  const DensityOperator bar = e.average();
  double rhs = 0.0;
  for (std::size_t x = 0; x < e.size(); ++x) {
    const auto& m = e.members()[x];
    const Matrix m_b = partial_trace(m.matrix(), shape, {l[1]});
    rhs += e.probs()[x] * root_fidelity(m, psd(petz_partial_trace_apply(bar, shape, {l[0]}, m_b)));
  }
  return {lhs, rhs};
}

double SsaSubstitution::map_discrepancy() const {
  return max_abs(generic_map_output - closed_form_output);
}

SsaSubstitution reduction_ssa_substitution(const DensityOperator& omega, const SpaceShape& shape) {
  const Labels l = three_labels(shape);
  const int da = shape.dim_of(l[0]), db = shape.dim_of(l[1]), dc = shape.dim_of(l[2]);
  const Matrix w_ac = partial_trace(omega.matrix(), shape, {l[0], l[2]});
  const PsdOperator w_b(hermitian_part(partial_trace(omega.matrix(), shape, {l[1]})));
  const PsdOperator w_c(hermitian_part(partial_trace(omega.matrix(), shape, {l[2]})));
  if (!w_b.positive_definite() || !w_c.positive_definite()) {
    throw Error(ErrorKind::kSupportViolation, "omega_B and omega_C must be positive definite");
  }
  const PsdOperator sigma = psd(ac_times_b(w_ac, w_b.matrix(), da, db, dc));
  const QuantumChannel tr_a = partial_trace_channel(shape, {l[0]});
  const Matrix w_bc = partial_trace(omega.matrix(), shape, {l[1], l[2]});

  SsaSubstitution s;
  s.generic_map_output = petzlab::apply(petz_map(sigma, tr_a), w_bc);
  s.closed_form_output = ssa_petz_output(omega, shape, l[0], l[1], l[2]);
  s.cmi = cmi_via_entropies(omega, shape, l[0], l[1], l[2]);
  s.cmi_via_divergence = finite_bits(rel_entropy(omega, sigma)) -
                         finite_bits(rel_entropy(psd(w_bc), psd(tensor(w_b.matrix(), w_c.matrix()))));
  return s;
}

double fd_root_fidelity_slope(const DensityOperator& sigma_ab, const DensityOperator& rho_ab,
                              const SpaceShape& shape, double h) {
  const Labels l = two_labels(shape);
  if (!(h > 0.0)) throw Error(ErrorKind::kNegativeParameter, "step h must be positive");
  if (!sigma_ab.positive_definite()) {
    throw Error(ErrorKind::kSingularState, "sigma_AB must be positive definite");
  }
  const Matrix sigma_b = partial_trace(sigma_ab.matrix(), shape, {l[1]});
  auto rf = [&](double x) {
    const PsdOperator xi = psd(sigma_ab.matrix() + x * rho_ab.matrix());
    return root_fidelity(sigma_ab, psd(petz_partial_trace_apply(xi, shape, {l[0]}, sigma_b)));
  };
  return (rf(h) - rf(0.0)) / h;
}

// --- lemmas ------------------------------------------------------------------------------------

InequalityReport check_lemma_divergence(const PsdOperator& rho, const PsdOperator& sigma,
                                const VerdictPolicy& policy) {
  const double lhs = rel_entropy(rho, sigma).value();
  const double rf = root_fidelity(rho, sigma);
  const double rhs = rf > 0.0 ? -2.0 * std::log2(rf / rho.trace()) : kInf;
  return make_report(InequalityId::kLemmaDivergence, lhs, rhs, RemainderKind::kNone, 0.0, policy);
}

InequalityReport check_lemma_conjugation(const PsdOperator& rho, const PsdOperator& sigma, const Matrix& w,
                                const VerdictPolicy& policy) {
  if (w.rows() != rho.dim() || w.cols() != sigma.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "W does not match the operators");
  }
  const double lhs = root_fidelity(rho, psd(w * sigma.matrix() * w.adjoint()));
  const double rhs = root_fidelity(psd(w.adjoint() * rho.matrix() * w), sigma);
  VerdictPolicy exact = policy;
  exact.verdict_tol = std::min(policy.verdict_tol, 1e-9);
  return identity_report(InequalityId::kLemmaConjugation, lhs, rhs, std::abs(lhs - rhs), exact);
}

InequalityReport check_lemma_resolution(const PsdOperator& rho, const PsdOperator& sigma,
                                const std::vector<Matrix>& family, const VerdictPolicy& policy) {
  if (family.empty()) throw Error(ErrorKind::kFamilyNotResolution, "empty family");
  Matrix sum = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& w : family) {
    if (w.rows() != rho.dim() || w.cols() != rho.dim()) {
      throw Error(ErrorKind::kShapeMismatch, "family member does not match the operators");
    }
    sum += w;
  }
  const double residual = max_abs(sum - identity(rho.dim()));
  if (residual > 1e-10) {
    throw Error(ErrorKind::kFamilyNotResolution,
                "sum of family deviates from identity by " + std::to_string(residual));
  }
  double lhs = 0.0;
  for (const auto& w : family) lhs += root_fidelity(psd(w.adjoint() * rho.matrix() * w), sigma);
  return make_report(InequalityId::kLemmaResolution, lhs, root_fidelity(rho, sigma), RemainderKind::kNone,
                     0.0, policy);
}

AltBoundDiagnostic alt_bound_diagnostic(const DensityOperator& rho_ab, const DensityOperator& sigma_ab,
                                        const SpaceShape& shape, const Matrix& u_b,
                                        const Matrix& v_ab) {
  const Labels l = two_labels(shape);
  const PsdOperator sigma_b(hermitian_part(partial_trace(sigma_ab.matrix(), shape, {l[1]})));
  const Matrix rho_b = partial_trace(rho_ab.matrix(), shape, {l[1]});
  const Matrix inv = mat_func(sigma_b, SpectralFunction::kInvSqrt);
  const Matrix inner = u_b * inv * rho_b * inv * u_b.adjoint();
  const Matrix left = mat_func(sigma_ab, SpectralFunction::kSqrt) * v_ab;
  const Matrix out = hermitian_part(left * embed(inner, shape, {l[1]}) * left.adjoint());
  AltBoundDiagnostic d{};
  d.output_trace = out.trace().real();
  d.root_fidelity = root_fidelity(rho_ab, PsdOperator(out));
  d.delta_bits = finite_bits(rel_entropy(rho_ab, sigma_ab)) -
                 finite_bits(rel_entropy(PsdOperator(hermitian_part(rho_b)), sigma_b));
  return d;
}

// --- dispatch ------------------------------------------------------------------------------------

InequalityReport evaluate(InequalityId id, const Instance& inst, const EvalOptions& opts) {
  const VerdictPolicy& pol = opts.policy;
  switch (id) {
    case InequalityId::kMonoChannel:
      return check_mono_channel(density(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")),
                                channel_of(inst), pol);
    case InequalityId::kMonoPt:
      return check_mono_pt(density(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")),
                           inst.shape, pol);
    case InequalityId::kJointConvexity:
      return check_joint_convexity(inst.probs, densities(inst.rho_members),
                                   densities(inst.sigma_members), pol);
    case InequalityId::kSsa:
      return check_ssa(density(need(inst.rho, "omega")), inst.shape, pol);
    case InequalityId::kConcavity:
      return check_concavity(ensemble_of(inst), inst.shape, pol);
    case InequalityId::kMonoChannelRotated:
      return check_mono_channel_rotated(density(need(inst.rho, "rho")),
                                        psd(need(inst.sigma, "sigma")), channel_of(inst),
                                        opts.budget, opts.seed);
    case InequalityId::kMonoPtRotated:
      return check_mono_pt_rotated(density(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")),
                                   inst.shape, opts.budget, opts.seed);
    case InequalityId::kBuresSsa:
    case InequalityId::kBuresConcavity:
    case InequalityId::kBuresPt:
    case InequalityId::kBuresJoint:
    case InequalityId::kBuresChannel:
      return check_bures_remainder(id, inst, pol);
    case InequalityId::kNegLogFChannel:
    case InequalityId::kNegLogFPt:
    case InequalityId::kNegLogFJoint:
    case InequalityId::kNegLogFSsa:
    case InequalityId::kNegLogFConcavity:
      return check_neglogf_remainder(id, inst, pol);
    case InequalityId::kLemmaDivergence:
      return check_lemma_divergence(density(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")), pol);
    case InequalityId::kLemmaConjugation:
      if (inst.operators.empty()) throw Error(ErrorKind::kInvalidConfig, "instance lacks W");
      return check_lemma_conjugation(psd(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")),
                            inst.operators.front(), pol);
    case InequalityId::kLemmaResolution:
      return check_lemma_resolution(psd(need(inst.rho, "rho")), psd(need(inst.sigma, "sigma")),
                            inst.operators, pol);
    case InequalityId::kReductionCq: {
      const auto s = reduction_cq_identity(ensemble_of(inst), inst.shape);
      return identity_report(id, s.lhs, s.rhs, std::abs(s.lhs - s.rhs), pol);
    }
    case InequalityId::kReductionFidelity: {
      const auto s = reduction_fidelity_blocks(ensemble_of(inst), inst.shape);
      return identity_report(id, s.lhs, s.rhs, std::abs(s.lhs - s.rhs), pol);
    }
    case InequalityId::kReductionSsa: {
      const auto s = reduction_ssa_substitution(density(need(inst.rho, "omega")), inst.shape);
      InequalityReport r = identity_report(
          id, s.cmi, s.cmi_via_divergence,
          std::max(std::abs(s.cmi - s.cmi_via_divergence), s.map_discrepancy()), pol);
      r.note = "map_discrepancy=" + std::to_string(s.map_discrepancy());
      return r;
    }
  }
  throw Error(ErrorKind::kInvalidConfig, "unhandled check");
}

// --- classical oracle bridge -----------------------------------------------------------------------

std::optional<FamilyEvaluation> classical_family(InequalityId id, const Instance& inst) {
  const Family f = family_of(id);
  if (f == Family::kLemma || !inst.is_classical()) return std::nullopt;
  auto diag = [](const Matrix& m) {
    classical::Dist d(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) d[i] = m(i, i).real();
    return d;
  };
  auto diags = [&](const std::vector<Matrix>& ms) {
    std::vector<classical::Dist> out;
    for (const auto& m : ms) out.push_back(diag(m));
    return out;
  };
  classical::FamilyValue v{};
  switch (f) {
    case Family::kChannel: {
      const int din = static_cast<int>(inst.kraus.front().cols());
      const int dout = static_cast<int>(inst.kraus.front().rows());
      std::vector<classical::Dist> t(dout, classical::Dist(din, 0.0));
      for (int x = 0; x < din; ++x) {
        for (const auto& k : inst.kraus) {
          for (int y = 0; y < dout; ++y) t[y][x] += std::norm(k(y, x));
        }
      }
      v = classical::mono_channel(diag(*inst.rho), diag(*inst.sigma), t);
      break;
    }
    case Family::kPt: {
      const auto d = inst.shape.dims();
      v = classical::mono_pt(diag(*inst.rho), diag(*inst.sigma), d[0], d[1]);
      break;
    }
    case Family::kJoint:
      v = classical::joint_convexity(inst.probs, diags(inst.rho_members), diags(inst.sigma_members));
      break;
    case Family::kSsa: {
      const auto d = inst.shape.dims();
      v = classical::ssa(diag(*inst.rho), d[0], d[1], d[2]);
      break;
    }
    case Family::kConcavity: {
      const auto d = inst.shape.dims();
      v = classical::concavity(inst.probs, diags(inst.rho_members), d[0], d[1]);
      break;
    }
    case Family::kLemma:
      return std::nullopt;
  }
  return FamilyEvaluation{v.delta_bits, v.root_fidelity};
}

}  // namespace petzlab
