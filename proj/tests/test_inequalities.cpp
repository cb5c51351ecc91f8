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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "petzlab/classical.hpp"
#include "petzlab/entropic.hpp"
#include "petzlab/inequalities.hpp"

using namespace petzlab;
using oracle::diag;
using oracle::kind_of;

namespace {

Matrix ac_times_b(const Matrix& ac, const Matrix& b, int da, int db, int dc) {
  return permute_subsystems(tensor(ac, b), {da, dc, db}, {0, 2, 1});
}

Instance random_instance(InequalityId id, const std::string& family, std::vector<int> dims,
                         std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  return sample_instance(id, family, dims, rng);
}

}  // namespace

TEST(Ids, NamesRoundTrip) {
  std::set<std::string_view> names;
  for (InequalityId id : all_inequality_ids()) {
    EXPECT_EQ(parse_inequality_id(to_string(id)), id);
    names.insert(to_string(id));
  }
  EXPECT_EQ(names.size(), all_inequality_ids().size());
  EXPECT_EQ(kind_of([] { parse_inequality_id("nope"); }), ErrorKind::kInvalidConfig);
  int conj = 0;
  for (InequalityId id : all_inequality_ids()) conj += is_conjecture(id);
  EXPECT_EQ(conj, 10);
  EXPECT_TRUE(is_proved(InequalityId::kLemmaResolution));
  EXPECT_TRUE(is_conjecture(InequalityId::kBuresSsa));
  EXPECT_FALSE(is_proved(InequalityId::kNegLogFConcavity));
}

TEST(Verdict, Classification) {
  EXPECT_EQ(classify(0.0), Verdict::kHolds);
  EXPECT_EQ(classify(-1e-8), Verdict::kHolds);
  EXPECT_EQ(classify(-1e-7), Verdict::kInconclusive);
  EXPECT_EQ(classify(-1e-5), Verdict::kInconclusive);
  EXPECT_EQ(classify(-2e-5), Verdict::kViolated);
  EXPECT_EQ(parse_verdict(to_string(Verdict::kViolated)), Verdict::kViolated);
  EXPECT_EQ(parse_remainder_kind("bures_sq"), RemainderKind::kBuresSq);
}

TEST(Proved, SsaOnMarkovStateIsZero) {
  CounterRng rng(1, 0);
  const SpaceShape shape{{"A", 2}, {"B", 3}, {"C", 2}};
  const DensityOperator w(ac_times_b(random_density(4, 4, rng).matrix(),
                                     random_density(3, 3, rng).matrix(), 2, 3, 2));
  const InequalityReport r = check_ssa(w, shape);
  EXPECT_NEAR(r.gap, 0.0, 1e-10);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
}

TEST(Proved, NeverViolatedOnRandomInstances) {
  const InequalityId ids[] = {InequalityId::kMonoChannel, InequalityId::kMonoPt,
                              InequalityId::kJointConvexity, InequalityId::kSsa,
                              InequalityId::kConcavity, InequalityId::kLemmaDivergence,
                              InequalityId::kLemmaConjugation, InequalityId::kLemmaResolution,
                              InequalityId::kReductionCq, InequalityId::kReductionFidelity,
                              InequalityId::kReductionSsa};
  for (InequalityId id : ids) {
    for (const char* fam : {"random", "classical", "equal"}) {
      for (std::uint64_t i = 0; i < 60; ++i) {
        const std::vector<int> dims{2 + int(i % 3), 2 + int(i / 3 % 2), 2 + int(i / 6 % 2)};
        const Instance inst = random_instance(id, fam, dims, 42, i);
        const InequalityReport r = evaluate(id, inst);
        EXPECT_GE(r.gap, -1e-8) << to_string(id) << " " << fam << " " << i;
        EXPECT_NE(r.verdict, Verdict::kViolated);
      }
    }
  }
}

TEST(Rotated, EqualStatesSaturate) {
  CounterRng rng(2, 0);
  const DensityOperator rho = random_density(3, 3, rng);
  const QuantumChannel n = random_channel(3, 2, 2, rng);
  const InequalityReport r = check_mono_channel_rotated(rho, rho, n, {}, 7);
  EXPECT_NEAR(r.lhs, 0.0, 1e-10);
  EXPECT_NEAR(r.rhs, 0.0, 1e-8);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->best_restart, 0);
  const SpaceShape shape{{"A", 2}, {"B", 2}};
  const DensityOperator rab = random_density(4, 4, rng);
  const InequalityReport p = check_mono_pt_rotated(rab, rab, shape, {}, 7);
  EXPECT_EQ(p.verdict, Verdict::kHolds);
  EXPECT_NEAR(p.witness->achieved_root_fidelity, 1.0, 1e-9);
}

TEST(Rotated, ClassicalBinarySymmetricCertifiesAtRestartZero) {
  CounterRng rng(3, 0);
  for (int i = 0; i < 40; ++i) {
    const double eps = 0.05 + 0.4 * std::generate_canonical<double, 53>(rng);
    const QuantumChannel bsc = classical_channel({{1 - eps, eps}, {eps, 1 - eps}});
    const DensityOperator rho = random_diagonal_density(2, rng);
    const DensityOperator sigma = random_diagonal_density(2, rng);
    const InequalityReport r = check_mono_channel_rotated(rho, sigma, bsc, {}, i);
    EXPECT_EQ(r.verdict, Verdict::kHolds);
    EXPECT_EQ(r.witness->best_restart, 0);
    const auto cf = classical::mono_channel({rho.matrix()(0, 0).real(), rho.matrix()(1, 1).real()},
                                            {sigma.matrix()(0, 0).real(), sigma.matrix()(1, 1).real()},
                                            {{1 - eps, eps}, {eps, 1 - eps}});
    EXPECT_NEAR(r.lhs, cf.delta_bits, 1e-10);
    EXPECT_NEAR(r.witness->achieved_root_fidelity, cf.root_fidelity, 1e-9);
  }
}

TEST(Rotated, RandomQubitReportShape) {
  const Instance inst = random_instance(InequalityId::kMonoChannelRotated, "random", {2, 2, 2}, 5, 0);
  const InequalityReport r = evaluate(InequalityId::kMonoChannelRotated, inst, {{4, 100}, 9, {}});
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.verdict, Verdict::kViolated);
  EXPECT_EQ(r.remainder_kind, RemainderKind::kNegLogF);
  EXPECT_EQ(r.verdict == Verdict::kHolds, r.witness->certified);
}

TEST(Rotated, ProductStatesPartialTrace) {
  CounterRng rng(4, 0);
  const SpaceShape shape{{"A", 2}, {"B", 2}};
  const DensityOperator ra = random_density(2, 2, rng), sa = random_density(2, 2, rng),
                        rb = random_density(2, 2, rng);
  const DensityOperator rho(tensor(ra.matrix(), rb.matrix()));
  const DensityOperator sigma(tensor(sa.matrix(), rb.matrix()));
  const Matrix out = petz_partial_trace_apply(sigma, shape, {"A"}, rb.matrix());
  EXPECT_LT(max_abs(out - tensor(sa.matrix(), rb.matrix())), 1e-10);
  const FamilyEvaluation fe = family_pt(rho, sigma, shape);
  EXPECT_NEAR(fe.root_fidelity, root_fidelity(ra, sa), 1e-10);
  const InequalityReport r = check_mono_pt_rotated(rho, sigma, shape, {}, 3);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
}

TEST(Bures, SsaOnMarkovState) {
  const Instance inst = random_instance(InequalityId::kBuresSsa, "markov", {2, 2, 2}, 6, 0);
  const InequalityReport r = check_bures_remainder(InequalityId::kBuresSsa, inst);
  EXPECT_NEAR(r.lhs, 0.0, 1e-10);
  EXPECT_NEAR(r.rhs, 0.0, 1e-10);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  ASSERT_TRUE(r.gap_nats.has_value());
  EXPECT_EQ(r.remainder_kind, RemainderKind::kBuresSq);
}

TEST(Bures, ConcavityIdenticalMembers) {
  const Instance inst = random_instance(InequalityId::kBuresConcavity, "equal", {2, 2}, 7, 0);
  const InequalityReport r = check_bures_remainder(InequalityId::kBuresConcavity, inst);
  EXPECT_NEAR(r.lhs, 0.0, 1e-10);
  EXPECT_NEAR(r.rhs, 0.0, 1e-8);
}

TEST(Bures, PartialTraceClassicalMatchesOracle) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Instance inst = random_instance(InequalityId::kBuresPt, "classical", {2, 2}, 8, i);
    ASSERT_TRUE(inst.is_classical());
    const InequalityReport r = check_bures_remainder(InequalityId::kBuresPt, inst);
    const auto cf = classical_family(InequalityId::kBuresPt, inst);
    ASSERT_TRUE(cf.has_value());
    const InequalityReport c = bures_report(InequalityId::kBuresPt, *cf);
    EXPECT_NEAR(r.lhs, c.lhs, 1e-10);
    EXPECT_NEAR(r.rhs, c.rhs, 1e-10);
  }
}

TEST(Bures, ChannelWithPartialTraceMatchesPt) {
  CounterRng rng(9, 0);
  const SpaceShape shape{{"A", 2}, {"B", 3}};
  for (int i = 0; i < 20; ++i) {
    Instance pt;
    pt.shape = shape;
    pt.rho = random_density(6, 6, rng).matrix();
    pt.sigma = random_density(6, 6, rng).matrix();
    Instance ch = pt;
    ch.kraus = partial_trace_channel(shape, {"A"}).kraus();
    const InequalityReport r3 = check_bures_remainder(InequalityId::kBuresPt, pt);
    const InequalityReport r5 = check_bures_remainder(InequalityId::kBuresChannel, ch);
    EXPECT_NEAR(r3.lhs, r5.lhs, 1e-9);
    EXPECT_NEAR(r3.rhs, r5.rhs, 1e-9);
    EXPECT_NEAR(check_neglogf_remainder(InequalityId::kNegLogFPt, pt).rhs, check_neglogf_remainder(InequalityId::kNegLogFChannel, ch).rhs, 1e-9);
  }
}

TEST(Bures, GapNatsIsBitsConverted) {
  const FamilyEvaluation fe{0.3, 0.9};
  const InequalityReport r = bures_report(InequalityId::kBuresJoint, fe);
  EXPECT_NEAR(r.rhs, 0.2, 1e-15);
  EXPECT_NEAR(*r.gap_nats, 0.3 * std::log(2.0) - 0.2, 1e-15);
  EXPECT_NEAR(r.gap, 0.1, 1e-15);
  EXPECT_EQ(kind_of([&] { bures_report(InequalityId::kMonoChannel, fe); }), ErrorKind::kInvalidConfig);
}

TEST(NegLogF, IdentityChannel) {
  CounterRng rng(10, 0);
  Instance inst;
  inst.shape = SpaceShape{{"S", 3}};
  inst.rho = random_density(3, 3, rng).matrix();
  inst.sigma = random_density(3, 3, rng).matrix();
  inst.kraus = {identity(3)};
  const InequalityReport r = check_neglogf_remainder(InequalityId::kNegLogFChannel, inst);
  EXPECT_NEAR(r.lhs, 0.0, 1e-12);
  EXPECT_NEAR(r.rhs, 0.0, 1e-8);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
}

TEST(NegLogF, MarkovSsa) {
  const Instance inst = random_instance(InequalityId::kNegLogFSsa, "markov", {2, 3, 2}, 11, 0);
  const InequalityReport r = check_neglogf_remainder(InequalityId::kNegLogFSsa, inst);
  EXPECT_NEAR(r.lhs, 0.0, 1e-10);
  EXPECT_NEAR(r.rhs, 0.0, 1e-8);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
}

TEST(NegLogF, OneElementEnsembleIsTrivial) {
  CounterRng rng(12, 0);
  Instance inst;
  inst.shape = SpaceShape{{"S", 3}};
  inst.probs = {1.0};
  inst.rho_members = {random_density(3, 3, rng).matrix()};
  inst.sigma_members = {random_density(3, 3, rng).matrix()};
  const InequalityReport r14 = check_neglogf_remainder(InequalityId::kNegLogFJoint, inst);
  Instance lift;
  lift.shape = SpaceShape{{"X", 1}, {"S", 3}};
  lift.rho = inst.rho_members[0];
  lift.sigma = inst.sigma_members[0];
  const InequalityReport r13 = check_neglogf_remainder(InequalityId::kNegLogFPt, lift);
  EXPECT_NEAR(r14.lhs, 0.0, 1e-12);
  EXPECT_NEAR(r14.lhs, r13.lhs, 1e-9);
  EXPECT_NEAR(r14.rhs, r13.rhs, 1e-9);
}

TEST(NegLogF, JointConvexityEqualsPartialTraceOnCqLift) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Instance inst = random_instance(InequalityId::kNegLogFJoint, "random", {3}, 13, i);
    const std::size_t k = inst.probs.size();
    const int d = 3;
    Matrix tr = Matrix::Zero(k * d, k * d), ts = tr;
    for (std::size_t x = 0; x < k; ++x) {
      tr.block(x * d, x * d, d, d) = inst.probs[x] * inst.rho_members[x];
      ts.block(x * d, x * d, d, d) = inst.probs[x] * inst.sigma_members[x];
    }
    Instance lift;
    lift.shape = SpaceShape{{"X", static_cast<int>(k)}, {"S", d}};
    lift.rho = tr;
    lift.sigma = ts;
    const InequalityReport a = check_neglogf_remainder(InequalityId::kNegLogFJoint, inst);
    const InequalityReport b = check_neglogf_remainder(InequalityId::kNegLogFPt, lift);
    EXPECT_NEAR(a.lhs, b.lhs, 1e-9);
    EXPECT_NEAR(a.rhs, b.rhs, 1e-9);
    EXPECT_NEAR(check_bures_remainder(InequalityId::kBuresJoint, inst).rhs, check_bures_remainder(InequalityId::kBuresPt, lift).rhs, 1e-9);
  }
}

TEST(NegLogF, ClassicalInstancesMatchOracle) {
  const InequalityId ids[] = {InequalityId::kNegLogFChannel, InequalityId::kNegLogFPt, InequalityId::kNegLogFJoint,
                              InequalityId::kNegLogFSsa, InequalityId::kNegLogFConcavity};
  for (InequalityId id : ids) {
    for (std::uint64_t i = 0; i < 15; ++i) {
      const Instance inst = random_instance(id, "classical", {2, 3, 2}, 14, i);
      ASSERT_TRUE(inst.is_classical()) << to_string(id);
      const InequalityReport q = evaluate(id, inst);
      const auto cf = classical_family(id, inst);
      ASSERT_TRUE(cf.has_value());
      const InequalityReport c = neglogf_report(id, *cf);
      EXPECT_NEAR(q.lhs, c.lhs, 1e-9) << to_string(id);
      EXPECT_NEAR(q.rhs, c.rhs, 1e-8) << to_string(id);
    }
  }
  EXPECT_FALSE(classical_family(InequalityId::kNegLogFChannel,
                                random_instance(InequalityId::kNegLogFChannel, "random", {2, 2, 2}, 1, 1))
                   .has_value());
}

TEST(Reductions, CqIdentity) {
  CounterRng rng(15, 0);
  const SpaceShape shape{{"A", 2}, {"B", 2}};
  const DensityOperator m = random_density(4, 4, rng);
  const IdentitySides same = reduction_cq_identity(Ensemble({0.3, 0.7}, {m, m}), shape);
  EXPECT_NEAR(same.lhs, 0.0, 1e-10);
  EXPECT_NEAR(same.rhs, 0.0, 1e-10);
  const DensityOperator p0 = random_density(4, 1, rng);
  Matrix psi = Matrix::Zero(4, 1);
  // a vector orthogonal to p0's support
  const Spectrum s = eigh(p0.matrix());
  psi = s.vectors.col(1);
  const DensityOperator p1(psi * psi.adjoint());
  const IdentitySides orth = reduction_cq_identity(Ensemble({0.5, 0.5}, {p0, p1}), shape);
  EXPECT_NEAR(orth.lhs, orth.rhs, 1e-9);
  for (int i = 0; i < 20; ++i) {
    const Ensemble e({0.2, 0.3, 0.5}, {random_density(4, 4, rng), random_density(4, 2, rng),
                                       random_density(4, 3, rng)});
    const IdentitySides r = reduction_cq_identity(e, shape);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-9);
    EXPECT_GE(r.rhs, -1e-9);
  }
}

TEST(Reductions, FidelityBlocks) {
  CounterRng rng(16, 0);
  const SpaceShape shape{{"A", 2}, {"B", 2}};
  const DensityOperator m = random_density(4, 4, rng);
  const IdentitySides single = reduction_fidelity_blocks(Ensemble({1.0}, {m}), shape);
  EXPECT_NEAR(single.lhs, single.rhs, 1e-10);
  EXPECT_NEAR(single.lhs, family_pt(m, m, shape).root_fidelity, 1e-10);
  const IdentitySides same = reduction_fidelity_blocks(Ensemble({0.4, 0.6}, {m, m}), shape);
  EXPECT_NEAR(same.lhs, same.rhs, 1e-10);
  EXPECT_NEAR(same.lhs, 1.0, 1e-9);
  for (int i = 0; i < 20; ++i) {
    const Ensemble e({0.35, 0.65}, {random_density(4, 4, rng), random_density(4, 4, rng)});
    const IdentitySides r = reduction_fidelity_blocks(e, shape);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-8);
  }
}

TEST(Reductions, SsaSubstitution) {
  CounterRng rng(17, 0);
  const SpaceShape shape{{"A", 2}, {"B", 2}, {"C", 2}};
  const DensityOperator prod(ac_times_b(random_density(4, 4, rng).matrix(),
                                        random_density(2, 2, rng).matrix(), 2, 2, 2));
  const SsaSubstitution p = reduction_ssa_substitution(prod, shape);
  EXPECT_LT(p.map_discrepancy(), 1e-9);
  EXPECT_NEAR(root_fidelity(prod, PsdOperator(hermitian_part(p.closed_form_output))), 1.0, 1e-9);
  for (int i = 0; i < 20; ++i) {
    const DensityOperator w = random_density(8, 8, rng);
    const SsaSubstitution s = reduction_ssa_substitution(w, shape);
    EXPECT_LT(s.map_discrepancy(), 1e-9);
    EXPECT_NEAR(s.cmi, s.cmi_via_divergence, 1e-9);
    EXPECT_NEAR(s.cmi, cmi(w, shape), 1e-9);
  }
  const DensityOperator singular(tensor({diag({1, 0}), diag({0.5, 0.5}), diag({0.5, 0.5})}));
  EXPECT_EQ(kind_of([&] { reduction_ssa_substitution(singular, shape); }), std::nullopt);
  const DensityOperator bad(tensor({diag({0.5, 0.5}), diag({1, 0}), diag({0.5, 0.5})}));
  EXPECT_EQ(kind_of([&] { reduction_ssa_substitution(bad, shape); }), ErrorKind::kSupportViolation);
}

TEST(FiniteDifference, Examples) {
  CounterRng rng(18, 0);
  const SpaceShape shape{{"A", 2}, {"B", 2}};
  const DensityOperator s = random_density(4, 4, rng);
  EXPECT_NEAR(fd_root_fidelity_slope(s, s, shape, 1e-4), 0.0, 1e-10);
  const DensityOperator sd = diagonal_density({0.1, 0.2, 0.3, 0.4});
  const DensityOperator rd = diagonal_density({0.4, 0.1, 0.25, 0.25});
  EXPECT_LE(std::abs(fd_root_fidelity_slope(sd, rd, shape, 1e-4)), 1e-3);
  for (int i = 0; i < 20; ++i) {
    const DensityOperator sg = random_density(4, 4, rng), rh = random_density(4, 4, rng);
    const double s3 = fd_root_fidelity_slope(sg, rh, shape, 1e-3);
    const double s4 = fd_root_fidelity_slope(sg, rh, shape, 1e-4);
    EXPECT_LE(std::abs(s4), 1e-2);
    EXPECT_LE(std::abs(s4), std::abs(s3) / 5 + 1e-9);
  }
  EXPECT_EQ(kind_of([&] { fd_root_fidelity_slope(diagonal_density({1, 0, 0, 0}), s, shape, 1e-4); }),
            ErrorKind::kSingularState);
  EXPECT_EQ(kind_of([&] { fd_root_fidelity_slope(s, s, shape, 0.0); }),
            ErrorKind::kNegativeParameter);
}

TEST(Lemmas, Examples) {
  CounterRng rng(19, 0);
  const DensityOperator rho = random_density(3, 3, rng), sigma = random_density(3, 3, rng);
  const InequalityReport b2 = check_lemma_divergence(rho, rho);
  EXPECT_NEAR(b2.lhs, 0.0, 1e-12);
  EXPECT_NEAR(b2.rhs, 0.0, 1e-10);
  const InequalityReport b6 = check_lemma_conjugation(rho, sigma, random_unitary(3, rng));
  EXPECT_EQ(b6.verdict, Verdict::kHolds);
  EXPECT_NEAR(b6.lhs, b6.rhs, 1e-9);
  const Matrix g = random_ginibre(3, 3, rng);
  const InequalityReport b6g = check_lemma_conjugation(rho, sigma, g);
  EXPECT_NEAR(b6g.lhs, b6g.rhs, 1e-9);
  Matrix v = random_isometry(3, 1, rng);
  const Matrix p = v * v.adjoint();
  const InequalityReport b7 = check_lemma_resolution(rho, sigma, {p, identity(3) - p});
  EXPECT_GE(b7.gap, -1e-8);
  EXPECT_EQ(kind_of([&] { check_lemma_resolution(rho, sigma, {p}); }), ErrorKind::kFamilyNotResolution);
  EXPECT_EQ(kind_of([&] { check_lemma_resolution(rho, sigma, {}); }), ErrorKind::kFamilyNotResolution);
}

TEST(Lemmas, DivergenceWithSubnormalizedSigma) {
  CounterRng rng(20, 0);
  for (int i = 0; i < 50; ++i) {
    const DensityOperator rho = random_density(3, 1 + i % 3, rng);
    const PsdOperator sigma(0.3 * random_density(3, 3, rng).matrix());
    EXPECT_GE(check_lemma_divergence(rho, sigma).gap, -1e-8);
  }
}

TEST(AltBound, IdentityRotationsReproducePetz) {
  CounterRng rng(21, 0);
  const SpaceShape shape{{"A", 2}, {"B", 2}};
  const DensityOperator rho = random_density(4, 4, rng), sigma = random_density(4, 4, rng);
  const AltBoundDiagnostic d = alt_bound_diagnostic(rho, sigma, shape, identity(2), identity(4));
  const FamilyEvaluation fe = family_pt(rho, sigma, shape);
  EXPECT_NEAR(d.root_fidelity, fe.root_fidelity, 1e-10);
  EXPECT_NEAR(d.delta_bits, fe.delta_bits, 1e-10);
  EXPECT_NEAR(d.output_trace, 1.0, 1e-10);
  const AltBoundDiagnostic r =
      alt_bound_diagnostic(rho, sigma, shape, random_unitary(2, rng), random_unitary(4, rng));
  EXPECT_TRUE(std::isfinite(r.output_trace));
  EXPECT_GE(r.output_trace, 0.0);
}

TEST(Sampler, EveryCheckAndFamilyEvaluates) {
  for (InequalityId id : all_inequality_ids()) {
    for (const char* fam : {"random", "equal", "markov", "classical"}) {
      const Instance inst = random_instance(id, fam, {2, 2, 2}, 22, 0);
      if (std::string(fam) == "classical") EXPECT_TRUE(inst.is_classical()) << to_string(id);
      EXPECT_NO_THROW(evaluate(id, inst, {{2, 20}, 1, {}})) << to_string(id) << " " << fam;
    }
  }
  CounterRng rng(1, 1);
  EXPECT_EQ(kind_of([&] { sample_instance(InequalityId::kSsa, "bogus", {2}, rng); }),
            ErrorKind::kInvalidConfig);
}

TEST(Sampler, DeterministicPerStream) {
  const Instance a = random_instance(InequalityId::kNegLogFJoint, "random", {3}, 5, 17);
  const Instance b = random_instance(InequalityId::kNegLogFJoint, "random", {3}, 5, 17);
  ASSERT_EQ(a.rho_members.size(), b.rho_members.size());
  for (std::size_t i = 0; i < a.rho_members.size(); ++i) {
    EXPECT_EQ(max_abs(a.rho_members[i] - b.rho_members[i]), 0.0);
  }
  EXPECT_EQ(evaluate(InequalityId::kNegLogFJoint, a).gap, evaluate(InequalityId::kNegLogFJoint, b).gap);
}
