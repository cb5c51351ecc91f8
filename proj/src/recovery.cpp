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

#include "petzlab/recovery.hpp"

#include <algorithm>
#include <cmath>

#include "petzlab/entropic.hpp"

namespace petzlab {

QuantumChannel petz_map(const PsdOperator& sigma, const QuantumChannel& n) {
  if (sigma.dim() != n.dim_in()) {
    throw Error(ErrorKind::kShapeMismatch, "petz_map: sigma does not live on the channel input");
  }
  const PsdOperator n_sigma(hermitian_part(petzlab::apply(n, sigma.matrix())));
  const Matrix n_sigma_inv_sqrt = mat_func(n_sigma, SpectralFunction::kInvSqrt);
  const Matrix sigma_sqrt = mat_func(sigma, SpectralFunction::kSqrt);
  std::vector<Matrix> kraus;
  kraus.reserve(n.kraus().size());
  for (const auto& k : n.kraus()) kraus.push_back(sigma_sqrt * k.adjoint() * n_sigma_inv_sqrt);
  return QuantumChannel::unchecked(n.dim_out(), n.dim_in(), std::move(kraus));
}

double petz_completeness_residual(const QuantumChannel& petz, const PsdOperator& n_sigma) {
  return max_abs(petz.completeness() - support_projector(n_sigma));
}

namespace {

struct PartialTracePetzFactors {
  Matrix left;  // sigma^{1/2} (I_discard (x) sigma_keep^{-1/2})
  Labels keep;
};

PartialTracePetzFactors partial_trace_petz_factors(const PsdOperator& sigma, const SpaceShape& shape,
                                                   const Labels& discard) {
  if (sigma.dim() != shape.total_dim()) {
    throw Error(ErrorKind::kShapeMismatch, "petz_partial_trace: sigma does not match shape");
  }
  const Labels keep = shape.complement(discard);
  const PsdOperator sigma_keep(partial_trace(sigma.matrix(), shape, keep));
  if (!sigma_keep.positive_definite()) {
    throw Error(ErrorKind::kSingularMarginal,
                "marginal has eigenvalue " + std::to_string(sigma_keep.min_eigenvalue()) +
                    " at or below the support cut");
  }
  const Matrix lifted = embed(mat_func(sigma_keep, SpectralFunction::kInvSqrt), shape, keep);
  return {mat_func(sigma, SpectralFunction::kSqrt) * lifted, keep};
}

}  // namespace

QuantumChannel petz_partial_trace(const PsdOperator& sigma, const SpaceShape& shape,
                                  const Labels& discard) {
  const auto factors = partial_trace_petz_factors(sigma, shape, discard);
  const QuantumChannel tr = partial_trace_channel(shape, discard);
  std::vector<Matrix> kraus;
  kraus.reserve(tr.kraus().size());
  for (const auto& k : tr.kraus()) kraus.push_back(factors.left * k.adjoint());
  return QuantumChannel::unchecked(tr.dim_out(), tr.dim_in(), std::move(kraus));
}

Matrix petz_partial_trace_apply(const PsdOperator& sigma, const SpaceShape& shape,
                                const Labels& discard, const Matrix& x) {
  const auto factors = partial_trace_petz_factors(sigma, shape, discard);
  return factors.left * embed(x, shape, factors.keep) * factors.left.adjoint();
}

Matrix rotated_petz_apply(const QuantumChannel& recovery, const RotationWitness& w,
                          const Matrix& x) {
  if (w.u_out.rows() != recovery.dim_in() || w.v_in.rows() != recovery.dim_out()) {
    throw Error(ErrorKind::kShapeMismatch, "witness unitaries do not match the recovery map");
  }
  return w.v_in * petzlab::apply(recovery, w.u_out * x * w.u_out.adjoint()) * w.v_in.adjoint();
}

Matrix rotated_petz_apply(const PsdOperator& sigma, const QuantumChannel& n,
                          const RotationWitness& w, const Matrix& x) {
  return rotated_petz_apply(petz_map(sigma, n), w, x);
}

namespace {

// Orthonormal Hermitian basis of d x d matrices (d^2 real coordinates).
std::vector<Matrix> hermitian_basis(int d) {
  std::vector<Matrix> basis;
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    Matrix e = Matrix::Zero(d, d);
    e(j, j) = 1.0;
    basis.push_back(e);
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix s = Matrix::Zero(d, d);
      s(j, k) = r;
      s(k, j) = r;
      basis.push_back(s);
      Matrix a = Matrix::Zero(d, d);
      a(j, k) = Complex(0.0, -r);
      a(k, j) = Complex(0.0, r);
      basis.push_back(a);
    }
  }
  return basis;
}

// max_V sqrt F(rho, V w V^dag) = sum_i sqrt(lambda_i mu_i) with both spectra
// sorted descending; reached by aligning eigenbases.
class RotatedObjective {
 public:
  RotatedObjective(const DensityOperator& rho, const Matrix& n_rho, const QuantumChannel& recovery)
      : rho_(rho), n_rho_(n_rho), recovery_(recovery) {}

  Matrix recovered(const Matrix& u) const {
    return hermitian_part(petzlab::apply(recovery_, u * n_rho_ * u.adjoint()));
  }

  double aligned_value(const Matrix& u) const {
    const RealVector mu = eigvalsh(recovered(u));
    const RealVector& lam = rho_.spectrum().values;
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      s += std::sqrt(std::max(lam[i], 0.0) * std::max(mu[i], 0.0));
    }
    return s;
  }

  Matrix aligning_unitary(const Matrix& omega) const {
    const Spectrum s = eigh(omega);
    return rho_.spectrum().vectors * s.vectors.adjoint();
  }

  const DensityOperator& rho() const { return rho_; }

 private:
  const DensityOperator& rho_;
  const Matrix& n_rho_;
  const QuantumChannel& recovery_;
};

constexpr double kFdStep = 1e-5;
constexpr double kArmijo = 1e-4;

struct AscentResult {
  Matrix u;
  double value;
  int iterations;
};

AscentResult ascend(const RotatedObjective& obj, Matrix u, int max_iters, double target_root) {
  const int d = static_cast<int>(u.rows());
  const std::vector<Matrix> basis = hermitian_basis(d);
  double value = obj.aligned_value(u);
  double step = 1.0;
  int it = 0;
  for (; it < max_iters && value < target_root; ++it) {
    // Forward differences in the local chart U -> exp(i t G_k) U.
    Matrix direction = Matrix::Zero(d, d);
    double grad_sq = 0.0;
    for (const auto& g : basis) {
      const double fk = obj.aligned_value(unitary_exp(kFdStep * g) * u);
      const double gk = (fk - value) / kFdStep;
      direction += gk * g;
      grad_sq += gk * gk;
    }
    if (grad_sq < 1e-20) break;
    bool accepted = false;
    while (step > 1e-12) {
      const Matrix trial = unitary_exp(step * direction) * u;
      const double tv = obj.aligned_value(trial);
      if (tv >= value + kArmijo * step * grad_sq) {
        u = trial;
        value = tv;
        accepted = true;
        step = std::min(step * 2.0, 10.0);
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return {std::move(u), value, it};
}

}  // namespace

RotationWitness maximize_rotated_fidelity(const DensityOperator& rho, const Matrix& n_rho,
                                          const QuantumChannel& recovery, OptimizerBudget budget,
                                          std::uint64_t seed, double target_fidelity) {
  if (n_rho.rows() != recovery.dim_in() || rho.dim() != recovery.dim_out()) {
    throw Error(ErrorKind::kShapeMismatch, "maximize_rotated_fidelity: dimension mismatch");
  }
  const RotatedObjective obj(rho, n_rho, recovery);
  const int dout = recovery.dim_in();
  const int din = recovery.dim_out();
  const double target_root = std::sqrt(std::max(target_fidelity, 0.0));

  RotationWitness best;
  best.u_out = identity(dout);
  best.v_in = identity(din);
  best.achieved_root_fidelity = root_fidelity(rho, PsdOperator(obj.recovered(best.u_out)));
  best.best_restart = 0;
  auto certified = [&](double rf) { return rf * rf >= target_fidelity; };
  if (certified(best.achieved_root_fidelity)) {
    best.certified = true;
    best.optimizer_trace.push_back({0, 0, best.achieved_root_fidelity});
    return best;
  }

  const int restarts = std::max(budget.restarts, 1);
  for (int r = 0; r < restarts; ++r) {
    Matrix start = identity(dout);
    if (r > 0) {
      CounterRng rng(seed, static_cast<std::uint64_t>(r));
      start = random_unitary(dout, rng);
    }
    AscentResult res = ascend(obj, std::move(start), budget.iterations, target_root);
    const Matrix omega = obj.recovered(res.u);
    const Matrix v = obj.aligning_unitary(omega);
    const double achieved =
        root_fidelity(rho, PsdOperator(hermitian_part(v * omega * v.adjoint())));
    best.optimizer_trace.push_back({r, res.iterations, achieved});
    if (achieved > best.achieved_root_fidelity) {
      best.u_out = res.u;
      best.v_in = v;
      best.achieved_root_fidelity = achieved;
      best.best_restart = r;
    }
    if (certified(best.achieved_root_fidelity)) break;
  }
  best.certified = certified(best.achieved_root_fidelity);
  return best;
}

RotationWitness optimize_rotation(const DensityOperator& rho, const PsdOperator& sigma,
                                  const QuantumChannel& n, OptimizerBudget budget,
                                  std::uint64_t seed) {
  const DensityOperator n_rho = petzlab::apply(n, rho);
  const PsdOperator n_sigma = petzlab::apply(n, sigma);
  const EntropicValue d_in = rel_entropy(rho, sigma);
  const EntropicValue d_out = rel_entropy(n_rho, n_sigma);
  if (!d_in.finite() || !d_out.finite()) {
    throw Error(ErrorKind::kSupportViolation, "relative entropy is infinite");
  }
  const double gap = d_in.bits - d_out.bits;
  return maximize_rotated_fidelity(rho, n_rho.matrix(), petz_map(sigma, n), budget, seed,
                                   std::exp2(-gap) - kCertTol);
}

}  // namespace petzlab
