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
#include <vector>

#include "petzlab/channels.hpp"
#include "petzlab/opmath.hpp"
#include "petzlab/states.hpp"

namespace petzlab {

/// Petz recovery channel sigma^{1/2} N^dag[ N(sigma)^{-1/2} (.) N(sigma)^{-1/2} ] sigma^{1/2}
/// with Kraus operators sigma^{1/2} K_i^dag N(sigma)^{-1/2}. Trace preserving on
/// supp N(sigma); see petz_completeness_residual.
QuantumChannel petz_map(const PsdOperator& sigma, const QuantumChannel& n);

/// ||sum_i L_i^dag L_i - Pi_{supp N(sigma)}||_max for a map built by petz_map.
double petz_completeness_residual(const QuantumChannel& petz, const PsdOperator& n_sigma);

/// The partial-trace form sigma_AB^{1/2} sigma_B^{-1/2} (.) sigma_B^{-1/2} sigma_AB^{1/2},
/// built directly from the marginal sigma_B = Tr_discard sigma rather than via
/// the generic channel route. Throws kSingularMarginal unless sigma_B is
/// positive definite.
QuantumChannel petz_partial_trace(const PsdOperator& sigma, const SpaceShape& shape,
                                  const Labels& discard);

/// Closed-form evaluation of the partial-trace Petz map on X (an operator on
/// the kept factors), without Kraus operators.
Matrix petz_partial_trace_apply(const PsdOperator& sigma, const SpaceShape& shape,
                                const Labels& discard, const Matrix& x);

struct RestartTrace {
  int restart_index;
  int iterations;
  double best_value;
};

/// Unitaries U (channel output) and V (channel input) of a rotated Petz map
/// V o R o U, together with what the optimizer achieved.
struct RotationWitness {
  Matrix u_out;
  Matrix v_in;
  double achieved_root_fidelity = 0.0;
  bool certified = false;
  int best_restart = 0;
  std::vector<RestartTrace> optimizer_trace;
};

/// V R(U X U^dag) V^dag
Matrix rotated_petz_apply(const QuantumChannel& recovery, const RotationWitness& w, const Matrix& x);
Matrix rotated_petz_apply(const PsdOperator& sigma, const QuantumChannel& n,
                          const RotationWitness& w, const Matrix& x);

struct OptimizerBudget {
  int restarts = 20;
  int iterations = 300;
};

/// Root-fidelity-squared slack granted to certification.
inline constexpr double kCertTol = 1e-6;

/// Maximizes sqrt F(rho, V R(U n_rho U^dag) V^dag) over unitaries. Restart 0
/// starts at U = V = I; later restarts start from Haar-random U drawn from
/// `seed`. Stops once `target_fidelity` (on F, not its root) is reached.
RotationWitness maximize_rotated_fidelity(const DensityOperator& rho, const Matrix& n_rho,
                                          const QuantumChannel& recovery, OptimizerBudget budget,
                                          std::uint64_t seed, double target_fidelity);

/// Searches for a witness of D(rho||sigma) - D(N rho||N sigma) >= -log2 F(rho, V R U (N rho)).
/// certified := F >= 2^{-Delta D} - kCertTol.
RotationWitness optimize_rotation(const DensityOperator& rho, const PsdOperator& sigma,
                                  const QuantumChannel& n, OptimizerBudget budget,
                                  std::uint64_t seed);

}  // namespace petzlab
