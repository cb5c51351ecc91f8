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

#include <optional>
#include <string>
#include <vector>

#include "petzlab/opmath.hpp"
#include "petzlab/rng.hpp"

namespace petzlab {

/// Positive semi-definite operator with unit trace.
class DensityOperator : public PsdOperator {
 public:
  /// Throws kNonHermitian, kNegativeEigenvalue or kTraceNotOne.
  explicit DensityOperator(const Matrix& m, std::optional<double> trace_tol = std::nullopt);
};

DensityOperator validate_density(const Matrix& m, std::optional<double> trace_tol = std::nullopt);

/// A density operator together with the tensor factorization it lives on.
struct LabeledState {
  DensityOperator state;
  SpaceShape shape;
};

/// Probability-weighted family of density operators of a common dimension.
class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<DensityOperator> members);

  const std::vector<double>& probs() const { return probs_; }
  const std::vector<DensityOperator>& members() const { return members_; }
  std::size_t size() const { return probs_.size(); }
  int dim() const { return members_.front().dim(); }
  /// sum_x p(x) rho^x
  DensityOperator average() const;

 private:
  std::vector<double> probs_;
  std::vector<DensityOperator> members_;
};

// --- samplers -------------------------------------------------------------------

/// dim x cols matrix of independent standard complex Gaussians.
Matrix random_ginibre(int rows, int cols, CounterRng& rng);
/// G G^dag / Tr(G G^dag) with G a dim x rank Ginibre matrix.
DensityOperator random_density(int dim, int rank, CounterRng& rng);
/// Haar unitary: QR of a Ginibre matrix with R's diagonal made positive.
Matrix random_unitary(int dim, CounterRng& rng);
/// First `cols` columns of a Haar unitary of size `rows`.
Matrix random_isometry(int rows, int cols, CounterRng& rng);
/// Uniform point of the probability simplex.
std::vector<double> random_probabilities(int k, CounterRng& rng);
/// Diagonal density operator with the given weights.
DensityOperator diagonal_density(const std::vector<double>& probs);
/// Random diagonal (classical) density operator of full support.
DensityOperator random_diagonal_density(int dim, CounterRng& rng);

// --- structured states ------------------------------------------------------------

/// sum_x p(x) |x><x|_reg (x) rho^x on reg (x) member_shape.
LabeledState cq_state(const Ensemble& e, const SpaceShape& member_shape,
                      const std::string& register_label = "X");
LabeledState cq_state(const Ensemble& e);

/// |0><0| (x) sigma / (x+1) + |1><1| (x) x rho / (x+1) on reg (x) member_shape.
LabeledState interpolation_state(const DensityOperator& sigma, const DensityOperator& rho,
                                 double x, const SpaceShape& member_shape,
                                 const std::string& register_label = "Y");
LabeledState interpolation_state(const DensityOperator& sigma, const DensityOperator& rho,
                                 double x);

}  // namespace petzlab
