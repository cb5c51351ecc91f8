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

#include <vector>

#include "petzlab/opmath.hpp"
#include "petzlab/rng.hpp"
#include "petzlab/states.hpp"

namespace petzlab {

/// Completely positive map in Kraus form, X -> sum_i K_i X K_i^dag, with every
/// K_i of shape dim_out x dim_in.
class QuantumChannel {
 public:
  /// Validated CPTP channel. Throws kShapeMismatch or kCompletenessViolation.
  static QuantumChannel make(std::vector<Matrix> kraus);
  /// Skips the completeness check. Used for recovery maps, which are only
  /// trace preserving on a support.
  static QuantumChannel unchecked(int dim_in, int dim_out, std::vector<Matrix> kraus);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  /// sum_i K_i^dag K_i
  Matrix completeness() const;

 private:
  QuantumChannel(int dim_in, int dim_out, std::vector<Matrix> kraus)
      : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {}

  int dim_in_;
  int dim_out_;
  std::vector<Matrix> kraus_;
};

/// Isometry W = sum_i |i>_E (x) K_i with the environment as the leading factor.
struct StinespringDilation {
  Matrix isometry;  // (dim_env * dim_out) x dim_in
  int dim_env;
  int dim_out;
  int dim_in;
};

QuantumChannel make_channel(std::vector<Matrix> kraus);
QuantumChannel identity_channel(int dim);
QuantumChannel unitary_channel(const Matrix& u);

Matrix apply(const QuantumChannel& n, const Matrix& x);
PsdOperator apply(const QuantumChannel& n, const PsdOperator& x);
DensityOperator apply(const QuantumChannel& n, const DensityOperator& x);

/// sum_i K_i^dag Y K_i
Matrix adjoint_apply(const QuantumChannel& n, const Matrix& y);

/// (N (x) id)(|Gamma><Gamma|) with |Gamma> = sum_j |j>|j>, output factor first.
PsdOperator choi(const QuantumChannel& n);

StinespringDilation stinespring(const QuantumChannel& n);
/// Reads Kraus operators back off the isometry blocks <i|_E W.
QuantumChannel channel_from_stinespring(const StinespringDilation& w);
/// Tr_E{ W X W^dag }
Matrix apply_dilation(const StinespringDilation& w, const Matrix& x);

/// Kraus operators <j|_discard (x) I_keep. Throws kUnknownLabel.
QuantumChannel partial_trace_channel(const SpaceShape& shape, const Labels& discard);

/// Random channel from a Haar isometry dim_in -> dim_out * dim_env.
QuantumChannel random_channel(int dim_in, int dim_out, int dim_env, CounterRng& rng);

/// Classical channel with column-stochastic transition matrix
/// transition[y][x] = P(y | x); Kraus sqrt(P(y|x)) |y><x|.
QuantumChannel classical_channel(const std::vector<std::vector<double>>& transition);

}  // namespace petzlab
