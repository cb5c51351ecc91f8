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

// Relative typical subspaces T^{delta,n}_{rho|sigma}: strings y^n of sigma
// eigen-indices whose per-symbol value -(1/n) log2 f(y^n) lies within delta of
// -Tr{rho log2 sigma}. Two representations are kept explicitly:
//   * the classical typical set, stored as accepted type classes (count
//     vectors), which is all the exact path needs at any n;
//   * the dense projector on (C^d)^{(x) n}, available up to kDenseCap.

#include <optional>
#include <vector>

#include "petzlab/opmath.hpp"
#include "petzlab/states.hpp"

namespace petzlab {

inline constexpr int kDenseCap = 4096;

enum class TypicalityPath { kExact, kDense };

struct TypicalProjector {
  int n = 0;
  double delta = 0.0;
  /// Tr{rho log2 sigma}
  double reference_expectation = 0.0;
  Spectrum sigma_spectrum;
  /// -log2 f(y) per eigen-index y; +inf outside supp(sigma).
  std::vector<double> symbol_cost;
  /// <phi_y| rho |phi_y>
  std::vector<double> pushforward;
  /// Count vectors (one entry per eigen-index) of the accepted type classes.
  std::vector<std::vector<int>> accepted_types;
  /// Dense path only: acceptance per basis string (index in row-major order)
  /// and the projector itself.
  std::optional<std::vector<bool>> accepted_strings;
  std::optional<Matrix> projector;

  int dim() const { return static_cast<int>(symbol_cost.size()); }
  bool accepts_type(const std::vector<int>& counts) const;
};

/// Throws kDimensionCap when the dense path is requested above kDenseCap.
TypicalProjector typical_projector(const DensityOperator& rho, const PsdOperator& sigma,
                                   double delta, int n,
                                   TypicalityPath path = TypicalityPath::kDense);

/// Tr{Pi rho^{(x)n}}. The dense path traces against rho^{(x)n}; the exact path
/// sums multinomial weights of the pushforward distribution over accepted
/// type classes (OpenMP over types, deterministic serial reduction).
double typical_mass(const TypicalProjector& tp, const DensityOperator& rho);

/// Hoeffding bound 2 exp(-2 n delta^2 / range^2) on the atypical mass, where
/// range spans -log2 f(y) over y with positive pushforward weight.
double hoeffding_bound(const TypicalProjector& tp);

/// Every count vector of length d summing to n, lexicographic order.
std::vector<std::vector<int>> enumerate_types(int d, int n);

struct EigenvalueShell {
  double eigenvalue;
  /// Exact count; nullopt when it does not fit in long long (log2_multiplicity is always set).
  std::optional<long long> multiplicity;
  double log2_multiplicity;
  std::vector<std::vector<int>> types;  // type classes merged into this shell
  bool in_window;
  std::optional<Matrix> projector;      // dense path only
};

/// Distinct eigenvalues of sigma^{(x)n} (merged at relative 1e-9) and the
/// delta-window subset S_{n,delta}.
struct EigenvalueShells {
  std::vector<EigenvalueShell> shells;
  /// C(n + d - 1, d - 1) <= (n+1)^{d-1}
  long long type_count = 0;
  int window_count() const;
  /// Throws kDimensionCap when some multiplicity or the sum leaves long long.
  long long total_multiplicity() const;
};

EigenvalueShells eigenvalue_shells(const PsdOperator& sigma, int n, const DensityOperator& rho,
                                   double delta, TypicalityPath path = TypicalityPath::kExact);

/// Pi_outer Pi_inner X Pi_inner Pi_outer.
Matrix sandwich(const Matrix& x, const Matrix& pi_outer, const Matrix& pi_inner);

/// I_{A^n} (x) op for op on B^{(x)n}, laid out on (AB)^{(x)n} = A1 B1 A2 B2 ...
Matrix lift_to_bipartite_power(const Matrix& op_on_b, int dim_a, int dim_b, int n);

/// rho^{(x)n}
Matrix tensor_power(const Matrix& x, int n);

namespace reference {
/// Serial enumeration of all d^n strings: sum of p(y^n) over accepted strings,
/// where acceptance is recomputed per string by summing symbol costs.
double typical_mass(const TypicalProjector& tp);
}  // namespace reference

}  // namespace petzlab
