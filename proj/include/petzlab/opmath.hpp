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

// Dense complex Hermitian kernel: eigendecompositions, spectral functions
// restricted to supports, tensor products, partial traces and trace norms.

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "petzlab/error.hpp"
#include "petzlab/tolerances.hpp"

namespace petzlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Labels = std::vector<std::string>;

/// Eigenvalues sorted descending with matching unitary eigenvector columns.
struct Spectrum {
  RealVector values;
  Matrix vectors;
};

/// Ordered tensor factorization H_1 (x) H_2 (x) ... with unique labels. The
/// first factor is the most significant in the row-major basis ordering.
class SpaceShape {
 public:
  struct Factor {
    std::string label;
    int dim;
  };

  SpaceShape() = default;
  SpaceShape(std::initializer_list<Factor> factors);
  explicit SpaceShape(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  int total_dim() const;
  std::vector<int> dims() const;
  Labels labels() const;

  bool has(std::string_view label) const;
  int index_of(std::string_view label) const;  // throws kUnknownLabel
  int dim_of(std::string_view label) const;

  /// Factors named in `labels`, kept in this shape's order.
  SpaceShape restricted(const Labels& labels) const;
  /// Labels of this shape not in `labels`, in shape order.
  Labels complement(const Labels& labels) const;

  friend bool operator==(const SpaceShape& a, const SpaceShape& b);

 private:
  void validate() const;
  std::vector<Factor> factors_;
};

// --- basic helpers --------------------------------------------------------

Matrix identity(int dim);
double max_abs(const Matrix& m);
/// (M + M^dag) / 2
Matrix hermitian_part(const Matrix& m);
bool is_hermitian(const Matrix& m, double rel_tol);
Complex trace_product(const Matrix& a, const Matrix& b);  // Tr(AB) without forming AB

// --- spectral ---------------------------------------------------------------

/// Throws kNonHermitian or kConvergenceFailure.
Spectrum eigh(const Matrix& a);
/// Eigenvalues only, descending. Input is assumed Hermitian.
RealVector eigvalsh(const Matrix& a);

enum class SpectralFunction { kLog2, kSqrt, kInvSqrt };

/// f applied to eigenvalues strictly above `cut`; everything else maps to 0.
Matrix spectral_apply(const Spectrum& s, SpectralFunction f, double cut);

/// exp(iH) for Hermitian H.
Matrix unitary_exp(const Matrix& hermitian);

/// Positive semi-definite operator validated at construction. Eigenvalues in
/// [-clip_tol, 0) are clipped to zero; anything lower is kNegativeEigenvalue.
/// The clipped spectrum is computed once and kept alongside the matrix.
class PsdOperator {
 public:
  explicit PsdOperator(const Matrix& m);

  const Matrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Spectrum& spectrum() const { return *spectrum_; }
  double trace() const;
  double max_eigenvalue() const;
  double min_eigenvalue() const;
  double clip_tol() const { return clip_tol_; }
  /// Default support cut, support_rel * max eigenvalue at construction time.
  double support_tol() const { return support_tol_; }
  int rank(std::optional<double> support_tol = std::nullopt) const;
  bool positive_definite(std::optional<double> support_tol = std::nullopt) const;

 private:
  Matrix matrix_;
  std::shared_ptr<const Spectrum> spectrum_;
  double clip_tol_ = 0.0;
  double support_tol_ = 0.0;
};

Matrix mat_func(const PsdOperator& a, SpectralFunction f,
                std::optional<double> support_tol = std::nullopt);
Matrix support_projector(const PsdOperator& a, std::optional<double> support_tol = std::nullopt);

// --- tensor structure -------------------------------------------------------

/// Kronecker product; also valid for rectangular operands.
Matrix tensor(const Matrix& a, const Matrix& b);
Matrix tensor(std::initializer_list<Matrix> factors);

/// Trace over every factor not in `keep`. Kept factors stay in shape order.
/// Parallelized over output entries for large operators.
Matrix partial_trace(const Matrix& x, const SpaceShape& shape, const Labels& keep);

/// Reorders tensor factors: factor j of the result is factor perm[j] of x.
Matrix permute_subsystems(const Matrix& x, const std::vector<int>& dims,
                          const std::vector<int>& perm);

/// x acts on `labels` (in the order given); the result is x (x) I on the
/// remaining factors, arranged in shape order.
Matrix embed(const Matrix& x, const SpaceShape& shape, const Labels& labels);

/// Sum of singular values.
double trace_norm(const Matrix& x);

namespace reference {
/// Serial index-decoding partial trace kept as the test reference for the
/// parallel kernel.
Matrix partial_trace(const Matrix& x, const SpaceShape& shape, const Labels& keep);
}  // namespace reference

}  // namespace petzlab
