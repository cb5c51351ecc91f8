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

#include "petzlab/states.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace petzlab {

DensityOperator::DensityOperator(const Matrix& m, std::optional<double> trace_tol)
    : PsdOperator(m) {
  const double tol = trace_tol.value_or(current_tolerances().trace_tol);
  if (std::abs(trace() - 1.0) > tol) {
    std::ostringstream os;
    os << "trace " << trace() << " differs from 1 by more than " << tol;
    throw Error(ErrorKind::kTraceNotOne, os.str());
  }
}

DensityOperator validate_density(const Matrix& m, std::optional<double> trace_tol) {
  return DensityOperator(m, trace_tol);
}

Ensemble::Ensemble(std::vector<double> probs, std::vector<DensityOperator> members)
    : probs_(std::move(probs)), members_(std::move(members)) {
  if (probs_.empty() || probs_.size() != members_.size()) {
    throw Error(ErrorKind::kShapeMismatch, "ensemble needs one probability per member");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw Error(ErrorKind::kNegativeParameter, "negative ensemble probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error(ErrorKind::kTraceNotOne, "ensemble probabilities do not sum to 1");
  }
  for (const auto& m : members_) {
    if (m.dim() != members_.front().dim()) {
      throw Error(ErrorKind::kShapeMismatch, "ensemble members differ in dimension");
    }
  }
}

DensityOperator Ensemble::average() const {
  Matrix avg = Matrix::Zero(dim(), dim());
  for (std::size_t x = 0; x < size(); ++x) avg += probs_[x] * members_[x].matrix();
  return DensityOperator(avg);
}

// --- samplers -------------------------------------------------------------------

Matrix random_ginibre(int rows, int cols, CounterRng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  // Row-major draw order, fixed regardless of Eigen's storage order.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

DensityOperator random_density(int dim, int rank, CounterRng& rng) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw Error(ErrorKind::kShapeMismatch, "random_density requires 1 <= rank <= dim");
  }
  const Matrix g = random_ginibre(dim, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(hermitian_part(rho));
}

Matrix random_isometry(int rows, int cols, CounterRng& rng) {
  if (cols > rows) throw Error(ErrorKind::kShapeMismatch, "isometry needs rows >= cols");
  const Matrix g = random_ginibre(rows, rows, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < rows; ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0.0) q.col(k) *= d / a;
  }
  return q.leftCols(cols);
}

Matrix random_unitary(int dim, CounterRng& rng) { return random_isometry(dim, dim, rng); }

std::vector<double> random_probabilities(int k, CounterRng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(k);
  double total = 0.0;
  for (auto& v : p) {
    v = expo(rng);
    total += v;
  }
  for (auto& v : p) v /= total;
  return p;
}

DensityOperator diagonal_density(const std::vector<double>& probs) {
  Matrix m = Matrix::Zero(static_cast<int>(probs.size()), static_cast<int>(probs.size()));
  for (std::size_t i = 0; i < probs.size(); ++i) m(i, i) = probs[i];
  return DensityOperator(m);
}

DensityOperator random_diagonal_density(int dim, CounterRng& rng) {
  return diagonal_density(random_probabilities(dim, rng));
}

// --- structured states ------------------------------------------------------------

LabeledState cq_state(const Ensemble& e, const SpaceShape& member_shape,
                      const std::string& register_label) {
  if (member_shape.total_dim() != e.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "cq_state: member shape does not match members");
  }
  const int k = static_cast<int>(e.size());
  const int d = e.dim();
  Matrix theta = Matrix::Zero(k * d, k * d);
  for (int x = 0; x < k; ++x) {
    theta.block(x * d, x * d, d, d) = e.probs()[x] * e.members()[x].matrix();
  }
  std::vector<SpaceShape::Factor> factors{{register_label, k}};
  for (const auto& f : member_shape.factors()) factors.push_back(f);
  return {DensityOperator(theta), SpaceShape(std::move(factors))};
}

LabeledState cq_state(const Ensemble& e) { return cq_state(e, SpaceShape{{"S", e.dim()}}); }

LabeledState interpolation_state(const DensityOperator& sigma, const DensityOperator& rho,
                                 double x, const SpaceShape& member_shape,
                                 const std::string& register_label) {
  if (x < 0.0) throw Error(ErrorKind::kNegativeParameter, "interpolation weight x < 0");
  if (sigma.dim() != rho.dim() || member_shape.total_dim() != sigma.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "interpolation_state: dimension mismatch");
  }
  const int d = sigma.dim();
  Matrix xi = Matrix::Zero(2 * d, 2 * d);
  xi.topLeftCorner(d, d) = sigma.matrix() / (x + 1.0);
  xi.bottomRightCorner(d, d) = (x / (x + 1.0)) * rho.matrix();
  std::vector<SpaceShape::Factor> factors{{register_label, 2}};
  for (const auto& f : member_shape.factors()) factors.push_back(f);
  return {DensityOperator(xi), SpaceShape(std::move(factors))};
}

LabeledState interpolation_state(const DensityOperator& sigma, const DensityOperator& rho,
                                 double x) {
  return interpolation_state(sigma, rho, x, SpaceShape{{"S", sigma.dim()}});
}

}  // namespace petzlab
