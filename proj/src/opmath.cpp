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

#include "petzlab/opmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace petzlab {

// --- SpaceShape -------------------------------------------------------------

SpaceShape::SpaceShape(std::initializer_list<Factor> factors) : factors_(factors) { validate(); }

SpaceShape::SpaceShape(std::vector<Factor> factors) : factors_(std::move(factors)) { validate(); }

void SpaceShape::validate() const {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim < 1) {
      throw Error(ErrorKind::kShapeMismatch, "factor '" + f.label + "' has dimension < 1");
    }
    if (!seen.insert(f.label).second) {
      throw Error(ErrorKind::kShapeMismatch, "duplicate factor label '" + f.label + "'");
    }
  }
}

int SpaceShape::total_dim() const {
  int d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

std::vector<int> SpaceShape::dims() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.dim);
  return out;
}

Labels SpaceShape::labels() const {
  Labels out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

bool SpaceShape::has(std::string_view label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

int SpaceShape::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return static_cast<int>(i);
  }
  throw Error(ErrorKind::kUnknownLabel, "no factor labelled '" + std::string(label) + "'");
}

int SpaceShape::dim_of(std::string_view label) const { return factors_[index_of(label)].dim; }

SpaceShape SpaceShape::restricted(const Labels& labels) const {
  for (const auto& l : labels) index_of(l);
  std::vector<Factor> out;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) out.push_back(f);
  }
  return SpaceShape(std::move(out));
}

Labels SpaceShape::complement(const Labels& labels) const {
  for (const auto& l : labels) index_of(l);
  Labels out;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) == labels.end()) out.push_back(f.label);
  }
  return out;
}

bool operator==(const SpaceShape& a, const SpaceShape& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (a.factors_[i].label != b.factors_[i].label || a.factors_[i].dim != b.factors_[i].dim) {
      return false;
    }
  }
  return true;
}

// --- helpers ------------------------------------------------------------------

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

bool is_hermitian(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= rel_tol * max_abs(m);
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

// --- spectral -------------------------------------------------------------------

Spectrum eigh(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::kShapeMismatch, "eigh of a non-square matrix");
  }
  const double tol = current_tolerances().herm_rel;
  if (!is_hermitian(a, tol)) {
    std::ostringstream os;
    os << "||A - A^dag||_max = " << max_abs(a - a.adjoint()) << " exceeds " << tol << " * "
       << max_abs(a);
    throw Error(ErrorKind::kNonHermitian, os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(a));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure, "self-adjoint eigensolver did not converge");
  }
  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  s.vectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

RealVector eigvalsh(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure, "self-adjoint eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

Matrix spectral_apply(const Spectrum& s, SpectralFunction f, double cut) {
  const Eigen::Index n = s.values.size();
  RealVector g = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = s.values[i];
    if (lam <= cut) continue;
    switch (f) {
      case SpectralFunction::kLog2: g[i] = std::log2(lam); break;
      case SpectralFunction::kSqrt: g[i] = std::sqrt(lam); break;
      case SpectralFunction::kInvSqrt: g[i] = 1.0 / std::sqrt(lam); break;
    }
  }
  return s.vectors * g.asDiagonal() * s.vectors.adjoint();
}

Matrix unitary_exp(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(hermitian));
  const RealVector& lam = solver.eigenvalues();
  Eigen::VectorXcd phase(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) phase[i] = std::polar(1.0, lam[i]);
  return solver.eigenvectors() * phase.asDiagonal() * solver.eigenvectors().adjoint();
}

// --- PsdOperator ------------------------------------------------------------------

PsdOperator::PsdOperator(const Matrix& m) {
  const Tolerances& tol = current_tolerances();
  Spectrum s = eigh(m);
  const int n = static_cast<int>(s.values.size());
  const double scale = n == 0 ? 0.0 : s.values.cwiseAbs().maxCoeff();
  clip_tol_ = tol.psd_rel * n * scale;
  if (n > 0 && s.values[n - 1] < -clip_tol_) {
    std::ostringstream os;
    os << "eigenvalue " << s.values[n - 1] << " below -" << clip_tol_;
    throw Error(ErrorKind::kNegativeEigenvalue, os.str());
  }
  for (int i = 0; i < n; ++i) s.values[i] = std::max(s.values[i], 0.0);
  support_tol_ = tol.support_rel * (n == 0 ? 0.0 : s.values[0]);
  matrix_ = hermitian_part(m);
  spectrum_ = std::make_shared<const Spectrum>(std::move(s));
}

double PsdOperator::trace() const { return matrix_.trace().real(); }

double PsdOperator::max_eigenvalue() const {
  return spectrum_->values.size() == 0 ? 0.0 : spectrum_->values[0];
}

double PsdOperator::min_eigenvalue() const {
  const auto& v = spectrum_->values;
  return v.size() == 0 ? 0.0 : v[v.size() - 1];
}

int PsdOperator::rank(std::optional<double> support_tol) const {
  const double cut = support_tol.value_or(support_tol_);
  return static_cast<int>((spectrum_->values.array() > cut).count());
}

bool PsdOperator::positive_definite(std::optional<double> support_tol) const {
  return rank(support_tol) == dim();
}

Matrix mat_func(const PsdOperator& a, SpectralFunction f, std::optional<double> support_tol) {
  return spectral_apply(a.spectrum(), f, support_tol.value_or(a.support_tol()));
}

Matrix support_projector(const PsdOperator& a, std::optional<double> support_tol) {
  const double cut = support_tol.value_or(a.support_tol());
  const Spectrum& s = a.spectrum();
  RealVector g = (s.values.array() > cut).cast<double>();
  return s.vectors * g.asDiagonal() * s.vectors.adjoint();
}

// --- tensor structure -----------------------------------------------------------

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix tensor(std::initializer_list<Matrix> factors) {
  Matrix out = Matrix::Ones(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

namespace {

std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f) {
    strides[f] = strides[f + 1] * dims[f + 1];
  }
  return strides;
}

// Flat offsets of every multi-index over `subset` (first subset entry most
// significant), embedded in the full index space.
std::vector<int> subset_offsets(const std::vector<int>& dims, const std::vector<int>& strides,
                                const std::vector<int>& subset) {
  std::vector<int> out{0};
  for (int f : subset) {
    std::vector<int> next;
    next.reserve(out.size() * dims[f]);
    for (int base : out) {
      for (int d = 0; d < dims[f]; ++d) next.push_back(base + d * strides[f]);
    }
    out = std::move(next);
  }
  return out;
}

void check_square(const Matrix& x, const SpaceShape& shape, const char* what) {
  if (x.rows() != x.cols() || x.rows() != shape.total_dim()) {
    std::ostringstream os;
    os << what << ": operator is " << x.rows() << "x" << x.cols() << " but shape has total dim "
       << shape.total_dim();
    throw Error(ErrorKind::kShapeMismatch, os.str());
  }
}

std::vector<int> indices_of(const SpaceShape& shape, const Labels& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(shape.index_of(l));
  return out;
}

}  // namespace

Matrix partial_trace(const Matrix& x, const SpaceShape& shape, const Labels& keep) {
  check_square(x, shape, "partial_trace");
  const std::vector<int> dims = shape.dims();
  const std::vector<int> strides = strides_of(dims);
  std::vector<int> kept;
  std::vector<int> traced;
  for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
    const bool keep_f = std::find(keep.begin(), keep.end(), shape.factors()[f].label) != keep.end();
    (keep_f ? kept : traced).push_back(f);
  }
  for (const auto& l : keep) shape.index_of(l);

  const std::vector<int> ok = subset_offsets(dims, strides, kept);
  const std::vector<int> od = subset_offsets(dims, strides, traced);
  const int dk = static_cast<int>(ok.size());
  const int dt = static_cast<int>(od.size());
  Matrix out(dk, dk);
  const bool parallel = static_cast<long>(dk) * dk * dt > (1L << 15);
#pragma omp parallel for collapse(2) schedule(static) if (parallel)
  for (int j = 0; j < dk; ++j) {
    for (int i = 0; i < dk; ++i) {
      Complex acc = 0.0;
      for (int t = 0; t < dt; ++t) acc += x(ok[i] + od[t], ok[j] + od[t]);
      out(i, j) = acc;
    }
  }
  return out;
}

namespace reference {

Matrix partial_trace(const Matrix& x, const SpaceShape& shape, const Labels& keep) {
  check_square(x, shape, "partial_trace");
  const std::vector<int> dims = shape.dims();
  const int nf = static_cast<int>(dims.size());
  std::vector<bool> is_kept(nf, false);
  for (const auto& l : keep) is_kept[shape.index_of(l)] = true;
  int dk = 1;
  for (int f = 0; f < nf; ++f) {
    if (is_kept[f]) dk *= dims[f];
  }
  auto decode = [&](int idx) {
    std::vector<int> digits(nf);
    for (int f = nf - 1; f >= 0; --f) {
      digits[f] = idx % dims[f];
      idx /= dims[f];
    }
    return digits;
  };
  auto kept_index = [&](const std::vector<int>& digits) {
    int k = 0;
    for (int f = 0; f < nf; ++f) {
      if (is_kept[f]) k = k * dims[f] + digits[f];
    }
    return k;
  };
  Matrix out = Matrix::Zero(dk, dk);
  const int n = shape.total_dim();
  for (int r = 0; r < n; ++r) {
    const auto dr = decode(r);
    for (int c = 0; c < n; ++c) {
      const auto dc = decode(c);
      bool same = true;
      for (int f = 0; f < nf && same; ++f) {
        if (!is_kept[f] && dr[f] != dc[f]) same = false;
      }
      if (same) out(kept_index(dr), kept_index(dc)) += x(r, c);
    }
  }
  return out;
}

}  // namespace reference

Matrix permute_subsystems(const Matrix& x, const std::vector<int>& dims,
                          const std::vector<int>& perm) {
  const int nf = static_cast<int>(dims.size());
  int total = 1;
  for (int d : dims) total *= d;
  if (x.rows() != total || x.cols() != total || static_cast<int>(perm.size()) != nf) {
    throw Error(ErrorKind::kShapeMismatch, "permute_subsystems: dimension mismatch");
  }
  std::vector<int> out_dims(nf);
  for (int j = 0; j < nf; ++j) out_dims[j] = dims[perm[j]];
  const std::vector<int> in_strides = strides_of(dims);
  const std::vector<int> out_strides = strides_of(out_dims);
  // Output index of every input basis vector.
  std::vector<int> map(total);
  for (int idx = 0; idx < total; ++idx) {
    int o = 0;
    for (int j = 0; j < nf; ++j) {
      const int digit = (idx / in_strides[perm[j]]) % dims[perm[j]];
      o += digit * out_strides[j];
    }
    map[idx] = o;
  }
  Matrix out(total, total);
  for (int c = 0; c < total; ++c) {
    for (int r = 0; r < total; ++r) out(map[r], map[c]) = x(r, c);
  }
  return out;
}

Matrix embed(const Matrix& x, const SpaceShape& shape, const Labels& labels) {
  const std::vector<int> sel = indices_of(shape, labels);
  int dsel = 1;
  for (int f : sel) dsel *= shape.factors()[f].dim;
  if (x.rows() != dsel || x.cols() != dsel) {
    throw Error(ErrorKind::kShapeMismatch, "embed: operator does not match the labelled factors");
  }
  const Labels rest = shape.complement(labels);
  const std::vector<int> rest_idx = indices_of(shape, rest);
  int drest = 1;
  for (int f : rest_idx) drest *= shape.factors()[f].dim;

  // Current order: labels..., rest...; permute back to shape order.
  std::vector<int> current = sel;
  current.insert(current.end(), rest_idx.begin(), rest_idx.end());
  std::vector<int> current_dims;
  for (int f : current) current_dims.push_back(shape.factors()[f].dim);
  std::vector<int> perm(current.size());
  for (std::size_t j = 0; j < current.size(); ++j) {
    perm[j] = static_cast<int>(std::find(current.begin(), current.end(), static_cast<int>(j)) -
                               current.begin());
  }
  return permute_subsystems(tensor(x, identity(drest)), current_dims, perm);
}

double trace_norm(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  // BDCSVD (used by Eigen above 16 columns) mis-deflates some block-structured inputs
  return Eigen::JacobiSVD<Matrix>(x).singularValues().sum();
}

}  // namespace petzlab
