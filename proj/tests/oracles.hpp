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

// Independent reference computations for the test suites. None of these call
// into the library's linear-algebra kernels beyond plain Eigen products.

#include <cmath>
#include <complex>
#include <initializer_list>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "petzlab/error.hpp"
#include "petzlab/opmath.hpp"
#include "petzlab/rng.hpp"
#include "petzlab/states.hpp"

namespace oracle {

using petzlab::Complex;
using petzlab::Matrix;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Matrix basis_ket(int d, int j) {
  Matrix v = Matrix::Zero(d, 1);
  v(j, 0) = 1.0;
  return v;
}

/// Traces out factor `k` of dims by the Kraus sum sum_j (I (x) <j| (x) I) X (...)^dag.
inline Matrix trace_out(const Matrix& x, const std::vector<int>& dims, int k) {
  int left = 1, right = 1;
  for (int i = 0; i < k; ++i) left *= dims[i];
  for (std::size_t i = k + 1; i < dims.size(); ++i) right *= dims[i];
  Matrix out = Matrix::Zero(left * right, left * right);
  for (int j = 0; j < dims[k]; ++j) {
    const Matrix bra = kron(kron(Matrix::Identity(left, left), basis_ket(dims[k], j).adjoint()),
                            Matrix::Identity(right, right));
    out += bra * x * bra.adjoint();
  }
  return out;
}

/// Exact binomial mass of strings of length n over a two-letter alphabet with
/// probabilities (p, 1 - p) and per-letter costs (c0, c1), accepted when the
/// mean cost is within delta of `target`. Long-double accumulation.
inline long double binomial_mass(int n, long double p, long double c0, long double c1,
                                 long double target, long double delta) {
  long double total = 0.0L;
  for (int k = 0; k <= n; ++k) {  // k zeros
    const long double mean = (k * c0 + (n - k) * c1) / n;
    if (std::fabs(mean - target) > delta + 1e-12L) continue;
    long double log_c = std::lgamma(static_cast<long double>(n + 1)) -
                        std::lgamma(static_cast<long double>(k + 1)) -
                        std::lgamma(static_cast<long double>(n - k + 1));
    total += std::exp(log_c + k * std::log(p) + (n - k) * std::log1p(-p));
  }
  return total;
}

inline Matrix random_hermitian(int d, petzlab::CounterRng& rng) {
  const Matrix g = petzlab::random_ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

inline Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(v.size(), v.size());
  int i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

/// The ErrorKind thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<petzlab::ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const petzlab::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace oracle
