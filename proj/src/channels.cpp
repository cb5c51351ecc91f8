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

#include "petzlab/channels.hpp"

#include <cmath>
#include <sstream>

namespace petzlab {

QuantumChannel QuantumChannel::make(std::vector<Matrix> kraus) {
  if (kraus.empty()) throw Error(ErrorKind::kShapeMismatch, "channel needs at least one Kraus operator");
  const int dout = static_cast<int>(kraus.front().rows());
  const int din = static_cast<int>(kraus.front().cols());
  for (const auto& k : kraus) {
    if (k.rows() != dout || k.cols() != din) {
      throw Error(ErrorKind::kShapeMismatch, "Kraus operators have inconsistent shapes");
    }
  }
  QuantumChannel ch(din, dout, std::move(kraus));
  const double residual = max_abs(ch.completeness() - identity(din));
  const double tol = current_tolerances().cptp_tol;
  if (residual > tol) {
    std::ostringstream os;
    os << "||sum K^dag K - I||_max = " << residual << " > " << tol;
    throw Error(ErrorKind::kCompletenessViolation, os.str());
  }
  return ch;
}

QuantumChannel QuantumChannel::unchecked(int dim_in, int dim_out, std::vector<Matrix> kraus) {
  for (const auto& k : kraus) {
    if (k.rows() != dim_out || k.cols() != dim_in) {
      throw Error(ErrorKind::kShapeMismatch, "Kraus operators have inconsistent shapes");
    }
  }
  return QuantumChannel(dim_in, dim_out, std::move(kraus));
}

Matrix QuantumChannel::completeness() const {
  Matrix s = Matrix::Zero(dim_in_, dim_in_);
  for (const auto& k : kraus_) s.noalias() += k.adjoint() * k;
  return s;
}

QuantumChannel make_channel(std::vector<Matrix> kraus) { return QuantumChannel::make(std::move(kraus)); }

QuantumChannel identity_channel(int dim) { return QuantumChannel::make({identity(dim)}); }

QuantumChannel unitary_channel(const Matrix& u) { return QuantumChannel::make({u}); }

Matrix apply(const QuantumChannel& n, const Matrix& x) {
  if (x.rows() != n.dim_in() || x.cols() != n.dim_in()) {
    throw Error(ErrorKind::kShapeMismatch, "channel input dimension mismatch");
  }
  Matrix out = Matrix::Zero(n.dim_out(), n.dim_out());
  for (const auto& k : n.kraus()) out.noalias() += k * x * k.adjoint();
  return out;
}

PsdOperator apply(const QuantumChannel& n, const PsdOperator& x) {
  return PsdOperator(hermitian_part(petzlab::apply(n, x.matrix())));
}

DensityOperator apply(const QuantumChannel& n, const DensityOperator& x) {
  return DensityOperator(hermitian_part(petzlab::apply(n, x.matrix())));
}

Matrix adjoint_apply(const QuantumChannel& n, const Matrix& y) {
  if (y.rows() != n.dim_out() || y.cols() != n.dim_out()) {
    throw Error(ErrorKind::kShapeMismatch, "adjoint channel input dimension mismatch");
  }
  Matrix out = Matrix::Zero(n.dim_in(), n.dim_in());
  for (const auto& k : n.kraus()) out.noalias() += k.adjoint() * y * k;
  return out;
}

PsdOperator choi(const QuantumChannel& n) {
  const int din = n.dim_in();
  const int dout = n.dim_out();
  // J = sum_{jk} N(|j><k|) (x) |j><k|
  Matrix j = Matrix::Zero(dout * din, dout * din);
  for (int a = 0; a < din; ++a) {
    for (int b = 0; b < din; ++b) {
      Matrix e = Matrix::Zero(din, din);
      e(a, b) = 1.0;
      const Matrix image = petzlab::apply(n, e);
      for (int r = 0; r < dout; ++r) {
        for (int c = 0; c < dout; ++c) j(r * din + a, c * din + b) = image(r, c);
      }
    }
  }
  return PsdOperator(j);
}

StinespringDilation stinespring(const QuantumChannel& n) {
  const int env = static_cast<int>(n.kraus().size());
  Matrix w(env * n.dim_out(), n.dim_in());
  for (int i = 0; i < env; ++i) w.middleRows(i * n.dim_out(), n.dim_out()) = n.kraus()[i];
  return {std::move(w), env, n.dim_out(), n.dim_in()};
}

QuantumChannel channel_from_stinespring(const StinespringDilation& w) {
  std::vector<Matrix> kraus;
  kraus.reserve(w.dim_env);
  for (int i = 0; i < w.dim_env; ++i) kraus.push_back(w.isometry.middleRows(i * w.dim_out, w.dim_out));
  return QuantumChannel::make(std::move(kraus));
}

Matrix apply_dilation(const StinespringDilation& w, const Matrix& x) {
  const Matrix full = w.isometry * x * w.isometry.adjoint();
  return partial_trace(full, SpaceShape{{"E", w.dim_env}, {"B", w.dim_out}}, {"B"});
}

QuantumChannel partial_trace_channel(const SpaceShape& shape, const Labels& discard) {
  for (const auto& l : discard) shape.index_of(l);
  const std::vector<int> dims = shape.dims();
  const int nf = static_cast<int>(dims.size());
  std::vector<bool> dropped(nf, false);
  for (const auto& l : discard) dropped[shape.index_of(l)] = true;
  int dd = 1;
  int dk = 1;
  for (int f = 0; f < nf; ++f) (dropped[f] ? dd : dk) *= dims[f];

  // K_j(k, i) = 1 when basis index i splits into discarded digits j and kept
  // digits k (both read most-significant first in shape order).
  const int total = dd * dk;
  std::vector<Matrix> kraus(dd, Matrix::Zero(dk, total));
  for (int i = 0; i < total; ++i) {
    int rem = i;
    std::vector<int> digits(nf);
    for (int f = nf - 1; f >= 0; --f) {
      digits[f] = rem % dims[f];
      rem /= dims[f];
    }
    int j = 0;
    int k = 0;
    for (int f = 0; f < nf; ++f) {
      if (dropped[f]) {
        j = j * dims[f] + digits[f];
      } else {
        k = k * dims[f] + digits[f];
      }
    }
    kraus[j](k, i) = 1.0;
  }
  return QuantumChannel::make(std::move(kraus));
}

QuantumChannel random_channel(int dim_in, int dim_out, int dim_env, CounterRng& rng) {
  if (dim_out * dim_env < dim_in) {
    throw Error(ErrorKind::kShapeMismatch, "dim_out * dim_env must be at least dim_in");
  }
  const Matrix w = random_isometry(dim_out * dim_env, dim_in, rng);
  std::vector<Matrix> kraus;
  for (int i = 0; i < dim_env; ++i) kraus.push_back(w.middleRows(i * dim_out, dim_out));
  return QuantumChannel::make(std::move(kraus));
}

QuantumChannel classical_channel(const std::vector<std::vector<double>>& transition) {
  const int dout = static_cast<int>(transition.size());
  const int din = static_cast<int>(transition.front().size());
  std::vector<Matrix> kraus;
  for (int y = 0; y < dout; ++y) {
    for (int x = 0; x < din; ++x) {
      const double p = transition[y][x];
      if (p < 0.0) throw Error(ErrorKind::kNegativeParameter, "negative transition probability");
      if (p == 0.0) continue;
      Matrix k = Matrix::Zero(dout, din);
      k(y, x) = std::sqrt(p);
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel::make(std::move(kraus));
}

}  // namespace petzlab
