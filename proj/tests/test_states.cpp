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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "petzlab/states.hpp"

using namespace petzlab;
using oracle::diag;
using oracle::kind_of;

TEST(ValidateDensity, AcceptsAndRejects) {
  EXPECT_NO_THROW(validate_density(diag({0.5, 0.5})));
  Matrix bad(2, 2);
  bad << 0.5, 0.6, 0.6, 0.5;
  EXPECT_EQ(kind_of([&] { validate_density(bad); }), ErrorKind::kNegativeEigenvalue);
  EXPECT_EQ(kind_of([] { validate_density(diag({0.6, 0.5})); }), ErrorKind::kTraceNotOne);
  Matrix nh(2, 2);
  nh << 0.5, 0.1, 0.0, 0.5;
  EXPECT_EQ(kind_of([&] { validate_density(nh); }), ErrorKind::kNonHermitian);
}

TEST(ValidateDensity, TraceToleranceParameter) {
  EXPECT_NO_THROW(validate_density(diag({0.5, 0.5 + 1e-11})));
  EXPECT_EQ(kind_of([] { validate_density(diag({0.5, 0.5 + 1e-11}), 1e-13); }),
            ErrorKind::kTraceNotOne);
}

TEST(RandomDensity, DimensionOneAndRank) {
  CounterRng rng(1, 2);
  EXPECT_NEAR(random_density(1, 1, rng).matrix()(0, 0).real(), 1.0, 1e-15);
  for (int r = 1; r <= 4; ++r) {
    const DensityOperator rho = random_density(4, r, rng);
    EXPECT_EQ(rho.rank(), r);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-13);
  }
  EXPECT_EQ(kind_of([&] { random_density(3, 4, rng); }), ErrorKind::kShapeMismatch);
}

TEST(RandomDensity, DeterministicPerStream) {
  CounterRng a(77, 3), b(77, 3), c(77, 4);
  const Matrix x = random_density(3, 3, a).matrix();
  EXPECT_EQ(max_abs(x - random_density(3, 3, b).matrix()), 0.0);
  EXPECT_GT(max_abs(x - random_density(3, 3, c).matrix()), 1e-3);
}

TEST(RandomUnitary, UnitaryAndIsometry) {
  CounterRng rng(2, 2);
  for (int d : {1, 2, 5}) {
    const Matrix u = random_unitary(d, rng);
    EXPECT_LT(max_abs(u.adjoint() * u - identity(d)), 1e-12);
  }
  const Matrix v = random_isometry(6, 2, rng);
  EXPECT_LT(max_abs(v.adjoint() * v - identity(2)), 1e-12);
  EXPECT_EQ(kind_of([&] { random_isometry(2, 3, rng); }), ErrorKind::kShapeMismatch);
}

TEST(RandomProbabilities, OnSimplex) {
  CounterRng rng(3, 0);
  for (int k = 1; k < 6; ++k) {
    const auto p = random_probabilities(k, rng);
    double s = 0;
    for (double x : p) {
      EXPECT_GE(x, 0.0);
      s += x;
    }
    EXPECT_NEAR(s, 1.0, 1e-14);
  }
}

TEST(Ensemble, Validation) {
  const DensityOperator a = diagonal_density({1.0, 0.0});
  const DensityOperator b = diagonal_density({0.0, 1.0});
  EXPECT_EQ(kind_of([&] { Ensemble({0.5}, {a, b}); }), ErrorKind::kShapeMismatch);
  EXPECT_EQ(kind_of([&] { Ensemble({1.5, -0.5}, {a, b}); }), ErrorKind::kNegativeParameter);
  EXPECT_EQ(kind_of([&] { Ensemble({0.5, 0.6}, {a, b}); }), ErrorKind::kTraceNotOne);
  EXPECT_EQ(kind_of([&] { Ensemble({0.5, 0.5}, {a, diagonal_density({1, 0, 0})}); }),
            ErrorKind::kShapeMismatch);
  const Ensemble e({0.25, 0.75}, {a, b});
  EXPECT_LT(max_abs(e.average().matrix() - diag({0.25, 0.75})), 1e-15);
}

TEST(CqState, Example) {
  const Ensemble e({0.5, 0.5}, {diagonal_density({1, 0}), diagonal_density({0, 1})});
  const LabeledState theta = cq_state(e);
  EXPECT_LT(max_abs(theta.state.matrix() - diag({0.5, 0, 0, 0.5})), 1e-15);
  EXPECT_EQ(theta.shape.labels(), (Labels{"X", "S"}));
}

TEST(CqState, MarginalsAreDistributionAndAverage) {
  CounterRng rng(4, 4);
  const Ensemble e({0.2, 0.3, 0.5}, {random_density(2, 2, rng), random_density(2, 1, rng),
                                     random_density(2, 2, rng)});
  const LabeledState theta = cq_state(e);
  EXPECT_LT(max_abs(partial_trace(theta.state.matrix(), theta.shape, {"X"}) - diag({0.2, 0.3, 0.5})),
            1e-14);
  EXPECT_LT(max_abs(partial_trace(theta.state.matrix(), theta.shape, {"S"}) - e.average().matrix()),
            1e-14);
}

TEST(Interpolation, Examples) {
  const DensityOperator sigma = diagonal_density({0.75, 0.25});
  const DensityOperator rho = diagonal_density({0.25, 0.75});
  const LabeledState xi0 = interpolation_state(sigma, rho, 0.0);
  EXPECT_LT(max_abs(partial_trace(xi0.state.matrix(), xi0.shape, {"S"}) - sigma.matrix()), 1e-15);
  const LabeledState xi = interpolation_state(sigma, rho, 1.0 / 3.0);
  const Matrix expect = (3 * sigma.matrix() + rho.matrix()) / 4;
  EXPECT_LT(max_abs(partial_trace(xi.state.matrix(), xi.shape, {"S"}) - expect), 1e-15);
  EXPECT_EQ(kind_of([&] { interpolation_state(sigma, rho, -0.1); }), ErrorKind::kNegativeParameter);
}

TEST(Samplers, OutputsValidate) {
  CounterRng rng(5, 5);
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + i % 6;
    EXPECT_NO_THROW(validate_density(random_density(d, 1 + i % d, rng).matrix()));
    EXPECT_NO_THROW(validate_density(random_diagonal_density(d, rng).matrix()));
  }
}
