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

#include "petzlab/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace petzlab {

double EntropicValue::value() const {
  return infinite ? std::numeric_limits<double>::infinity() : bits;
}

namespace {

void require_same_dim(const PsdOperator& a, const PsdOperator& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::kShapeMismatch, "operators differ in dimension");
}

// Tr rho log2 rho from the clipped spectrum.
double neg_entropy(const PsdOperator& rho) {
  double s = 0.0;
  const double cut = rho.support_tol();
  for (Eigen::Index i = 0; i < rho.spectrum().values.size(); ++i) {
    const double lam = rho.spectrum().values[i];
    if (lam > cut) s += lam * std::log2(lam);
  }
  return s;
}

}  // namespace

EntropicValue rel_entropy(const PsdOperator& rho, const PsdOperator& sigma) {
  require_same_dim(rho, sigma);
  EntropicValue out;
  const Matrix proj = support_projector(sigma);
  out.support_violation_mass =
      std::max(0.0, rho.trace() - trace_product(proj, rho.matrix()).real());
  if (out.support_violation_mass > current_tolerances().supp_viol_tol) {
    out.infinite = true;
    out.bits = std::numeric_limits<double>::infinity();
    return out;
  }
  const Matrix log_sigma = mat_func(sigma, SpectralFunction::kLog2);
  out.bits = neg_entropy(rho) - trace_product(rho.matrix(), log_sigma).real();
  return out;
}

double entropy(const PsdOperator& rho) { return -neg_entropy(rho); }

double cond_entropy(const PsdOperator& rho, const SpaceShape& shape, const std::string& a,
                    const std::string& b) {
  const Matrix rho_ab = partial_trace(rho.matrix(), shape, {a, b});
  const Matrix rho_b = partial_trace(rho.matrix(), shape, {b});
  return entropy(PsdOperator(rho_ab)) - entropy(PsdOperator(rho_b));
}

double cond_entropy_via_divergence(const PsdOperator& rho, const SpaceShape& shape,
                                   const std::string& a, const std::string& b) {
  const SpaceShape ab = shape.restricted({a, b});
  const PsdOperator rho_ab(partial_trace(rho.matrix(), shape, {a, b}));
  const Matrix rho_b = partial_trace(rho.matrix(), shape, {b});
  const PsdOperator reference(embed(rho_b, ab, {b}));
  return -rel_entropy(rho_ab, reference).value();
}

double cmi(const PsdOperator& omega, const SpaceShape& shape, const std::string& a,
           const std::string& b, const std::string& c) {
  const SpaceShape abc = shape.restricted({a, b, c});
  const SpaceShape bc = shape.restricted({b, c});
  const PsdOperator w_abc(partial_trace(omega.matrix(), shape, {a, b, c}));
  const PsdOperator w_bc(partial_trace(omega.matrix(), shape, {b, c}));
  const Matrix w_ac = partial_trace(omega.matrix(), shape, {a, c});
  const Matrix w_c = partial_trace(omega.matrix(), shape, {c});
  const PsdOperator ref_abc(embed(w_ac, abc, abc.restricted({a, c}).labels()));
  const PsdOperator ref_bc(embed(w_c, bc, {c}));
  return rel_entropy(w_abc, ref_abc).value() - rel_entropy(w_bc, ref_bc).value();
}

double cmi_via_entropies(const PsdOperator& omega, const SpaceShape& shape, const std::string& a,
                         const std::string& b, const std::string& c) {
  auto h = [&](const Labels& keep) {
    return entropy(PsdOperator(partial_trace(omega.matrix(), shape, keep)));
  };
  return h({a, c}) + h({b, c}) - h({a, b, c}) - h({c});
}

double root_fidelity(const PsdOperator& a, const PsdOperator& b) {
  require_same_dim(a, b);
  const Matrix sa = mat_func(a, SpectralFunction::kSqrt, 0.0);
  const Matrix sb = mat_func(b, SpectralFunction::kSqrt, 0.0);
  return trace_norm(sa * sb);
}

double fidelity(const PsdOperator& a, const PsdOperator& b) {
  const double r = root_fidelity(a, b);
  return r * r;
}

double bures_sq_from_root_fidelity(double root_f) {
  return std::clamp(2.0 * (1.0 - root_f), 0.0, 2.0);
}

double bures_sq(const PsdOperator& rho, const PsdOperator& sigma) {
  return bures_sq_from_root_fidelity(root_fidelity(rho, sigma));
}

LogFidelityComparison compare_log_fidelity(double root_f, double slack) {
  LogFidelityComparison c{};
  const double ln2 = std::numbers::ln2;
  c.neg_ln_f = -2.0 * std::log(root_f);
  c.bures_sq = 2.0 * (1.0 - root_f);
  c.neg_log2_f = c.neg_ln_f / ln2;
  c.bures_bits = c.bures_sq / ln2;
  c.holds_natural = c.neg_ln_f >= c.bures_sq - slack;
  c.holds_bits = c.neg_log2_f >= c.bures_bits - slack;
  return c;
}

}  // namespace petzlab
