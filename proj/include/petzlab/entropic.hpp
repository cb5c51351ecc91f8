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

// Scalar entropic functionals. Entropies and divergences are in bits.

#include <string>

#include "petzlab/opmath.hpp"
#include "petzlab/states.hpp"

namespace petzlab {

/// A relative entropy in bits, or +infinity when rho leaks outside supp(sigma).
struct EntropicValue {
  double bits = 0.0;
  bool infinite = false;
  /// Tr{(I - Pi_sigma) rho}; projected out when below supp_viol_tol.
  double support_violation_mass = 0.0;

  bool finite() const { return !infinite; }
  /// bits, or +inf.
  double value() const;
};

/// D(rho||sigma) = Tr rho (log rho - log sigma), log taken on supp(sigma).
/// rho may be any PSD operator; the unnormalized formula is used.
EntropicValue rel_entropy(const PsdOperator& rho, const PsdOperator& sigma);

/// -Tr rho log2 rho
double entropy(const PsdOperator& rho);

/// H(A|B) = H(AB) - H(B). Factors other than a and b are traced out first.
double cond_entropy(const PsdOperator& rho, const SpaceShape& shape, const std::string& a,
                    const std::string& b);
/// H(A|B) = -D(rho_AB || I_A (x) rho_B); second route used as a self-check.
double cond_entropy_via_divergence(const PsdOperator& rho, const SpaceShape& shape,
                                   const std::string& a, const std::string& b);

/// I(A;B|C) = D(w_ABC || w_AC (x) I_B) - D(w_BC || w_C (x) I_B).
double cmi(const PsdOperator& omega, const SpaceShape& shape, const std::string& a = "A",
           const std::string& b = "B", const std::string& c = "C");
/// I(A;B|C) = H(AC) + H(BC) - H(ABC) - H(C).
double cmi_via_entropies(const PsdOperator& omega, const SpaceShape& shape,
                         const std::string& a = "A", const std::string& b = "B",
                         const std::string& c = "C");

/// ||sqrt(A) sqrt(B)||_1
double root_fidelity(const PsdOperator& a, const PsdOperator& b);
double fidelity(const PsdOperator& a, const PsdOperator& b);
/// 2 (1 - root fidelity), clamped to [0, 2].
double bures_sq(const PsdOperator& rho, const PsdOperator& sigma);
double bures_sq_from_root_fidelity(double root_f);

/// Both unit conventions of the -log F versus D_B^2 comparison, kept side by
/// side so a base mix-up shows up as a disagreement.
struct LogFidelityComparison {
  double neg_ln_f;      // -ln F
  double bures_sq;      // 2 (1 - sqrt F)
  double neg_log2_f;    // -log2 F
  double bures_bits;    // 2 (1 - sqrt F) / ln 2
  bool holds_natural;   // -ln F >= D_B^2
  bool holds_bits;      // -log2 F >= D_B^2 / ln 2
};
LogFidelityComparison compare_log_fidelity(double root_f, double slack = 1e-12);

}  // namespace petzlab
