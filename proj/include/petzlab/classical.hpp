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

// Commuting (all-diagonal) closed forms of the five inequality families.
// Joint distributions are row-major over their factors, first factor most
// significant, which matches the diagonal of the corresponding tensor product.

#include <vector>

namespace petzlab::classical {

using Dist = std::vector<double>;

/// Relative entropy in bits; +inf when p leaks outside supp(q).
double kl_bits(const Dist& p, const Dist& q);
double entropy_bits(const Dist& p);
/// sum_i sqrt(p_i q_i)
double bhattacharyya(const Dist& p, const Dist& q);
/// Marginal on the factors listed in `keep` (ascending factor indices).
Dist marginal(const Dist& p, const std::vector<int>& dims, const std::vector<int>& keep);

/// Entropic gap of a family and the (probability-averaged) root fidelity of
/// its Petz recovery.
struct FamilyValue {
  double delta_bits;
  double root_fidelity;
};

/// transition[y][x] = P(y|x)
FamilyValue mono_channel(const Dist& p, const Dist& q, const std::vector<Dist>& transition);
FamilyValue mono_pt(const Dist& p_ab, const Dist& q_ab, int dim_a, int dim_b);
FamilyValue joint_convexity(const Dist& probs, const std::vector<Dist>& ps,
                            const std::vector<Dist>& qs);
FamilyValue ssa(const Dist& omega, int dim_a, int dim_b, int dim_c);
FamilyValue concavity(const Dist& probs, const std::vector<Dist>& members, int dim_a, int dim_b);

}  // namespace petzlab::classical
