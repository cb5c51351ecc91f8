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

#include "petzlab/classical.hpp"

#include <cmath>
#include <limits>

#include "petzlab/error.hpp"

namespace petzlab::classical {

double kl_bits(const Dist& p, const Dist& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::kShapeMismatch, "kl_bits: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    d += p[i] * std::log2(p[i] / q[i]);
  }
  return d;
}

double entropy_bits(const Dist& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double bhattacharyya(const Dist& p, const Dist& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::kShapeMismatch, "bhattacharyya: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(std::max(p[i], 0.0) * std::max(q[i], 0.0));
  return s;
}

Dist marginal(const Dist& p, const std::vector<int>& dims, const std::vector<int>& keep) {
  std::size_t out_size = 1;
  for (int k : keep) out_size *= dims[k];
  Dist out(out_size, 0.0);
  std::vector<int> digits(dims.size());
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    std::size_t rem = idx;
    for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
      digits[f] = static_cast<int>(rem % dims[f]);
      rem /= dims[f];
    }
    std::size_t o = 0;
    for (int k : keep) o = o * dims[k] + digits[k];
    out[o] += p[idx];
  }
  return out;
}

namespace {

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// Conditional entropy H(A|B) of p on A x B.
double cond_entropy(const Dist& p, int dim_a, int dim_b) {
  return entropy_bits(p) - entropy_bits(marginal(p, {dim_a, dim_b}, {1}));
}

}  // namespace

FamilyValue mono_channel(const Dist& p, const Dist& q, const std::vector<Dist>& transition) {
  const std::size_t dout = transition.size();
  Dist tp(dout, 0.0);
  Dist tq(dout, 0.0);
  for (std::size_t y = 0; y < dout; ++y) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      tp[y] += transition[y][x] * p[x];
      tq[y] += transition[y][x] * q[x];
    }
  }
  Dist recovered(p.size(), 0.0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < dout; ++y) recovered[x] += q[x] * ratio(transition[y][x] * tp[y], tq[y]);
  }
  return {kl_bits(p, q) - kl_bits(tp, tq), bhattacharyya(p, recovered)};
}

FamilyValue mono_pt(const Dist& p_ab, const Dist& q_ab, int dim_a, int dim_b) {
  const Dist p_b = marginal(p_ab, {dim_a, dim_b}, {1});
  const Dist q_b = marginal(q_ab, {dim_a, dim_b}, {1});
  Dist recovered(p_ab.size());
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) {
      const int i = a * dim_b + b;
      recovered[i] = ratio(q_ab[i] * p_b[b], q_b[b]);
    }
  }
  return {kl_bits(p_ab, q_ab) - kl_bits(p_b, q_b), bhattacharyya(p_ab, recovered)};
}

FamilyValue joint_convexity(const Dist& probs, const std::vector<Dist>& ps,
                            const std::vector<Dist>& qs) {
  const std::size_t d = ps.front().size();
  Dist p_bar(d, 0.0);
  Dist q_bar(d, 0.0);
  double avg = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    avg += probs[x] * kl_bits(ps[x], qs[x]);
    for (std::size_t i = 0; i < d; ++i) {
      p_bar[i] += probs[x] * ps[x][i];
      q_bar[i] += probs[x] * qs[x][i];
    }
  }
  double rf = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    Dist recovered(d);
    for (std::size_t i = 0; i < d; ++i) recovered[i] = ratio(qs[x][i] * p_bar[i], q_bar[i]);
    rf += probs[x] * bhattacharyya(ps[x], recovered);
  }
  return {avg - kl_bits(p_bar, q_bar), rf};
}

FamilyValue ssa(const Dist& omega, int dim_a, int dim_b, int dim_c) {
  const std::vector<int> dims{dim_a, dim_b, dim_c};
  const Dist w_ac = marginal(omega, dims, {0, 2});
  const Dist w_bc = marginal(omega, dims, {1, 2});
  const Dist w_c = marginal(omega, dims, {2});
  const double cmi =
      entropy_bits(w_ac) + entropy_bits(w_bc) - entropy_bits(omega) - entropy_bits(w_c);
  Dist recovered(omega.size());
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) {
      for (int c = 0; c < dim_c; ++c) {
        recovered[(a * dim_b + b) * dim_c + c] =
            ratio(w_ac[a * dim_c + c] * w_bc[b * dim_c + c], w_c[c]);
      }
    }
  }
  return {cmi, bhattacharyya(omega, recovered)};
}

FamilyValue concavity(const Dist& probs, const std::vector<Dist>& members, int dim_a, int dim_b) {
  const std::size_t d = members.front().size();
  Dist bar(d, 0.0);
  double avg = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    avg += probs[x] * cond_entropy(members[x], dim_a, dim_b);
    for (std::size_t i = 0; i < d; ++i) bar[i] += probs[x] * members[x][i];
  }
  const Dist bar_b = marginal(bar, {dim_a, dim_b}, {1});
  double rf = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    const Dist m_b = marginal(members[x], {dim_a, dim_b}, {1});
    Dist recovered(d);
    for (int a = 0; a < dim_a; ++a) {
      for (int b = 0; b < dim_b; ++b) {
        const int i = a * dim_b + b;
        recovered[i] = ratio(bar[i] * m_b[b], bar_b[b]);
      }
    }
    rf += probs[x] * bhattacharyya(members[x], recovered);
  }
  return {cond_entropy(bar, dim_a, dim_b) - avg, rf};
}

}  // namespace petzlab::classical
