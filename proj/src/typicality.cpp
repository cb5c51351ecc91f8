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

#include "petzlab/typicality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>

namespace petzlab {
namespace {

// Absolute slack on the delta window; absorbs the last-bit drift of a sum of
// logarithms so that exactly-flat spectra stay typical at delta = 0.
constexpr double kWindowSlack = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

long long checked_power(int d, int n) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= d;
    if (total > kDenseCap) return kDenseCap + 1;
  }
  return total;
}

void enumerate_rec(int d, int remaining, std::vector<int>& cur, std::size_t pos,
                   std::vector<std::vector<int>>& out) {
  if (pos + 1 == static_cast<std::size_t>(d)) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    enumerate_rec(d, remaining - k, cur, pos + 1, out);
  }
}

double type_cost(const std::vector<double>& cost, const std::vector<int>& counts, int n) {
  double total = 0.0;
  for (std::size_t y = 0; y < counts.size(); ++y) {
    if (counts[y] == 0) continue;
    if (!std::isfinite(cost[y])) return kInf;
    total += counts[y] * cost[y];
  }
  return total / n;
}

bool within_window(double per_symbol_cost, double reference_expectation, double delta) {
  if (!std::isfinite(per_symbol_cost)) return false;
  return std::abs(per_symbol_cost + reference_expectation) <= delta + kWindowSlack;
}

double log_multinomial(const std::vector<int>& counts, int n) {
  double v = std::lgamma(n + 1.0);
  for (int k : counts) v -= std::lgamma(k + 1.0);
  return v;
}

// Exact multinomial n! / prod k!; nullopt when it leaves long long.
std::optional<long long> exact_multinomial(const std::vector<int>& counts) {
  constexpr auto kMax = static_cast<unsigned __int128>(std::numeric_limits<long long>::max());
  unsigned __int128 total = 1;
  int m = 0;
  for (int k : counts) {
    // C(m + k, k) built incrementally; each prefix is itself a binomial, so division is exact.
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
      c = c * static_cast<unsigned>(m + i) / static_cast<unsigned>(i);
      if (c > kMax) return std::nullopt;
    }
    m += k;
    total *= c;
    if (total > kMax) return std::nullopt;
  }
  return static_cast<long long>(total);
}

// Row-major string digits of basis index idx over n symbols of alphabet d.
std::vector<int> string_digits(long long idx, int d, int n) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(idx % d);
    idx /= d;
  }
  return digits;
}

Eigen::VectorXcd string_vector(const Matrix& basis, const std::vector<int>& digits) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (int y : digits) {
    const Eigen::VectorXcd col = basis.col(y);
    Eigen::VectorXcd next(v.size() * col.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * col.size(), col.size()) = v[i] * col;
    v = std::move(next);
  }
  return v;
}

Matrix projector_onto_strings(const Matrix& basis, int d, int n, const std::vector<bool>& pick) {
  const long long total = static_cast<long long>(pick.size());
  std::vector<long long> chosen;
  for (long long i = 0; i < total; ++i) {
    if (pick[i]) chosen.push_back(i);
  }
  Matrix cols(total, static_cast<Eigen::Index>(chosen.size()));
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    cols.col(static_cast<Eigen::Index>(c)) = string_vector(basis, string_digits(chosen[c], d, n));
  }
  return cols * cols.adjoint();
}

}  // namespace

bool TypicalProjector::accepts_type(const std::vector<int>& counts) const {
  return within_window(type_cost(symbol_cost, counts, n), reference_expectation, delta);
}

std::vector<std::vector<int>> enumerate_types(int d, int n) {
  std::vector<std::vector<int>> out;
  if (d < 1 || n < 0) return out;
  std::vector<int> cur(d, 0);
  enumerate_rec(d, n, cur, 0, out);
  return out;
}

TypicalProjector typical_projector(const DensityOperator& rho, const PsdOperator& sigma,
                                   double delta, int n, TypicalityPath path) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "typical_projector: rho and sigma differ in dimension");
  }
  if (n < 1) throw Error(ErrorKind::kNegativeParameter, "typical_projector needs n >= 1");
  if (delta < 0.0) throw Error(ErrorKind::kNegativeParameter, "delta must be non-negative");
  const int d = sigma.dim();
  if (path == TypicalityPath::kDense && checked_power(d, n) > kDenseCap) {
    throw Error(ErrorKind::kDimensionCap,
                "dim^n exceeds " + std::to_string(kDenseCap) + " on the dense path");
  }

  TypicalProjector tp;
  tp.n = n;
  tp.delta = delta;
  tp.sigma_spectrum = sigma.spectrum();
  tp.symbol_cost.resize(d);
  tp.pushforward.resize(d);
  double off_support = 0.0;
  double expectation = 0.0;
  for (int y = 0; y < d; ++y) {
    const double f = tp.sigma_spectrum.values[y];
    const Eigen::VectorXcd phi = tp.sigma_spectrum.vectors.col(y);
    const double p = std::max(0.0, (phi.adjoint() * rho.matrix() * phi)(0, 0).real());
    tp.pushforward[y] = p;
    if (f > sigma.support_tol()) {
      tp.symbol_cost[y] = -std::log2(f);
      expectation += p * std::log2(f);
    } else {
      tp.symbol_cost[y] = kInf;
      off_support += p;
    }
  }
  if (off_support > current_tolerances().supp_viol_tol) {
    throw Error(ErrorKind::kSupportViolation, "supp(rho) is not contained in supp(sigma)");
  }
  tp.reference_expectation = expectation;

  for (auto& counts : enumerate_types(d, n)) {
    if (tp.accepts_type(counts)) tp.accepted_types.push_back(std::move(counts));
  }

  if (path == TypicalityPath::kDense) {
    const long long total = checked_power(d, n);
    std::vector<bool> accepted(total, false);
    for (long long idx = 0; idx < total; ++idx) {
      double cost = 0.0;
      for (int y : string_digits(idx, d, n)) cost += tp.symbol_cost[y];
      accepted[idx] = within_window(cost / n, tp.reference_expectation, delta);
    }
    tp.projector = projector_onto_strings(tp.sigma_spectrum.vectors, d, n, accepted);
    tp.accepted_strings = std::move(accepted);
  }
  return tp;
}

Matrix tensor_power(const Matrix& x, int n) {
  Matrix out = Matrix::Ones(1, 1);
  for (int i = 0; i < n; ++i) out = tensor(out, x);
  return out;
}

double typical_mass(const TypicalProjector& tp, const DensityOperator& rho) {
  if (rho.dim() != tp.dim()) throw Error(ErrorKind::kShapeMismatch, "typical_mass: dimension mismatch");
  if (tp.projector) {
    return trace_product(*tp.projector, tensor_power(rho.matrix(), tp.n)).real();
  }
  const auto& types = tp.accepted_types;
  const long long count = static_cast<long long>(types.size());
  std::vector<double> weights(types.size(), 0.0);
#pragma omp parallel for schedule(static) if (count > 4096)
  for (long long t = 0; t < count; ++t) {
    const auto& k = types[t];
    double log_w = log_multinomial(k, tp.n);
    bool zero = false;
    for (std::size_t y = 0; y < k.size(); ++y) {
      if (k[y] == 0) continue;
      if (tp.pushforward[y] <= 0.0) {
        zero = true;
        break;
      }
      log_w += k[y] * std::log(tp.pushforward[y]);
    }
    weights[t] = zero ? 0.0 : std::exp(log_w);
  }
  double mass = 0.0;
  for (double w : weights) mass += w;
  return std::clamp(mass, 0.0, 1.0);
}

double hoeffding_bound(const TypicalProjector& tp) {
  double lo = kInf;
  double hi = -kInf;
  for (int y = 0; y < tp.dim(); ++y) {
    if (tp.pushforward[y] <= 0.0 || !std::isfinite(tp.symbol_cost[y])) continue;
    lo = std::min(lo, tp.symbol_cost[y]);
    hi = std::max(hi, tp.symbol_cost[y]);
  }
  const double range = hi - lo;
  if (!(range > 0.0)) return 0.0;
  return std::min(1.0, 2.0 * std::exp(-2.0 * tp.n * tp.delta * tp.delta / (range * range)));
}

int EigenvalueShells::window_count() const {
  return static_cast<int>(
      std::count_if(shells.begin(), shells.end(), [](const auto& s) { return s.in_window; }));
}

long long EigenvalueShells::total_multiplicity() const {
  long long m = 0;
  for (const auto& s : shells) {
    if (!s.multiplicity || __builtin_add_overflow(m, *s.multiplicity, &m)) {
      throw Error(ErrorKind::kDimensionCap, "total multiplicity overflows");
    }
  }
  return m;
}

EigenvalueShells eigenvalue_shells(const PsdOperator& sigma, int n, const DensityOperator& rho,
                                   double delta, TypicalityPath path) {
  const TypicalProjector tp = typical_projector(rho, sigma, delta, n, TypicalityPath::kExact);
  const int d = sigma.dim();
  if (path == TypicalityPath::kDense && checked_power(d, n) > kDenseCap) {
    throw Error(ErrorKind::kDimensionCap, "dim^n exceeds the dense cap");
  }

  struct Entry {
    double log2_s;  // -inf for zero eigenvalue
    std::vector<int> counts;
  };
  std::vector<Entry> entries;
  const auto types = enumerate_types(d, n);
  for (const auto& k : types) {
    const double c = type_cost(tp.symbol_cost, k, n);
    entries.push_back({std::isfinite(c) ? -c * n : -kInf, k});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.log2_s > b.log2_s; });

  EigenvalueShells out;
  out.type_count = static_cast<long long>(types.size());
  // Merge eigenvalues agreeing to relative 1e-9.
  const double merge = std::log2(1.0 + 1e-9);
  for (const auto& e : entries) {
    const std::optional<long long> mult = exact_multinomial(e.counts);
    const double log2_mult = log_multinomial(e.counts, n) / std::numbers::ln2;
    if (!out.shells.empty()) {
      auto& last = out.shells.back();
      const double last_log = last.eigenvalue > 0.0 ? std::log2(last.eigenvalue) : -kInf;
      const bool both_zero = !std::isfinite(e.log2_s) && !std::isfinite(last_log);
      if (both_zero || (std::isfinite(e.log2_s) && std::abs(last_log - e.log2_s) <= merge)) {
        long long sum = 0;
        last.multiplicity = last.multiplicity && mult && !__builtin_add_overflow(*last.multiplicity, *mult, &sum)
                                ? std::optional<long long>(sum)
                                : std::nullopt;
        const double hi = std::max(last.log2_multiplicity, log2_mult);
        const double lo = std::min(last.log2_multiplicity, log2_mult);
        last.log2_multiplicity = hi + std::log2(1.0 + std::exp2(lo - hi));
        last.types.push_back(e.counts);
        continue;
      }
    }
    EigenvalueShell shell;
    shell.eigenvalue = std::isfinite(e.log2_s) ? std::exp2(e.log2_s) : 0.0;
    shell.multiplicity = mult;
    shell.log2_multiplicity = log2_mult;
    shell.types.push_back(e.counts);
    shell.in_window = std::isfinite(e.log2_s) &&
                      within_window(-e.log2_s / n, tp.reference_expectation, delta);
    out.shells.push_back(std::move(shell));
  }

  if (path == TypicalityPath::kDense) {
    const long long total = checked_power(d, n);
    for (auto& shell : out.shells) {
      std::vector<bool> pick(total, false);
      for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> counts(d, 0);
        for (int y : string_digits(idx, d, n)) ++counts[y];
        pick[idx] = std::find(shell.types.begin(), shell.types.end(), counts) != shell.types.end();
      }
      shell.projector = projector_onto_strings(tp.sigma_spectrum.vectors, d, n, pick);
    }
  }
  return out;
}

Matrix sandwich(const Matrix& x, const Matrix& pi_outer, const Matrix& pi_inner) {
  if (x.rows() != pi_outer.rows() || x.rows() != pi_inner.rows() || x.rows() != x.cols()) {
    throw Error(ErrorKind::kShapeMismatch, "sandwich: operator dimensions differ");
  }
  const Matrix left = pi_outer * pi_inner;
  return left * x * left.adjoint();
}

Matrix lift_to_bipartite_power(const Matrix& op_on_b, int dim_a, int dim_b, int n) {
  std::vector<SpaceShape::Factor> factors;
  Labels b_labels;
  for (int i = 0; i < n; ++i) {
    factors.push_back({"A" + std::to_string(i), dim_a});
    factors.push_back({"B" + std::to_string(i), dim_b});
    b_labels.push_back("B" + std::to_string(i));
  }
  return embed(op_on_b, SpaceShape(std::move(factors)), b_labels);
}

namespace reference {

double typical_mass(const TypicalProjector& tp) {
  const int d = tp.dim();
  long long total = 1;
  for (int i = 0; i < tp.n; ++i) total *= d;
  double mass = 0.0;
  for (long long idx = 0; idx < total; ++idx) {
    double cost = 0.0;
    double p = 1.0;
    for (int y : string_digits(idx, d, tp.n)) {
      cost += tp.symbol_cost[y];
      p *= tp.pushforward[y];
    }
    if (within_window(cost / tp.n, tp.reference_expectation, tp.delta)) mass += p;
  }
  return mass;
}

}  // namespace reference
}  // namespace petzlab
