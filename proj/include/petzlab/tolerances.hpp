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

namespace petzlab {

/// Numerical tolerances shared by every module. Relative entries are scaled
/// by the magnitude of the operator they are applied to.
struct Tolerances {
  double herm_rel = 1e-10;      // ||M - M^dag||_max <= herm_rel * max|M_ij|
  double psd_rel = 1e-10;       // clip floor: psd_rel * dim * max|lambda|
  double support_rel = 1e-12;   // support cut: support_rel * max lambda
  double trace_tol = 1e-10;     // |Tr rho - 1| for density operators
  double supp_viol_tol = 1e-9;  // rho mass outside supp(sigma) tolerated by D
  double cptp_tol = 1e-9;       // Kraus completeness residual

  /// Same settings with the clip and support cuts tightened by `factor`.
  Tolerances tightened(double factor) const {
    Tolerances t = *this;
    t.psd_rel /= factor;
    t.support_rel /= factor;
    return t;
  }
};

/// Tolerances in effect on the calling thread.
const Tolerances& current_tolerances();

/// Overrides the calling thread's tolerances for the lifetime of the scope.
/// Scopes nest; each worker thread starts from the defaults.
class ToleranceScope {
 public:
  explicit ToleranceScope(const Tolerances& t);
  ~ToleranceScope();
  ToleranceScope(const ToleranceScope&) = delete;
  ToleranceScope& operator=(const ToleranceScope&) = delete;

 private:
  Tolerances saved_;
};

}  // namespace petzlab
