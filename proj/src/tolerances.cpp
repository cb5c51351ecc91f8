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

#include "petzlab/tolerances.hpp"

namespace petzlab {
namespace {
thread_local Tolerances g_current{};
}  // namespace

const Tolerances& current_tolerances() { return g_current; }

ToleranceScope::ToleranceScope(const Tolerances& t) : saved_(g_current) { g_current = t; }

ToleranceScope::~ToleranceScope() { g_current = saved_; }

}  // namespace petzlab
