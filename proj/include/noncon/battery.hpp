// Copyright 2026 The noncon developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "noncon/pauli.hpp"

namespace noncon {

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail" or "skip"
  std::string detail;
};

struct BatteryOptions {
  std::size_t dense_qubit_cap = 6;   // matrix-level cross-checks
  std::size_t state_qubit_cap = 10;  // statevector-level cross-checks
  std::size_t projector_g_cap = 8;
};

/**
 * Cross-checks the whole pipeline on one Hamiltonian against the dense and
 * symbolic oracles. Contextual inputs only run the classifier agreement
 * check; everything else is reported as skipped.
 */
std::vector<CheckResult> run_battery(const PauliSum& h,
                                     const BatteryOptions& opts = {});

bool battery_passed(const std::vector<CheckResult>& results);

}  // namespace noncon
