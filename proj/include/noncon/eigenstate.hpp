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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "noncon/pauli.hpp"
#include "noncon/structure.hpp"
#include "noncon/unitary_partitioning.hpp"

namespace noncon {

/**
 * A full set of n signed, commuting, independent stabilizer generators;
 * they pin down one state up to global phase.
 */
struct StabilizerTableau {
  std::size_t n = 0;
  std::vector<PauliOperator> generators;
};

/** How the anchor tableau is padded on the qubits the generators miss. */
enum class Completion { z, x };

struct StabilizerBranch {
  std::complex<double> amplitude;
  PauliOperator word;  // bare Hermitian word applied to the anchor
};

/**
 * An eigenvector written as sum_l amplitude_l * word_l |anchor>. The branch
 * count is bounded by max(1, |A|), never by the sector dimension.
 */
struct StabilizerSum {
  StabilizerTableau anchor;
  std::vector<StabilizerBranch> branches;
  std::size_t chi_bound = 0;
  bool degenerate = false;  // set when the sector's s-vector vanishes
  double energy = 0.0;
  std::uint64_t nu_mask = 0;
  int sign = +1;
};

/**
 * Completes the signed stabilizers {nu_i * g_i} plus (optionally) sign * p_a
 * to a full tableau. The padding stabilizers are +Z (or +X) on the qubits a
 * tapering of the input words leaves untouched, pulled back through the
 * inverse rotations, so they always commute with and are independent of the
 * inputs. Throws NotCommutingError / DependentSetError on invalid input.
 */
StabilizerTableau anchor_state(const std::vector<PauliOperator>& g,
                               const std::vector<int>& nu,
                               const std::optional<PauliOperator>& p_a,
                               int sign, std::size_t n,
                               Completion completion = Completion::z);

/**
 * Closed-form eigenvector for the (nu_mask, sign) eigenvalue s0 ± ||s||.
 * When ||s|| = 0 the two eigenvalues coincide; the result is then a single
 * flagged representative of the degenerate pair.
 */
StabilizerSum build_eigenstate(const Decomposition& d, std::uint64_t nu_mask,
                               int sign, Completion completion = Completion::z);

/** Number of nonzero branches; bounded by max(1, |A|). */
std::size_t rank_bound(const StabilizerSum& state);

}  // namespace noncon
