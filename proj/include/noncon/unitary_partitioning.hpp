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
#include <vector>

#include "noncon/pauli.hpp"

namespace noncon {

/**
 * An anticommuting linear combination scaled to unit 2-norm. Words keep
 * their input order; zero coefficients are kept so callers can address
 * every family member as a reduction target.
 */
struct NormalizedACSum {
  std::size_t n = 0;
  std::vector<PauliOperator> words;
  std::vector<double> betas;  // unit 2-norm
  double norm = 0.0;          // the scale that was divided out
};

enum class PlanKind { sequence, lcu };

/** One factor exp(-i * angle * axis) of a sequence plan. */
struct RotationStep {
  PauliOperator axis;
  double angle = 0.0;
};

/**
 * A unitary R that reduces a normalized anticommuting sum O to its target
 * word: R^dag * O * R = +1 * target. Sequence plans store R as an ordered
 * product of rotation steps (step 0 applied first under conjugation); LCU
 * plans store R explicitly as a Pauli-word expansion sum(d_l * W_l).
 */
struct RotationPlan {
  PlanKind kind = PlanKind::sequence;
  std::size_t n = 0;
  PauliOperator target;
  std::vector<RotationStep> steps;                                    // sequence
  double theta = 0.0;                                                 // lcu
  std::vector<std::pair<std::complex<double>, PauliOperator>> expansion;  // lcu
};

/** Result of collapsing an anticommuting sum to one word. */
struct Reduction {
  PauliOperator word;  // the +1 target word
  int sign = +1;       // always +1 by construction
  double norm = 0.0;   // the collapsed coefficient
  RotationPlan plan;
};

/**
 * Validates that the words pairwise anticommute (NotAnticommutingError) and
 * divides out the coefficient 2-norm (AllZeroError when it vanishes).
 */
NormalizedACSum normalize(
    const std::vector<std::pair<PauliOperator, double>>& terms,
    double tolerance = kDefaultTolerance);

/** Convenience overload over a sum's terms in canonical order. */
NormalizedACSum normalize(const PauliSum& h);

/**
 * Chain of two-word rotations folding each non-target amplitude into the
 * target, one axis i * A_k * A_w per step. Needs at least two words
 * (SingleWordError).
 */
RotationPlan build_sequence_plan(const NormalizedACSum& acs,
                                 std::size_t target_index);

/**
 * Single collective rotation exp(-i * theta * X) with X a sum of at most
 * |A| - 1 words; the stored expansion has at most |A| terms. Needs at least
 * two words (SingleWordError).
 */
RotationPlan build_lcu_plan(const NormalizedACSum& acs,
                            std::size_t target_index);

/** R^dag * h * R for either plan kind, computed symbolically. */
PauliSum conjugate_by_plan(const RotationPlan& plan, const PauliSum& h);

/** normalize + plan + collapse; the reduced word always carries sign +1. */
Reduction reduce_to_pauli(
    const std::vector<std::pair<PauliOperator, double>>& terms,
    PlanKind kind = PlanKind::sequence);

}  // namespace noncon
