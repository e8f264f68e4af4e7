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

#include <cstdint>
#include <vector>

#include "noncon/pauli.hpp"

namespace noncon {

/**
 * One Clifford factor exp(-i * count * (pi/4) * axis). A count of +1
 * conjugates a word P that anticommutes with the axis A to i * A * P and
 * fixes commuting words; -1 gives -i * A * P.
 */
struct QuarterTurn {
  PauliOperator axis;
  int count = 1;
};

/** Where one input generator lands: sign * Z on `qubit`. */
struct GeneratorTarget {
  std::size_t qubit = 0;
  int sign = +1;
};

/**
 * A Clifford unitary given as an ordered product of quarter turns, together
 * with the single-qubit Z images of the generator list it was built from.
 * Conjugation applies rotation 0 first.
 */
struct CliffordMap {
  std::size_t n = 0;
  std::vector<QuarterTurn> rotations;
  std::vector<GeneratorTarget> targets;
};

/**
 * Builds the map sending each generator to sign * Z on a distinct qubit.
 * Generators must pairwise commute and be independent over GF(2).
 * Deterministic: each step targets the lowest-index unassigned qubit the
 * current image acts on nontrivially.
 */
CliffordMap tapering_map(const std::vector<PauliOperator>& generators,
                         std::size_t n);

/** Image of a single word under the map (exact, sign tracked). */
PauliOperator conjugate(const CliffordMap& map, const PauliOperator& p);

/** Image of a sum under the map, term by term. */
PauliSum conjugate(const CliffordMap& map, const PauliSum& h);

/** Image of a word under one quarter turn. */
PauliOperator conjugate_word(const QuarterTurn& turn, const PauliOperator& p);

/** Same map run backwards: reversed order, negated counts, no targets. */
CliffordMap inverse(const CliffordMap& map);

/** True when p commutes with every term of h. */
bool verify_z2(const PauliSum& h, const PauliOperator& p);

/**
 * Fixes qubit `targets[i]` to the Z eigenvalue `nu[i]` and deletes those
 * qubits. Every term of h must act as I or Z on each target qubit
 * (NonSymmetricInputError otherwise). Remaining qubits keep their relative
 * order. The result may have width 0 (a pure scalar, held as an identity
 * coefficient).
 */
PauliSum project_sector(const PauliSum& h, const std::vector<std::size_t>& targets,
                        const std::vector<int>& nu);

}  // namespace noncon
