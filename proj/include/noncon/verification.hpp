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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "noncon/clifford.hpp"
#include "noncon/eigenstate.hpp"
#include "noncon/pauli.hpp"
#include "noncon/unitary_partitioning.hpp"

namespace noncon {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

/**
 * Row-major complex matrix on 2^n basis states. Qubit 0 is the most
 * significant bit of the basis index, matching the string convention where
 * qubit 0 is the leftmost letter.
 */
struct DenseOperator {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<Amplitude> a;

  DenseOperator() = default;
  explicit DenseOperator(std::size_t n_qubits)
      : n(n_qubits), dim(std::size_t{1} << n_qubits), a(dim * dim, 0.0) {}

  Amplitude& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  const Amplitude& at(std::size_t i, std::size_t j) const {
    return a[i * dim + j];
  }
};

inline constexpr std::size_t kDenseQubitCap = 12;

/** Matrix of one word, built letter by letter via Kronecker products. */
DenseOperator dense(const PauliOperator& p, std::size_t cap = kDenseQubitCap);

/** Matrix of a sum of words. */
DenseOperator dense(const PauliSum& h, std::size_t cap = kDenseQubitCap);

/** w|v> using mask arithmetic only; no matrix is formed. */
StateVector act(const PauliOperator& p, const StateVector& v);

/** h|v>, term by term. */
StateVector act(const PauliSum& h, const StateVector& v);

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b);
DenseOperator dagger(const DenseOperator& a);
DenseOperator identity_matrix(std::size_t n);

/** Largest |entry| of a - b; both operands must share dimensions. */
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/**
 * Symbolic product of two sums. The imaginary parts must cancel (true for
 * products of commuting Hermitian sums and for symmetrized squares);
 * a residue above 1e-9 throws ConvergenceError.
 */
PauliSum symbolic_product(const PauliSum& a, const PauliSum& b,
                          std::uint64_t term_cap = std::uint64_t{1} << 20);

/** Largest coefficient magnitude of the commutator a*b - b*a. */
double commutator_max(const PauliSum& a, const PauliSum& b,
                      std::uint64_t term_cap = std::uint64_t{1} << 20);

/**
 * Tr(H^k) / 2^n for k = 1..k_max, each taken as the identity-word
 * coefficient of the k-fold symbolic product. The intermediate term count
 * is capped (CapExceededError).
 */
std::vector<double> trace_moments(const PauliSum& h, std::size_t k_max,
                                  std::uint64_t term_cap = std::uint64_t{1}
                                                           << 20);

/**
 * All eigenvalues of a Hermitian matrix, ascending, by cyclic complex
 * Jacobi sweeps. Stops when the off-diagonal Frobenius norm drops below
 * 1e-12 (absolute, with a relative floor for large norms).
 */
std::vector<double> dense_eigenvalues(DenseOperator a,
                                      std::size_t dim_cap = 4096);

/**
 * Literal transitivity check over the non-universal words: a triple
 * (a, b, c) with [a,b] = [b,c] = 0 but [a,c] != 0, if one exists.
 */
std::optional<std::array<PauliOperator, 3>> transitivity_witness(
    const std::vector<PauliOperator>& words);

/** True when no witness triple exists. */
bool brute_noncontextuality(const std::vector<PauliOperator>& words);

/**
 * The unitary R a rotation plan stands for, so that conjugate_by_plan(h)
 * equals R^dag * dense(h) * R.
 */
DenseOperator plan_unitary(const RotationPlan& plan,
                           std::size_t cap = kDenseQubitCap);

/**
 * The unitary C a Clifford map stands for, so that conjugate(map, h) equals
 * C^dag * dense(h) * C.
 */
DenseOperator map_unitary(const CliffordMap& map,
                          std::size_t cap = kDenseQubitCap);

/**
 * The unique (up to phase) unit vector stabilized by a full tableau. A
 * basis state with guaranteed overlap is found by GF(2) elimination over
 * the diagonalized generators, then projected through (1 + g) / 2 factors.
 */
StateVector dense_state(const StabilizerTableau& tab,
                        std::size_t cap = kDenseQubitCap);

/** Branch expansion applied to the anchor vector. */
StateVector dense_state(const StabilizerSum& state,
                        std::size_t cap = kDenseQubitCap);

double norm(const StateVector& v);
StateVector subtract(const StateVector& a, const StateVector& b);
StateVector scale(const StateVector& v, Amplitude s);

}  // namespace noncon
