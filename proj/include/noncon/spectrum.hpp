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
#include <utility>
#include <vector>

#include "noncon/pauli.hpp"
#include "noncon/structure.hpp"

namespace noncon {

/**
 * The classical objective data of one symmetry sector. Bit i of `nu_mask`
 * set means nu_i = -1; sectors are enumerated by this mask as an unsigned
 * integer, so mask 0 is the all-plus sector.
 */
struct SectorValues {
  std::uint64_t nu_mask = 0;
  std::vector<int> nu;      // +1 / -1 per generator
  double s0 = 0.0;          // symmetry-only contribution
  std::vector<double> s;    // one entry per clique representative
  double s_norm = 0.0;      // 2-norm of s
  double e_minus = 0.0;     // s0 - s_norm
  double e_plus = 0.0;      // s0 + s_norm
};

struct GroundOptions {
  std::size_t brute_cap = 24;   // exhaustive search up to 2^24 sectors
  bool anneal = false;          // fall back to annealing above the cap
  std::uint64_t seed = 1;
  std::size_t sweeps = 1000;    // Metropolis sweeps per restart
  std::size_t restarts = 8;
};

struct GroundResult {
  std::uint64_t nu_mask = 0;
  double energy = 0.0;
  bool certified = false;  // true only for the exhaustive search
};

struct SpectrumEntry {
  double value = 0.0;
  std::uint64_t multiplicity = 0;
  std::uint64_t sector_count = 0;  // contributing (nu, sign) pairs
};

struct SpectrumOptions {
  std::size_t brute_cap = 24;
  double merge_tolerance = 1e-9;
};

struct SpectrumSummary {
  std::vector<SpectrumEntry> entries;
  std::size_t g_size = 0;
  std::size_t a_size = 0;
  std::uint64_t block_dim = 0;       // 2^(n - |G|)
  std::uint64_t total_dim = 0;       // 2^n
  std::uint64_t divisor = 1;         // every multiplicity is divisible by it
};

/** Evaluates (s0, s) for one sector from the stored factorization. */
SectorValues sector_values(const Decomposition& d, std::uint64_t nu_mask);

/** (s0 - ||s||, s0 + ||s||) for one sector. */
std::pair<double, double> sector_energies(const Decomposition& d,
                                          std::uint64_t nu_mask);

/**
 * Minimum of e_minus over all sectors. Exhaustive and certified when
 * |G| <= brute_cap; annealed and uncertified when `anneal` is set;
 * CapExceededError otherwise. Ties break toward the smallest mask.
 */
GroundResult ground_search(const Decomposition& d,
                           const GroundOptions& opts = {});

/**
 * Every eigenvalue with exact multiplicity. Sector eigenvalues closer than
 * the merge tolerance collapse into one entry; multiplicities always add up
 * to 2^n. Requires |G| <= brute_cap.
 */
SpectrumSummary full_spectrum(const Decomposition& d,
                              const SpectrumOptions& opts = {});

/**
 * The sector projector prod_i (1 + nu_i g_i) / 2 expanded into 2^|G| words.
 * Generators must pairwise commute and be independent; CapExceededError
 * above the cap.
 */
PauliSum projector(const std::vector<int>& nu,
                   const std::vector<PauliOperator>& g, std::size_t n,
                   std::size_t cap = 16);

}  // namespace noncon
