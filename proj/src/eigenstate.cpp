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

#include "noncon/eigenstate.hpp"

#include <cmath>

#include "noncon/clifford.hpp"
#include "noncon/spectrum.hpp"

namespace noncon {

StabilizerTableau anchor_state(const std::vector<PauliOperator>& g,
                               const std::vector<int>& nu,
                               const std::optional<PauliOperator>& p_a,
                               int sign, std::size_t n,
                               Completion completion) {
  if (nu.size() != g.size()) {
    throw DimensionError("one eigenvalue per stabilizer required");
  }
  for (int v : nu) {
    if (v != 1 && v != -1) throw DimensionError("eigenvalues must be +1 or -1");
  }
  if (sign != 1 && sign != -1) {
    throw DimensionError("sign must be +1 or -1");
  }

  std::vector<PauliOperator> bare;
  std::vector<PauliOperator> signed_gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bare.push_back(g[i].bare_word());
    signed_gens.push_back(nu[i] * g[i].sign() == 1 ? g[i].bare_word()
                                                   : g[i].bare_word().negated());
  }
  if (p_a) {
    for (const auto& gi : g) {
      if (!commutes(*p_a, gi)) {
        throw NotCommutingError("anchor word anticommutes with a stabilizer");
      }
    }
    bare.push_back(p_a->bare_word());
    signed_gens.push_back(sign * p_a->sign() == 1
                              ? p_a->bare_word()
                              : p_a->bare_word().negated());
  }

  // Tapering the bare words validates commutation and independence and tells
  // us which qubits the inputs fail to pin down: pad there and pull back.
  CliffordMap map = tapering_map(bare, n);
  CliffordMap undo = inverse(map);
  std::vector<bool> assigned(n, false);
  for (const auto& t : map.targets) assigned[t.qubit] = true;

  StabilizerTableau tab;
  tab.n = n;
  tab.generators = signed_gens;
  char pad = completion == Completion::z ? 'Z' : 'X';
  for (std::size_t q = 0; q < n; ++q) {
    if (assigned[q]) continue;
    tab.generators.push_back(
        conjugate(undo, PauliOperator::single(n, q, pad)));
  }
  return tab;
}

StabilizerSum build_eigenstate(const Decomposition& d, std::uint64_t nu_mask,
                               int sign, Completion completion) {
  if (sign != 1 && sign != -1) {
    throw DimensionError("sign must be +1 or -1");
  }
  SectorValues sv = sector_values(d, nu_mask);

  StabilizerSum state;
  state.nu_mask = nu_mask;
  state.sign = sign;

  if (d.a_reps.empty() || sv.s_norm <= d.tolerance) {
    // Either no anticommuting part at all or a sector where it cancels;
    // every state of the sector is then an eigenvector and the two signed
    // eigenvalues collapse onto s0.
    state.degenerate = !d.a_reps.empty();
    state.energy = sv.s0;
    state.anchor =
        anchor_state(d.g_generators, sv.nu, std::nullopt, +1, d.n, completion);
    state.branches.push_back({1.0, PauliOperator::identity(d.n)});
    state.chi_bound = 1;
    return state;
  }

  NormalizedACSum acs;
  acs.n = d.n;
  acs.words = d.a_reps;
  acs.norm = sv.s_norm;
  for (double si : sv.s) acs.betas.push_back(si / sv.s_norm);

  RotationPlan plan = build_lcu_plan(acs, 0);
  state.anchor = anchor_state(d.g_generators, sv.nu, d.a_reps[0], sign, d.n,
                              completion);
  for (const auto& [amp, word] : plan.expansion) {
    state.branches.push_back({amp, word});
  }
  state.chi_bound = state.branches.size();
  state.energy = sign == 1 ? sv.e_plus : sv.e_minus;
  return state;
}

std::size_t rank_bound(const StabilizerSum& state) {
  std::size_t count = 0;
  for (const auto& b : state.branches) {
    if (std::abs(b.amplitude) > kDefaultTolerance) ++count;
  }
  return count;
}

}  // namespace noncon
