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

#include "noncon/clifford.hpp"

#include <algorithm>
#include <set>

#include "noncon/gf2.hpp"

namespace noncon {

PauliOperator conjugate_word(const QuarterTurn& turn, const PauliOperator& p) {
  if (commutes(turn.axis, p)) return p;
  int c = ((turn.count % 4) + 4) % 4;
  switch (c) {
    case 0:
      return p;
    case 1:
      return multiply(turn.axis, p).times_i();
    case 2:
      return p.negated();
    default:
      return multiply(turn.axis, p).times_i().negated();
  }
}

PauliOperator conjugate(const CliffordMap& map, const PauliOperator& p) {
  PauliOperator out = p;
  for (const auto& turn : map.rotations) out = conjugate_word(turn, out);
  return out;
}

PauliSum conjugate(const CliffordMap& map, const PauliSum& h) {
  PauliSum out(h.num_qubits(), h.tolerance());
  for (const auto& [w, c] : h.terms()) {
    PauliOperator img = conjugate(map, PauliOperator::make(h.num_qubits(), w));
    out.add(img, c);
  }
  return out;
}

CliffordMap inverse(const CliffordMap& map) {
  CliffordMap inv;
  inv.n = map.n;
  for (auto it = map.rotations.rbegin(); it != map.rotations.rend(); ++it) {
    inv.rotations.push_back({it->axis, -it->count});
  }
  return inv;
}

bool verify_z2(const PauliSum& h, const PauliOperator& p) {
  if (p.num_qubits() != h.num_qubits()) {
    throw DimensionError("symmetry width differs from sum width");
  }
  for (const auto& [w, c] : h.terms()) {
    if (!commutes(PauliOperator::make(h.num_qubits(), w), p)) return false;
  }
  return true;
}

CliffordMap tapering_map(const std::vector<PauliOperator>& generators,
                         std::size_t n) {
  CliffordMap map;
  map.n = n;

  gf2::Basis basis(n);
  for (const auto& g : generators) {
    if (g.num_qubits() != n) {
      throw DimensionError("generator width differs from map width");
    }
    if (!g.is_hermitian()) {
      throw NonSymmetricInputError("generators must be Hermitian words");
    }
    if (g.is_identity_word()) {
      throw DependentSetError("identity cannot be a generator");
    }
    if (!basis.insert(g.word())) {
      throw DependentSetError("generators are dependent over GF(2)");
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j])) {
        throw NotCommutingError("generators " + generators[i].word_str() +
                                " and " + generators[j].word_str() +
                                " anticommute");
      }
    }
  }

  std::vector<PauliOperator> images = generators;
  std::vector<bool> assigned(n, false);

  auto apply_turn = [&](const QuarterTurn& turn, std::size_t from) {
    map.rotations.push_back(turn);
    for (std::size_t j = from; j < images.size(); ++j) {
      images[j] = conjugate_word(turn, images[j]);
    }
  };

  for (std::size_t i = 0; i < generators.size(); ++i) {
    const PauliOperator& g = images[i];
    std::size_t q = n;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (!assigned[cand] && g.letter(cand) != 'I') {
        q = cand;
        break;
      }
    }
    if (q == n) {
      throw DependentSetError("no free qubit left for generator " +
                              std::to_string(i));
    }

    if (!(g.weight() == 1 && g.letter(q) == 'Z')) {
      if (g.letter(q) == 'Z') {
        // Z-only at q: hop through X on q first, then rotate X to Z.
        PauliOperator xq = PauliOperator::single(n, q, 'X');
        apply_turn({multiply(xq, g).times_i().negated(), +1}, i);
        apply_turn({PauliOperator::single(n, q, 'Y'), +1}, i);
      } else {
        // X or Y at q: a single turn lands the image on +Z there.
        PauliOperator zq = PauliOperator::single(n, q, 'Z');
        apply_turn({multiply(zq, images[i]).times_i().negated(), +1}, i);
      }
    }

    const PauliOperator& img = images[i];
    if (!(img.weight() == 1 && img.letter(q) == 'Z')) {
      throw std::logic_error("tapering failed to reach a single-qubit Z");
    }
    map.targets.push_back({q, img.sign()});
    assigned[q] = true;
  }
  return map;
}

PauliSum project_sector(const PauliSum& h, const std::vector<std::size_t>& targets,
                        const std::vector<int>& nu) {
  std::size_t n = h.num_qubits();
  if (targets.size() != nu.size()) {
    throw DimensionError("one eigenvalue per target qubit required");
  }
  std::set<std::size_t> seen;
  for (std::size_t q : targets) {
    if (q >= n) throw DimensionError("target qubit out of range");
    if (!seen.insert(q).second) throw DimensionError("duplicate target qubit");
  }
  for (int v : nu) {
    if (v != 1 && v != -1) throw DimensionError("eigenvalues must be +1 or -1");
  }

  std::uint64_t target_mask = 0;
  for (std::size_t q : targets) target_mask |= std::uint64_t{1} << q;

  // New index of each surviving qubit, in original order.
  std::vector<std::size_t> new_index(n, 0);
  std::size_t next = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (!(target_mask >> q & 1)) new_index[q] = next++;
  }
  std::size_t n_out = next;

  PauliSum out(n_out, h.tolerance());
  for (const auto& [w, c] : h.terms()) {
    if (w.x & target_mask) {
      throw NonSymmetricInputError(
          "term " + PauliOperator::make(n, w).word_str() +
          " does not act as a symmetry on the target qubits");
    }
    double coeff = c;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (w.z >> targets[t] & 1) coeff *= nu[t];
    }
    PauliWord reduced;
    for (std::size_t q = 0; q < n; ++q) {
      if (target_mask >> q & 1) continue;
      if (w.x >> q & 1) reduced.x |= std::uint64_t{1} << new_index[q];
      if (w.z >> q & 1) reduced.z |= std::uint64_t{1} << new_index[q];
    }
    out.add(reduced, coeff);
  }
  return out;
}

}  // namespace noncon
