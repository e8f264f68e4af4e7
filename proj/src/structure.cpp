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

#include "noncon/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "noncon/gf2.hpp"

namespace noncon {

namespace {

// Indices of vertices adjacent to all others.
std::vector<std::size_t> universal_indices(const CompatibilityGraph& g) {
  std::vector<std::size_t> out;
  std::size_t m = g.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    bool universal = true;
    for (std::size_t j = 0; j < m && universal; ++j) {
      if (j != i && !g.adjacency.get(i, j)) universal = false;
    }
    if (universal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> non_universal_indices(const CompatibilityGraph& g) {
  auto uni = universal_indices(g);
  std::vector<bool> is_uni(g.vertices.size(), false);
  for (auto i : uni) is_uni[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!is_uni[i]) rest.push_back(i);
  }
  return rest;
}

// Closed commuting neighbourhoods restricted to `rest`, as bit rows.
std::vector<std::vector<std::uint64_t>> closed_neighbourhoods(
    const CompatibilityGraph& g, const std::vector<std::size_t>& rest) {
  std::size_t m = rest.size();
  std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> nb(m,
                                             std::vector<std::uint64_t>(words));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || g.adjacency.get(rest[a], rest[b])) {
        nb[a][b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }
  return nb;
}

}  // namespace

CompatibilityGraph build_graph(const PauliSum& h) {
  CompatibilityGraph g;
  g.n = h.num_qubits();
  for (const auto& [w, c] : h.terms()) {
    g.vertices.push_back(PauliOperator::make(g.n, w));
  }
  std::size_t m = g.vertices.size();
  g.adjacency = BitMatrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (commutes(g.vertices[i], g.vertices[j])) {
        g.adjacency.set(i, j);
        g.adjacency.set(j, i);
      }
    }
  }
  return g;
}

std::vector<PauliOperator> universally_commuting(const CompatibilityGraph& g) {
  std::vector<PauliOperator> out;
  for (auto i : universal_indices(g)) out.push_back(g.vertices[i]);
  return out;
}

bool noncontextual_clique_test(const CompatibilityGraph& g) {
  auto rest = non_universal_indices(g);
  auto nb = closed_neighbourhoods(g, rest);
  // Adjacent vertices must have identical closed neighbourhoods; the
  // neighbourhood classes are then automatically disjoint cliques.
  for (std::size_t a = 0; a < rest.size(); ++a) {
    for (std::size_t b = a + 1; b < rest.size(); ++b) {
      if (!g.adjacency.get(rest[a], rest[b])) continue;
      if (nb[a] != nb[b]) return false;
    }
  }
  return true;
}

bool noncontextual_multipartite_test(const CompatibilityGraph& g) {
  auto rest = non_universal_indices(g);
  std::size_t m = rest.size();
  // Non-adjacency in the anticommutation graph is exactly adjacency here.
  // Require: commutes(a,b) and commutes(b,c) imply commutes(a,c).
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      if (a == b || !g.adjacency.get(rest[a], rest[b])) continue;
      for (std::size_t c = a + 1; c < m; ++c) {
        if (c == b || !g.adjacency.get(rest[b], rest[c])) continue;
        if (!g.adjacency.get(rest[a], rest[c])) return false;
      }
    }
  }
  return true;
}

bool is_noncontextual(const PauliSum& h) {
  CompatibilityGraph g = build_graph(h);
  bool by_cliques = noncontextual_clique_test(g);
  bool by_parts = noncontextual_multipartite_test(g);
  if (by_cliques != by_parts) {
    throw std::logic_error("noncontextuality tests disagree");
  }
  return by_cliques;
}

std::vector<std::vector<PauliOperator>> clique_partition(
    const CompatibilityGraph& g) {
  if (!noncontextual_clique_test(g)) {
    throw ContextualSetError(
        "commutation is not transitive outside the universal set");
  }
  auto rest = non_universal_indices(g);
  auto nb = closed_neighbourhoods(g, rest);

  std::vector<std::vector<PauliOperator>> cliques;
  std::vector<bool> used(rest.size(), false);
  for (std::size_t a = 0; a < rest.size(); ++a) {
    if (used[a]) continue;
    std::vector<PauliOperator> clique;
    for (std::size_t b = a; b < rest.size(); ++b) {
      if (!used[b] && nb[b] == nb[a]) {
        clique.push_back(g.vertices[rest[b]]);
        used[b] = true;
      }
    }
    PauliWordLess less;
    std::sort(clique.begin(), clique.end(),
              [&](const PauliOperator& p, const PauliOperator& q) {
                return less(p.word(), q.word());
              });
    cliques.push_back(std::move(clique));
  }
  PauliWordLess less;
  std::sort(cliques.begin(), cliques.end(),
            [&](const auto& p, const auto& q) {
              return less(p.front().word(), q.front().word());
            });
  return cliques;
}

Decomposition extract_generators(const PauliSum& h) {
  CompatibilityGraph graph = build_graph(h);
  if (!noncontextual_clique_test(graph)) {
    throw ContextualSetError(
        "commutation is not transitive outside the universal set");
  }

  Decomposition d;
  d.n = h.num_qubits();
  d.tolerance = h.tolerance();
  d.z_words = universally_commuting(graph);
  d.cliques = clique_partition(graph);
  for (const auto& clique : d.cliques) d.a_reps.push_back(clique.front());
  if (d.a_reps.size() == 1) {
    // A single clique commutes with everything, contradicting universality
    // of the removed set; the partition logic never lands here.
    throw std::logic_error("single-clique partition");
  }

  // The symmetry subgroup is generated by the universal words together with
  // every within-clique product Q * C_i.
  gf2::Basis basis(d.n);
  for (const auto& zw : d.z_words) basis.insert(zw.word());
  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    for (const auto& q : d.cliques[i]) {
      basis.insert(multiply(q, d.a_reps[i]).word());
    }
  }
  for (const auto& row : basis.rows()) {
    d.g_generators.push_back(PauliOperator::make(d.n, row));
  }

  for (const auto& [w, c] : h.terms()) {
    TermFactor f = factorize_term(PauliOperator::make(d.n, w), d);
    f.coefficient = c;
    f.h = c * f.sign;
    d.factorization.push_back(f);
  }
  return d;
}

TermFactor factorize_term(const PauliOperator& p, const Decomposition& d) {
  if (p.num_qubits() != d.n) {
    throw DimensionError("term width differs from decomposition width");
  }
  gf2::Basis basis(d.n);
  for (const auto& g : d.g_generators) {
    if (!basis.insert(g.word())) {
      throw DependentSetError("generator list is dependent");
    }
  }

  TermFactor f;
  f.word = p.word();

  auto resolve = [&](PauliWord target,
                     std::optional<std::size_t> clique) -> bool {
    auto mask = basis.decompose(target);
    if (!mask) return false;
    f.g_mask = *mask;
    f.clique = clique;
    // Recover the sign by multiplying the factors back together.
    PauliOperator prod = PauliOperator::identity(d.n);
    for (std::size_t i = 0; i < d.g_generators.size(); ++i) {
      if ((*mask >> i) & 1) prod = multiply(prod, d.g_generators[i]);
    }
    if (clique) prod = multiply(prod, d.a_reps[*clique]);
    f.sign = prod.phase_exp() == p.phase_exp() ? +1 : -1;
    return true;
  };

  if (resolve(p.word(), std::nullopt)) return f;
  for (std::size_t i = 0; i < d.a_reps.size(); ++i) {
    PauliWord shifted = multiply(p, d.a_reps[i]).word();
    if (resolve(shifted, i)) return f;
  }
  throw NotGeneratedError("word " + p.word_str() +
                          " lies outside the generated closure");
}

PauliSum reconstruct(const Decomposition& d) {
  PauliSum sum(d.n, d.tolerance);
  for (const auto& f : d.factorization) {
    PauliOperator prod = PauliOperator::identity(d.n);
    for (std::size_t i = 0; i < d.g_generators.size(); ++i) {
      if ((f.g_mask >> i) & 1) prod = multiply(prod, d.g_generators[i]);
    }
    if (f.clique) prod = multiply(prod, d.a_reps[*f.clique]);
    sum.add(prod, f.h);
  }
  return sum;
}

std::vector<PauliWord> enumerate_closure(const Decomposition& d,
                                         std::uint64_t cap) {
  std::size_t k = d.g_generators.size();
  if (k >= 63) throw CapExceededError("closure too large to enumerate");
  std::uint64_t count = (std::uint64_t{1} << k) * (1 + d.a_reps.size());
  if (count > cap) {
    throw CapExceededError("closure of " + std::to_string(count) +
                           " words exceeds the cap of " + std::to_string(cap));
  }
  std::set<PauliWord, PauliWordLess> words;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    PauliOperator prod = PauliOperator::identity(d.n);
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) prod = multiply(prod, d.g_generators[i]);
    }
    words.insert(prod.word());
    for (const auto& rep : d.a_reps) {
      words.insert(multiply(prod, rep).word());
    }
  }
  return {words.begin(), words.end()};
}

std::uint64_t max_support_bound(std::size_t g_size, std::size_t a_size,
                                std::size_t n) {
  if (g_size > n) {
    throw DimensionError("|G| cannot exceed the qubit count");
  }
  if (a_size > 2 * (n - g_size) + 1) {
    throw DimensionError("|A| exceeds the anticommuting family bound");
  }
  return (std::uint64_t{1} << g_size) * (1 + a_size);
}

std::vector<BoundsRow> table_of_bounds(std::size_t n) {
  std::vector<BoundsRow> rows;
  std::uint64_t full = std::uint64_t{1} << n;
  for (std::size_t drop = 0; drop <= 3 && drop <= n; ++drop) {
    std::size_t g = n - drop;
    std::size_t a_max = 2 * drop + 1;
    for (std::size_t a = 0; a <= a_max; ++a) {
      if (a == 1) continue;
      BoundsRow row;
      row.g_size = g;
      row.a_size = a;
      row.max_support = max_support_bound(g, a, n);
      row.flag = row.max_support > full ? 'Y'
                 : row.max_support == full ? '='
                                           : 'N';
      rows.push_back(row);
    }
  }
  return rows;
}

std::size_t max_anticommuting_size(std::size_t m) { return 2 * m + 1; }

std::string to_dot(const CompatibilityGraph& g) {
  std::ostringstream out;
  out << "graph compatibility {\n";
  out << "  node [shape=box];\n";

  auto uni = universal_indices(g);
  std::vector<bool> is_uni(g.vertices.size(), false);
  for (auto i : uni) is_uni[i] = true;

  auto name = [&](std::size_t i) { return "\"" + g.vertices[i].word_str() + "\""; };

  for (auto i : uni) {
    out << "  " << name(i) << " [xlabel=\"Z\", style=filled, fillcolor=lightgray];\n";
  }

  if (noncontextual_clique_test(g)) {
    auto cliques = clique_partition(g);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      index[g.vertices[i].word_str()] = i;
    }
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      out << "  subgraph cluster_" << c << " {\n";
      out << "    label=\"clique " << (c + 1) << "\";\n";
      for (const auto& v : cliques[c]) {
        out << "    " << name(index.at(v.word_str())) << ";\n";
      }
      out << "  }\n";
    }
  } else {
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (!is_uni[i]) out << "  " << name(i) << ";\n";
    }
  }

  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.adjacency.get(i, j)) {
        out << "  " << name(i) << " -- " << name(j) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace noncon
