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
#include <optional>
#include <string>
#include <vector>

#include "noncon/pauli.hpp"

namespace noncon {

/** Dense symmetric bit matrix used for adjacency at a few thousand vertices. */
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t size)
      : size_(size), words_((size + 63) / 64), bits_(size_ * words_, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
  }

  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  /** True when row i covers row j on the given column subset. */
  bool row_equal(std::size_t i, std::size_t j) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (bits_[i * words_ + w] != bits_[j * words_ + w]) return false;
    }
    return true;
  }

  const std::uint64_t* row(std::size_t i) const { return &bits_[i * words_]; }
  std::size_t row_words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/**
 * Commutation structure of a term set. Vertices are the distinct words of a
 * sum in canonical order; an edge joins two distinct words that commute.
 */
struct CompatibilityGraph {
  std::size_t n = 0;
  std::vector<PauliOperator> vertices;
  BitMatrix adjacency;
};

/** One input term expressed over the decomposition. */
struct TermFactor {
  PauliWord word;                      // the input word
  double coefficient = 0.0;            // its coefficient in the input sum
  std::uint64_t g_mask = 0;            // subset of G whose product is used
  std::optional<std::size_t> clique;   // index into cliques/a_reps, if any
  int sign = +1;                       // word == sign * prod(G subset) * C_i
  double h = 0.0;                      // coefficient * sign
};

/**
 * Symmetry-plus-cliques form of a noncontextual sum. `g_generators` is the
 * unique reduced echelon basis of the symmetry subgroup; `a_reps[i]` is the
 * least member of `cliques[i]`, and the representatives pairwise anticommute.
 * Invariant: a_reps.size() is never exactly 1.
 */
struct Decomposition {
  std::size_t n = 0;
  double tolerance = kDefaultTolerance;
  std::vector<PauliOperator> z_words;                 // universally commuting terms
  std::vector<std::vector<PauliOperator>> cliques;    // remaining terms, partitioned
  std::vector<PauliOperator> g_generators;            // G, echelon order
  std::vector<PauliOperator> a_reps;                  // A, one per clique
  std::vector<TermFactor> factorization;              // one entry per input term
};

/** Row of the support-size bound table. */
struct BoundsRow {
  std::size_t g_size = 0;
  std::size_t a_size = 0;
  std::uint64_t max_support = 0;
  char flag = 'N';  // 'Y' above 2^n, 'N' below, '=' equal
};

CompatibilityGraph build_graph(const PauliSum& h);

/** Words adjacent to every other vertex (the candidate symmetry terms). */
std::vector<PauliOperator> universally_commuting(const CompatibilityGraph& g);

/**
 * Clique-partition test: after removing universal vertices, every remaining
 * closed neighbourhood must be a clique and distinct neighbourhoods must be
 * disjoint.
 */
bool noncontextual_clique_test(const CompatibilityGraph& g);

/**
 * Anti-graph test: on the same reduced vertex set, non-adjacency of the
 * anticommutation graph must be transitive (the graph is a complete
 * multipartite one).
 */
bool noncontextual_multipartite_test(const CompatibilityGraph& g);

/** Runs both tests above; they agree on every graph. */
bool is_noncontextual(const PauliSum& h);

/**
 * Partition of the non-universal vertices into anticommuting cliques, each
 * sorted, ordered by least member. Throws ContextualSetError when no such
 * partition exists.
 */
std::vector<std::vector<PauliOperator>> clique_partition(
    const CompatibilityGraph& g);

/** Full decomposition of a noncontextual sum. */
Decomposition extract_generators(const PauliSum& h);

/** Re-expresses p over the decomposition. Throws NotGeneratedError outside the closure. */
TermFactor factorize_term(const PauliOperator& p, const Decomposition& d);

/** Sum rebuilt from the factorization; equals the input sum exactly. */
PauliSum reconstruct(const Decomposition& d);

/**
 * All distinct words prod(S) and prod(S)*C_i over subsets S of G. The count
 * is 2^|G| * (1 + |A|) exactly when the G and A vectors are independent.
 */
std::vector<PauliWord> enumerate_closure(const Decomposition& d,
                                         std::uint64_t cap = std::uint64_t{1}
                                                             << 22);

/** 2^|G| * (1 + |A|), the largest closure a (|G|, |A|) pair can support. */
std::uint64_t max_support_bound(std::size_t g_size, std::size_t a_size,
                                std::size_t n);

/** Bound table rows for |G| in {n, n-1, n-2, n-3}, |A| in {0, 2, 3, ...}. */
std::vector<BoundsRow> table_of_bounds(std::size_t n);

/** Largest pairwise-anticommuting family on m qubits: 2m + 1. */
std::size_t max_anticommuting_size(std::size_t m);

/**
 * DOT rendering: universal words list their vertex names with a "Z" tag, and
 * when the graph is noncontextual each clique becomes a subgraph cluster.
 */
std::string to_dot(const CompatibilityGraph& g);

}  // namespace noncon
