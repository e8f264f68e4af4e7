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

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "noncon/pauli.hpp"

namespace noncon::gf2 {

/**
 * Row-reduced basis of Pauli words viewed as vectors in GF(2)^{2n}.
 * Column order: x bit of qubit 0, ..., x bit of qubit n-1, then the z bits.
 * Rows are kept in reduced row-echelon form with pivots strictly increasing,
 * so the row set is the unique RREF basis of the span and therefore
 * independent of insertion order once the same span has been inserted.
 */
class Basis {
 public:
  explicit Basis(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<PauliWord>& rows() const { return rows_; }

  /** Inserts w's vector; returns true when the rank grew. */
  bool insert(PauliWord w) {
    reduce_in_place(w);
    if (w.x == 0 && w.z == 0) return false;
    int pivot = pivot_column(w);
    // Back-substitute so the new pivot column is zero everywhere else.
    for (auto& row : rows_) {
      if (column_bit(row, pivot)) xor_into(row, w);
    }
    auto it = rows_.begin();
    while (it != rows_.end() && pivot_column(*it) < pivot) ++it;
    rows_.insert(it, w);
    return true;
  }

  bool contains(PauliWord w) const {
    reduce_in_place(w);
    return w.x == 0 && w.z == 0;
  }

  /**
   * Expresses w over the current rows: bit i of the result is set when row i
   * participates. Empty when w is outside the span.
   */
  std::optional<std::uint64_t> decompose(PauliWord w) const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (column_bit(w, pivot_column(rows_[i]))) {
        xor_into(w, rows_[i]);
        mask |= std::uint64_t{1} << i;
      }
    }
    if (w.x != 0 || w.z != 0) return std::nullopt;
    return mask;
  }

 private:
  static void xor_into(PauliWord& a, const PauliWord& b) {
    a.x ^= b.x;
    a.z ^= b.z;
  }

  int pivot_column(const PauliWord& w) const {
    if (w.x != 0) return std::countr_zero(w.x);
    return static_cast<int>(n_) + std::countr_zero(w.z);
  }

  bool column_bit(const PauliWord& w, int col) const {
    if (col < static_cast<int>(n_)) return (w.x >> col) & 1;
    return (w.z >> (col - static_cast<int>(n_))) & 1;
  }

  void reduce_in_place(PauliWord& w) const {
    for (const auto& row : rows_) {
      if (column_bit(w, pivot_column(row))) xor_into(w, row);
    }
  }

  std::size_t n_;
  std::vector<PauliWord> rows_;
};

}  // namespace noncon::gf2
