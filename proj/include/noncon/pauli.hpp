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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noncon/errors.hpp"

namespace noncon {

/// Hard width limit: one 64-bit mask per symplectic half.
inline constexpr std::size_t kMaxQubits = 64;

/// Coefficients with magnitude at or below this are dropped from sums.
inline constexpr double kDefaultTolerance = 1e-12;

/**
 * A phase-free Pauli word in symplectic form. Bit q of `x` (`z`) is set when
 * the word acts with an X (Z) factor on qubit q. Qubit 0 is the leftmost
 * character of the string form, so "XIZ" has x = 0b001, z = 0b100.
 */
struct PauliWord {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

/**
 * Canonical term order: per qubit I < Z < X < Y, compared from qubit 0
 * upward. This makes "IZ" < "ZI" < "XX" < "YI", i.e. plain lexicographic
 * order of the string form under the alphabet I, Z, X, Y.
 */
struct PauliWordLess {
  bool operator()(const PauliWord& a, const PauliWord& b) const noexcept;
};

/**
 * A Pauli operator on n <= 64 qubits: i^phase_exp times the Hermitian word
 * W(x, z) = i^{|x & z|} X^x Z^z. With this convention every single letter
 * (including Y) is Hermitian with no stray phase, and the operator is
 * Hermitian exactly when phase_exp is 0 or 2.
 */
class PauliOperator {
 public:
  PauliOperator() = default;
  PauliOperator(std::size_t n, std::uint64_t x, std::uint64_t z, int phase_exp);

  static PauliOperator identity(std::size_t n);
  /** Hermitian word with the given sign (+1 or -1). */
  static PauliOperator make(std::size_t n, PauliWord w, int sign = +1);
  /** Single-letter word: axis is one of 'X', 'Y', 'Z'. */
  static PauliOperator single(std::size_t n, std::size_t qubit, char axis);
  /** Parses "XIZY", optionally prefixed by '+', '-', "i", "+i" or "-i". */
  static PauliOperator parse(std::string_view text);

  std::size_t num_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  PauliWord word() const { return {x_, z_}; }
  /** Exponent k in i^k relative to the Hermitian word, always in [0, 4). */
  int phase_exp() const { return phase_; }

  bool is_hermitian() const { return phase_ == 0 || phase_ == 2; }
  /** True for +1 exactly (identity word, phase 0). */
  bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
  bool is_identity_word() const { return x_ == 0 && z_ == 0; }
  /** +1 or -1; requires a Hermitian operator. */
  int sign() const;
  /** Letter at qubit q: 'I', 'X', 'Y' or 'Z'. */
  char letter(std::size_t q) const;
  /** Number of qubits acted on nontrivially. */
  std::size_t weight() const;

  PauliOperator negated() const;
  PauliOperator times_i() const;
  PauliOperator adjoint() const;
  /** Same word, phase reset to 0 (the +1 Hermitian representative). */
  PauliOperator bare_word() const;

  /** Letters only, no sign prefix. */
  std::string word_str() const;
  /** Sign/phase prefix ("", "-", "i", "-i") followed by the letters. */
  std::string str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/** Exact product of two operators on the same width, phases tracked mod 4. */
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

/** True when the words commute; phases are irrelevant. */
bool commutes(const PauliOperator& p, const PauliOperator& q);

/**
 * Jordan product (pq + qp)/2: the full product when the words commute,
 * nothing when they anticommute.
 */
std::optional<PauliOperator> jordan_product(const PauliOperator& p,
                                            const PauliOperator& q);

/**
 * A real linear combination of Hermitian Pauli words with a fixed width and
 * a drop tolerance. Terms are kept in canonical order, so iteration order,
 * text output and equality are all deterministic.
 */
class PauliSum {
 public:
  using TermMap = std::map<PauliWord, double, PauliWordLess>;

  explicit PauliSum(std::size_t n, double tolerance = kDefaultTolerance);

  std::size_t num_qubits() const { return n_; }
  double tolerance() const { return tol_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /** Adds coeff times the +1 Hermitian word. */
  void add(PauliWord w, double coeff);
  /** Adds coeff times op; op must be Hermitian, its sign folds into coeff. */
  void add(const PauliOperator& op, double coeff);

  /** Coefficient of the +1 Hermitian word, 0.0 when absent. */
  double coefficient(PauliWord w) const;
  const TermMap& terms() const { return terms_; }

  /** Terms as (+1 Hermitian operator, coefficient) pairs in canonical order. */
  std::vector<std::pair<PauliOperator, double>> term_operators() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(double scale);

  double max_abs_coefficient() const;

  /**
   * Canonical text form: one "<coeff> <word>" line per term in term order,
   * coefficients printed with enough digits to round-trip exactly.
   */
  std::string to_text() const;

  /**
   * Parses the text form: '#' starts a comment, blank lines are skipped,
   * repeated words accumulate. Width is taken from the first word unless
   * `expect_n` pins it. Throws ParseError on malformed input.
   */
  static PauliSum parse_text(std::string_view text,
                             std::optional<std::size_t> expect_n = {},
                             double tolerance = kDefaultTolerance);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  std::size_t n_ = 0;
  double tol_ = kDefaultTolerance;
  TermMap terms_;
};

/** Formats a double so that it parses back to the identical value. */
std::string format_coefficient(double value);

/** Locale-independent strtod via std::from_chars; throws ParseError. */
double parse_coefficient(std::string_view text);

}  // namespace noncon
