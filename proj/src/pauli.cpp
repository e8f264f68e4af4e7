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

#include "noncon/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace noncon {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_width(std::size_t n) {
  if (n > kMaxQubits) {
    throw ParseError("operator width " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxQubits) + " qubits");
  }
}

std::uint64_t width_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

bool PauliWordLess::operator()(const PauliWord& a,
                               const PauliWord& b) const noexcept {
  // First qubit where the letters differ decides; letter codes are
  // 2*x + z so that I=0 < Z=1 < X=2 < Y=3.
  std::uint64_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  int q = std::countr_zero(diff);
  unsigned ca = (((a.x >> q) & 1) << 1) | ((a.z >> q) & 1);
  unsigned cb = (((b.x >> q) & 1) << 1) | ((b.z >> q) & 1);
  return ca < cb;
}

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x, std::uint64_t z,
                             int phase_exp)
    : n_(n), x_(x), z_(z), phase_(((phase_exp % 4) + 4) % 4) {
  check_width(n);
  std::uint64_t m = width_mask(n);
  if ((x & ~m) || (z & ~m)) {
    throw ParseError("mask bits outside operator width");
  }
}

PauliOperator PauliOperator::identity(std::size_t n) {
  return PauliOperator(n, 0, 0, 0);
}

PauliOperator PauliOperator::make(std::size_t n, PauliWord w, int sign) {
  if (sign != 1 && sign != -1) throw ParseError("sign must be +1 or -1");
  return PauliOperator(n, w.x, w.z, sign == 1 ? 0 : 2);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit,
                                    char axis) {
  if (qubit >= n) throw ParseError("qubit index out of range");
  std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (axis) {
    case 'X':
      return PauliOperator(n, bit, 0, 0);
    case 'Y':
      return PauliOperator(n, bit, bit, 0);
    case 'Z':
      return PauliOperator(n, 0, bit, 0);
    default:
      throw ParseError(std::string("bad axis letter '") + axis + "'");
  }
}

PauliOperator PauliOperator::parse(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = (phase + 1) % 4;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("empty Pauli string");
  check_width(text.size());
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw ParseError(std::string("bad Pauli letter '") + text[q] + "'");
    }
  }
  return PauliOperator(text.size(), x, z, phase);
}

int PauliOperator::sign() const {
  if (!is_hermitian()) {
    throw ParseError("sign() called on a non-Hermitian operator");
  }
  return phase_ == 0 ? +1 : -1;
}

char PauliOperator::letter(std::size_t q) const {
  bool xb = (x_ >> q) & 1;
  bool zb = (z_ >> q) & 1;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::size_t PauliOperator::weight() const {
  return static_cast<std::size_t>(popcount(x_ | z_));
}

PauliOperator PauliOperator::negated() const {
  return PauliOperator(n_, x_, z_, phase_ + 2);
}

PauliOperator PauliOperator::times_i() const {
  return PauliOperator(n_, x_, z_, phase_ + 1);
}

PauliOperator PauliOperator::adjoint() const {
  // The Hermitian word is self-adjoint; only the explicit phase conjugates.
  return PauliOperator(n_, x_, z_, 4 - phase_);
}

PauliOperator PauliOperator::bare_word() const {
  return PauliOperator(n_, x_, z_, 0);
}

std::string PauliOperator::word_str() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = letter(q);
  return s;
}

std::string PauliOperator::str() const {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  return prefix[phase_] + word_str();
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("multiplying operators of different widths");
  }
  std::uint64_t x = p.x_mask() ^ q.x_mask();
  std::uint64_t z = p.z_mask() ^ q.z_mask();
  // X^a Z^b X^c Z^d = (-1)^{|b & c|} X^{a^c} Z^{b^d}, and each factor of
  // W(x,z) = i^{|x&z|} X^x Z^z contributes its own Y-count correction.
  int k = popcount(p.x_mask() & p.z_mask()) + popcount(q.x_mask() & q.z_mask()) +
          2 * popcount(p.z_mask() & q.x_mask()) - popcount(x & z);
  int phase = p.phase_exp() + q.phase_exp() + k;
  return PauliOperator(p.num_qubits(), x, z, phase);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  int w = popcount(p.x_mask() & q.z_mask()) + popcount(p.z_mask() & q.x_mask());
  return (w & 1) == 0;
}

std::optional<PauliOperator> jordan_product(const PauliOperator& p,
                                            const PauliOperator& q) {
  if (!commutes(p, q)) return std::nullopt;
  return multiply(p, q);
}

PauliSum::PauliSum(std::size_t n, double tolerance) : n_(n), tol_(tolerance) {
  check_width(n);
}

void PauliSum::add(PauliWord w, double coeff) {
  std::uint64_t m = width_mask(n_);
  if ((w.x & ~m) || (w.z & ~m)) {
    throw ParseError("term word wider than the sum");
  }
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (std::abs(coeff) > tol_) terms_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (std::abs(it->second) <= tol_) terms_.erase(it);
}

void PauliSum::add(const PauliOperator& op, double coeff) {
  if (op.num_qubits() != n_) {
    throw DimensionError("term width differs from sum width");
  }
  add(op.word(), coeff * op.sign());
}

double PauliSum::coefficient(PauliWord w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0.0 : it->second;
}

std::vector<std::pair<PauliOperator, double>> PauliSum::term_operators() const {
  std::vector<std::pair<PauliOperator, double>> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) {
    out.emplace_back(PauliOperator::make(n_, w), c);
  }
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw DimensionError("adding sums of different widths");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scale;
  return *this;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::string PauliSum::to_text() const {
  std::ostringstream out;
  for (const auto& [w, c] : terms_) {
    out << format_coefficient(c) << ' '
        << PauliOperator::make(n_, w).word_str() << '\n';
  }
  return out.str();
}

PauliSum PauliSum::parse_text(std::string_view text,
                              std::optional<std::size_t> expect_n,
                              double tolerance) {
  std::optional<std::size_t> n = expect_n;
  std::vector<std::pair<PauliWord, double>> parsed;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    std::size_t space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<coeff> <pauli_string>'");
    }
    std::string_view coeff_text = line.substr(0, space);
    std::string_view word_text = line.substr(line.find_first_not_of(" \t", space));

    double coeff;
    try {
      coeff = parse_coefficient(coeff_text);
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
    }
    PauliOperator op = [&] {
      try {
        return PauliOperator::parse(word_text);
      } catch (const ParseError& err) {
        throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
      }
    }();
    if (!op.is_hermitian()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": imaginary phase prefix is not allowed here");
    }
    if (!n) n = op.num_qubits();
    if (op.num_qubits() != *n) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": string width " + std::to_string(op.num_qubits()) +
                       " differs from " + std::to_string(*n));
    }
    parsed.emplace_back(op.word(), coeff * op.sign());
  }
  if (!n) throw ParseError("no terms found");
  PauliSum sum(*n, tolerance);
  for (const auto& [w, c] : parsed) sum.add(w, c);
  return sum;
}

std::string format_coefficient(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double parse_coefficient(std::string_view text) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("bad coefficient '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace noncon
