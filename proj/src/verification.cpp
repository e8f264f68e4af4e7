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

#include "noncon/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace noncon {

namespace {

constexpr Amplitude kI{0.0, 1.0};
constexpr Amplitude kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_dense_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceededError("dense realization of " + std::to_string(n) +
                           " qubits exceeds the cap of " + std::to_string(cap));
  }
}

// Index-space mask: qubit q sits at bit (n-1-q) of the basis index.
std::uint64_t index_mask(std::uint64_t qubit_mask, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((qubit_mask >> q) & 1) out |= std::uint64_t{1} << (n - 1 - q);
  }
  return out;
}

using Mat2 = std::array<Amplitude, 4>;

Mat2 letter_matrix(char letter) {
  switch (letter) {
    case 'I':
      return {1, 0, 0, 1};
    case 'X':
      return {0, 1, 1, 0};
    case 'Y':
      return {0, -kI, kI, 0};
    default:  // 'Z'
      return {1, 0, 0, -1};
  }
}

}  // namespace

DenseOperator dense(const PauliOperator& p, std::size_t cap) {
  check_dense_cap(p.num_qubits(), cap);
  std::size_t n = p.num_qubits();
  // Fold letters in from qubit 0 so it ends up most significant.
  std::vector<Amplitude> cur = {kPhases[p.phase_exp()]};
  std::size_t dim = 1;
  for (std::size_t q = 0; q < n; ++q) {
    Mat2 m = letter_matrix(p.letter(q));
    std::vector<Amplitude> next(4 * dim * dim, 0.0);
    std::size_t nd = dim * 2;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Amplitude base = cur[i * dim + j];
        if (base == Amplitude{}) continue;
        for (std::size_t bi = 0; bi < 2; ++bi) {
          for (std::size_t bj = 0; bj < 2; ++bj) {
            next[(i * 2 + bi) * nd + (j * 2 + bj)] = base * m[bi * 2 + bj];
          }
        }
      }
    }
    cur = std::move(next);
    dim = nd;
  }
  DenseOperator out(n);
  out.a = std::move(cur);
  return out;
}

DenseOperator dense(const PauliSum& h, std::size_t cap) {
  check_dense_cap(h.num_qubits(), cap);
  DenseOperator out(h.num_qubits());
  for (const auto& [w, c] : h.terms()) {
    DenseOperator term = dense(PauliOperator::make(h.num_qubits(), w), cap);
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += c * term.a[i];
  }
  return out;
}

StateVector act(const PauliOperator& p, const StateVector& v) {
  std::size_t n = p.num_qubits();
  if (v.size() != (std::size_t{1} << n)) {
    throw DimensionError("state dimension does not match operator width");
  }
  std::uint64_t xi = index_mask(p.x_mask(), n);
  std::uint64_t zi = index_mask(p.z_mask(), n);
  int base = (p.phase_exp() + std::popcount(p.x_mask() & p.z_mask())) % 4;
  StateVector out(v.size(), 0.0);
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b] == Amplitude{}) continue;
    // i^base * (-1)^{|z & b|} moves |b> to |b ^ x>.
    int ph = (base + 2 * (std::popcount(b & zi) & 1)) % 4;
    out[b ^ xi] += kPhases[ph] * v[b];
  }
  return out;
}

StateVector act(const PauliSum& h, const StateVector& v) {
  StateVector out(v.size(), 0.0);
  for (const auto& [w, c] : h.terms()) {
    StateVector t = act(PauliOperator::make(h.num_qubits(), w), v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * t[i];
  }
  return out;
}

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim != b.dim) throw DimensionError("matrix dimensions differ");
  DenseOperator out(a.n);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      Amplitude aik = a.at(i, k);
      if (aik == Amplitude{}) continue;
      for (std::size_t j = 0; j < a.dim; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

DenseOperator dagger(const DenseOperator& a) {
  DenseOperator out(a.n);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      out.at(i, j) = std::conj(a.at(j, i));
    }
  }
  return out;
}

DenseOperator identity_matrix(std::size_t n) {
  DenseOperator out(n);
  for (std::size_t i = 0; i < out.dim; ++i) out.at(i, i) = 1.0;
  return out;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim != b.dim) throw DimensionError("matrix dimensions differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    m = std::max(m, std::abs(a.a[i] - b.a[i]));
  }
  return m;
}

namespace {

using CoeffMap = std::map<PauliWord, Amplitude, PauliWordLess>;

CoeffMap product_map(const PauliSum& a, const PauliSum& b,
                     std::uint64_t term_cap) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("sum widths differ");
  }
  std::size_t n = a.num_qubits();
  CoeffMap out;
  for (const auto& [wa, ca] : a.terms()) {
    PauliOperator pa = PauliOperator::make(n, wa);
    for (const auto& [wb, cb] : b.terms()) {
      PauliOperator prod = multiply(pa, PauliOperator::make(n, wb));
      out[prod.word()] += ca * cb * kPhases[prod.phase_exp()];
      if (out.size() > term_cap) {
        throw CapExceededError("symbolic product exceeded " +
                               std::to_string(term_cap) + " terms");
      }
    }
  }
  return out;
}

}  // namespace

PauliSum symbolic_product(const PauliSum& a, const PauliSum& b,
                          std::uint64_t term_cap) {
  CoeffMap prod = product_map(a, b, term_cap);
  PauliSum out(a.num_qubits(), std::min(a.tolerance(), b.tolerance()));
  for (const auto& [w, amp] : prod) {
    if (std::abs(amp.imag()) > 1e-9) {
      throw ConvergenceError("symbolic product has an imaginary residue");
    }
    out.add(w, amp.real());
  }
  return out;
}

double commutator_max(const PauliSum& a, const PauliSum& b,
                      std::uint64_t term_cap) {
  CoeffMap ab = product_map(a, b, term_cap);
  CoeffMap ba = product_map(b, a, term_cap);
  for (const auto& [w, amp] : ba) ab[w] -= amp;
  double m = 0.0;
  for (const auto& [w, amp] : ab) m = std::max(m, std::abs(amp));
  return m;
}

std::vector<double> trace_moments(const PauliSum& h, std::size_t k_max,
                                  std::uint64_t term_cap) {
  using CMap = std::map<PauliWord, Amplitude, PauliWordLess>;
  std::size_t n = h.num_qubits();
  std::vector<double> moments;
  CMap power;
  power[PauliWord{0, 0}] = 1.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    CMap next;
    for (const auto& [wa, ca] : power) {
      PauliOperator pa = PauliOperator::make(n, wa);
      for (const auto& [wb, cb] : h.terms()) {
        PauliOperator prod = multiply(pa, PauliOperator::make(n, wb));
        next[prod.word()] += ca * cb * kPhases[prod.phase_exp()];
        if (next.size() > term_cap) {
          throw CapExceededError("symbolic power exceeded " +
                                 std::to_string(term_cap) + " terms");
        }
      }
    }
    power = std::move(next);
    auto it = power.find(PauliWord{0, 0});
    moments.push_back(it == power.end() ? 0.0 : it->second.real());
  }
  return moments;
}

std::vector<double> dense_eigenvalues(DenseOperator a, std::size_t dim_cap) {
  if (a.dim > dim_cap) {
    throw CapExceededError("eigensolve dimension exceeds the cap");
  }
  double fro = 0.0;
  for (const auto& v : a.a) fro += std::norm(v);
  fro = std::sqrt(fro);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) >
          1e-10 * std::max(1.0, fro)) {
        throw DimensionError("matrix is not Hermitian");
      }
    }
  }

  double target = std::max(1e-12, 1e-15 * fro);
  const std::size_t max_sweeps = 100;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < a.dim; ++j) {
        if (i != j) off += std::norm(a.at(i, j));
      }
    }
    if (std::sqrt(off) < target) {
      std::vector<double> evals(a.dim);
      for (std::size_t i = 0; i < a.dim; ++i) evals[i] = a.at(i, i).real();
      std::sort(evals.begin(), evals.end());
      return evals;
    }

    for (std::size_t p = 0; p < a.dim; ++p) {
      for (std::size_t q = p + 1; q < a.dim; ++q) {
        double r = std::abs(a.at(p, q));
        if (r <= target / (10.0 * a.dim)) continue;
        Amplitude phase = a.at(p, q) / r;  // e^{i phi}
        double app = a.at(p, p).real();
        double aqq = a.at(q, q).real();
        double tau = (app - aqq) / (2.0 * r);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        // Columns: col_p <- c*col_p + s*conj(phase)*col_q,
        //          col_q <- -s*phase*col_p + c*col_q; rows symmetrically.
        for (std::size_t k = 0; k < a.dim; ++k) {
          Amplitude akp = a.at(k, p);
          Amplitude akq = a.at(k, q);
          a.at(k, p) = c * akp + s * std::conj(phase) * akq;
          a.at(k, q) = -s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < a.dim; ++k) {
          Amplitude apk = a.at(p, k);
          Amplitude aqk = a.at(q, k);
          a.at(p, k) = c * apk + s * phase * aqk;
          a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
      }
    }
  }
  throw ConvergenceError("Jacobi sweeps failed to reach tolerance");
}

std::optional<std::array<PauliOperator, 3>> transitivity_witness(
    const std::vector<PauliOperator>& words) {
  std::size_t m = words.size();
  std::vector<bool> universal(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && !commutes(words[i], words[j])) {
        universal[i] = false;
        break;
      }
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < m; ++i) {
    if (!universal[i]) rest.push_back(i);
  }
  for (std::size_t b : rest) {
    for (std::size_t a : rest) {
      if (a == b || !commutes(words[a], words[b])) continue;
      for (std::size_t c : rest) {
        if (c == a || c == b || !commutes(words[b], words[c])) continue;
        if (!commutes(words[a], words[c])) {
          return std::array<PauliOperator, 3>{words[a], words[b], words[c]};
        }
      }
    }
  }
  return std::nullopt;
}

bool brute_noncontextuality(const std::vector<PauliOperator>& words) {
  return !transitivity_witness(words).has_value();
}

DenseOperator plan_unitary(const RotationPlan& plan, std::size_t cap) {
  check_dense_cap(plan.n, cap);
  if (plan.kind == PlanKind::lcu) {
    DenseOperator r(plan.n);
    for (const auto& [d, w] : plan.expansion) {
      DenseOperator term = dense(w, cap);
      for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += d * term.a[i];
    }
    return r;
  }
  // R = prod_j exp(-i * angle_j * axis_j), factor j = 0 leftmost.
  DenseOperator r = identity_matrix(plan.n);
  for (const auto& step : plan.steps) {
    DenseOperator ax = dense(step.axis, cap);
    DenseOperator rot(plan.n);
    double c = std::cos(step.angle);
    double s = std::sin(step.angle);
    for (std::size_t i = 0; i < rot.dim; ++i) rot.at(i, i) = c;
    for (std::size_t i = 0; i < rot.a.size(); ++i) rot.a[i] -= kI * s * ax.a[i];
    r = matmul(r, rot);
  }
  return r;
}

DenseOperator map_unitary(const CliffordMap& map, std::size_t cap) {
  check_dense_cap(map.n, cap);
  DenseOperator r = identity_matrix(map.n);
  double quarter = std::acos(-1.0) / 4.0;
  for (const auto& turn : map.rotations) {
    DenseOperator ax = dense(turn.axis, cap);
    DenseOperator rot(map.n);
    double c = std::cos(turn.count * quarter);
    double s = std::sin(turn.count * quarter);
    for (std::size_t i = 0; i < rot.dim; ++i) rot.at(i, i) = c;
    for (std::size_t i = 0; i < rot.a.size(); ++i) rot.a[i] -= kI * s * ax.a[i];
    r = matmul(r, rot);
  }
  return r;
}

namespace {

// Basis state inside the support of the tableau's projector. The diagonal
// (x = 0) subgroup is extracted by eliminating x columns with exact group
// products, which leaves sign constraints parity(z & b) = [sign < 0] on the
// outcome bits b; any solution of that linear system is a support state.
std::uint64_t support_seed(const StabilizerTableau& tab) {
  std::vector<PauliOperator> rows = tab.generators;
  std::vector<PauliOperator> diagonal;
  for (std::size_t col = 0; col < tab.n; ++col) {
    std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].x_mask() & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    PauliOperator p = rows[pivot];
    rows.erase(rows.begin() + pivot);
    for (auto& r : rows) {
      if (r.x_mask() & bit) r = multiply(r, p);
    }
  }
  for (const auto& r : rows) {
    if (r.x_mask() != 0) {
      throw ConvergenceError("x elimination left a non-diagonal stabilizer");
    }
    diagonal.push_back(r);
  }

  // Solve parity(z & b) = rhs over GF(2), free bits set to zero.
  std::vector<std::pair<std::uint64_t, int>> system;
  for (const auto& d : diagonal) {
    system.emplace_back(d.z_mask(), d.sign() < 0 ? 1 : 0);
  }
  std::uint64_t b = 0;
  std::vector<std::size_t> pivot_bit(system.size());
  for (std::size_t r = 0; r < system.size(); ++r) {
    auto& [mask, rhs] = system[r];
    if (mask == 0) {
      if (rhs != 0) {
        throw ConvergenceError("tableau stabilizes no state");
      }
      pivot_bit[r] = kMaxQubits;
      continue;
    }
    std::size_t p = static_cast<std::size_t>(std::countr_zero(mask));
    pivot_bit[r] = p;
    for (std::size_t s = r + 1; s < system.size(); ++s) {
      if (system[s].first >> p & 1) {
        system[s].first ^= mask;
        system[s].second ^= rhs;
      }
    }
  }
  for (std::size_t r = system.size(); r-- > 0;) {
    if (pivot_bit[r] == kMaxQubits) continue;
    auto [mask, rhs] = system[r];
    int acc = rhs;
    acc ^= static_cast<int>(std::popcount(mask & b) & 1);
    if (acc) b |= std::uint64_t{1} << pivot_bit[r];
  }
  return b;
}

}  // namespace

StateVector dense_state(const StabilizerTableau& tab, std::size_t cap) {
  check_dense_cap(tab.n, cap);
  if (tab.generators.size() != tab.n) {
    throw DimensionError("tableau must have one generator per qubit");
  }
  std::size_t dim = std::size_t{1} << tab.n;
  double accept = std::ldexp(1.0, -static_cast<int>(tab.n) - 1);
  std::uint64_t outcome = support_seed(tab);
  std::uint64_t seed = 0;
  for (std::size_t q = 0; q < tab.n; ++q) {
    if (outcome >> q & 1) seed |= std::uint64_t{1} << (tab.n - 1 - q);
  }
  StateVector v(dim, 0.0);
  v[seed] = 1.0;
  for (const auto& g : tab.generators) {
    StateVector gv = act(g, v);
    for (std::size_t i = 0; i < dim; ++i) v[i] = 0.5 * (v[i] + gv[i]);
  }
  double len = norm(v);
  if (len * len <= accept) {
    throw ConvergenceError("tableau projector annihilated the solved seed");
  }
  for (auto& amp : v) amp /= len;
  return v;
}

StateVector dense_state(const StabilizerSum& state, std::size_t cap) {
  StateVector anchor = dense_state(state.anchor, cap);
  StateVector out(anchor.size(), 0.0);
  for (const auto& b : state.branches) {
    StateVector t = act(b.word, anchor);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += b.amplitude * t[i];
    }
  }
  return out;
}

double norm(const StateVector& v) {
  double s = 0.0;
  for (const auto& amp : v) s += std::norm(amp);
  return std::sqrt(s);
}

StateVector subtract(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw DimensionError("state dimensions differ");
  StateVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

StateVector scale(const StateVector& v, Amplitude s) {
  StateVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

}  // namespace noncon
