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

#include "noncon/unitary_partitioning.hpp"

#include <cmath>
#include <map>

namespace noncon {

namespace {

constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_target(const NormalizedACSum& acs, std::size_t target_index) {
  if (acs.words.size() < 2) {
    throw SingleWordError("a reduction plan needs at least two words");
  }
  if (target_index >= acs.words.size()) {
    throw DimensionError("target index out of range");
  }
}

}  // namespace

NormalizedACSum normalize(
    const std::vector<std::pair<PauliOperator, double>>& terms,
    double tolerance) {
  if (terms.empty()) throw AllZeroError("empty anticommuting sum");
  NormalizedACSum acs;
  acs.n = terms.front().first.num_qubits();
  double norm_sq = 0.0;
  for (const auto& [op, c] : terms) {
    if (op.num_qubits() != acs.n) {
      throw DimensionError("mixed operator widths");
    }
    acs.words.push_back(op.bare_word());
    acs.betas.push_back(c * op.sign());
    norm_sq += c * c;
  }
  for (std::size_t i = 0; i < acs.words.size(); ++i) {
    for (std::size_t j = i + 1; j < acs.words.size(); ++j) {
      if (commutes(acs.words[i], acs.words[j])) {
        throw NotAnticommutingError("words " + acs.words[i].word_str() +
                                    " and " + acs.words[j].word_str() +
                                    " commute");
      }
    }
  }
  acs.norm = std::sqrt(norm_sq);
  if (acs.norm <= tolerance) {
    throw AllZeroError("anticommuting sum has zero norm");
  }
  for (double& b : acs.betas) b /= acs.norm;
  return acs;
}

NormalizedACSum normalize(const PauliSum& h) { return normalize(h.term_operators()); }

RotationPlan build_sequence_plan(const NormalizedACSum& acs,
                                 std::size_t target_index) {
  require_target(acs, target_index);
  RotationPlan plan;
  plan.kind = PlanKind::sequence;
  plan.n = acs.n;
  plan.target = acs.words[target_index];

  // Fold each amplitude into the target; the running target amplitude `a`
  // grows to sqrt(a^2 + beta^2) at every step and ends at exactly 1.
  double a = acs.betas[target_index];
  for (std::size_t k = 0; k < acs.words.size(); ++k) {
    if (k == target_index || std::abs(acs.betas[k]) <= kDefaultTolerance) {
      continue;
    }
    double beta = acs.betas[k];
    RotationStep step;
    step.axis = multiply(acs.words[k], plan.target).times_i();
    step.angle = std::atan2(beta, a) / 2.0;
    plan.steps.push_back(step);
    a = std::sqrt(a * a + beta * beta);
  }
  if (a < 0.5) {
    // Only reachable when every other amplitude vanished and the target
    // amplitude is -1: one half-turn against any partner flips the sign.
    std::size_t k = target_index == 0 ? 1 : 0;
    RotationStep step;
    step.axis = multiply(acs.words[k], plan.target).times_i();
    step.angle = std::atan2(0.0, a) / 2.0;
    plan.steps.push_back(step);
  }
  return plan;
}

RotationPlan build_lcu_plan(const NormalizedACSum& acs,
                            std::size_t target_index) {
  require_target(acs, target_index);
  RotationPlan plan;
  plan.kind = PlanKind::lcu;
  plan.n = acs.n;
  plan.target = acs.words[target_index];

  double beta_w = acs.betas[target_index];
  double rest_sq = 0.0;
  for (std::size_t k = 0; k < acs.betas.size(); ++k) {
    if (k != target_index) rest_sq += acs.betas[k] * acs.betas[k];
  }
  double s = std::sqrt(rest_sq);

  if (s <= kDefaultTolerance) {
    if (beta_w > 0) {
      // Already the target: R is the identity.
      plan.theta = 0.0;
      plan.expansion.emplace_back(1.0, PauliOperator::identity(acs.n));
      return plan;
    }
    // Amplitude -1 on the target: a quarter turn against any partner gives
    // R = -i * X with X * (-target) * X = +target after conjugation.
    std::size_t k = target_index == 0 ? 1 : 0;
    plan.theta = std::acos(-1.0) / 2.0;
    PauliOperator axis = multiply(acs.words[k], plan.target).times_i();
    plan.expansion.emplace_back(std::complex<double>(0, -1.0 * axis.sign()),
                                axis.bare_word());
    return plan;
  }

  // R = exp(-i * theta * X), X = sum_k beta_k / s * (i * A_k * A_w);
  // X squares to the identity, so R = cos(theta) - i sin(theta) X.
  plan.theta = std::atan2(s, beta_w) / 2.0;
  double c = std::cos(plan.theta);
  double d = std::sin(plan.theta);
  plan.expansion.emplace_back(c, PauliOperator::identity(acs.n));
  for (std::size_t k = 0; k < acs.words.size(); ++k) {
    if (k == target_index || std::abs(acs.betas[k]) <= kDefaultTolerance) {
      continue;
    }
    PauliOperator axis = multiply(acs.words[k], plan.target).times_i();
    std::complex<double> amp(0, -d * (acs.betas[k] / s) * axis.sign());
    plan.expansion.emplace_back(amp, axis.bare_word());
  }
  return plan;
}

PauliSum conjugate_by_plan(const RotationPlan& plan, const PauliSum& h) {
  if (h.num_qubits() != plan.n) {
    throw DimensionError("sum width differs from plan width");
  }
  if (plan.kind == PlanKind::sequence) {
    PauliSum cur = h;
    for (const auto& step : plan.steps) {
      PauliSum next(plan.n, h.tolerance());
      double c2 = std::cos(2 * step.angle);
      double s2 = std::sin(2 * step.angle);
      for (const auto& [w, coeff] : cur.terms()) {
        PauliOperator p = PauliOperator::make(plan.n, w);
        if (commutes(step.axis, p)) {
          next.add(p, coeff);
        } else {
          next.add(p, coeff * c2);
          next.add(multiply(step.axis, p).times_i(), coeff * s2);
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  // LCU: R^dag h R expanded over all word pairs, complex parts cancel.
  std::map<PauliWord, std::complex<double>, PauliWordLess> acc;
  for (const auto& [w, coeff] : h.terms()) {
    PauliOperator p = PauliOperator::make(plan.n, w);
    for (const auto& [dl, wl] : plan.expansion) {
      for (const auto& [dm, wm] : plan.expansion) {
        PauliOperator prod = multiply(multiply(wl, p), wm);
        std::complex<double> amp =
            std::conj(dl) * dm * coeff * kPhases[prod.phase_exp()];
        acc[prod.word()] += amp;
      }
    }
  }
  PauliSum out(plan.n, h.tolerance());
  for (const auto& [w, amp] : acc) {
    if (std::abs(amp.imag()) > 1e-9) {
      throw ConvergenceError("conjugation produced a non-Hermitian residue");
    }
    out.add(w, amp.real());
  }
  return out;
}

Reduction reduce_to_pauli(
    const std::vector<std::pair<PauliOperator, double>>& terms,
    PlanKind kind) {
  NormalizedACSum acs = normalize(terms);
  Reduction red;
  red.plan = kind == PlanKind::sequence ? build_sequence_plan(acs, 0)
                                        : build_lcu_plan(acs, 0);
  red.word = acs.words[0];
  red.sign = +1;
  red.norm = acs.norm;
  return red;
}

}  // namespace noncon
