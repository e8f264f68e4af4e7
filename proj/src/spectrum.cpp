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

#include "noncon/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "noncon/gf2.hpp"

namespace noncon {

namespace {

double eval_e_minus(const Decomposition& d, std::uint64_t mask) {
  double s0 = 0.0;
  std::vector<double> s(d.a_reps.size(), 0.0);
  for (const auto& f : d.factorization) {
    double v = f.h;
    if (std::popcount(f.g_mask & mask) & 1) v = -v;
    if (f.clique) {
      s[*f.clique] += v;
    } else {
      s0 += v;
    }
  }
  double norm_sq = 0.0;
  for (double v : s) norm_sq += v * v;
  return s0 - std::sqrt(norm_sq);
}

}  // namespace

SectorValues sector_values(const Decomposition& d, std::uint64_t nu_mask) {
  std::size_t k = d.g_generators.size();
  if (k < 64 && (nu_mask >> k) != 0) {
    throw DimensionError("sector mask wider than the generator count");
  }
  SectorValues sv;
  sv.nu_mask = nu_mask;
  sv.nu.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    sv.nu[i] = (nu_mask >> i) & 1 ? -1 : +1;
  }
  sv.s.assign(d.a_reps.size(), 0.0);
  for (const auto& f : d.factorization) {
    double v = f.h;
    if (std::popcount(f.g_mask & nu_mask) & 1) v = -v;
    if (f.clique) {
      sv.s[*f.clique] += v;
    } else {
      sv.s0 += v;
    }
  }
  double norm_sq = 0.0;
  for (double v : sv.s) norm_sq += v * v;
  sv.s_norm = std::sqrt(norm_sq);
  sv.e_minus = sv.s0 - sv.s_norm;
  sv.e_plus = sv.s0 + sv.s_norm;
  return sv;
}

std::pair<double, double> sector_energies(const Decomposition& d,
                                          std::uint64_t nu_mask) {
  SectorValues sv = sector_values(d, nu_mask);
  return {sv.e_minus, sv.e_plus};
}

GroundResult ground_search(const Decomposition& d, const GroundOptions& opts) {
  std::size_t k = d.g_generators.size();
  GroundResult best;

  if (k <= opts.brute_cap) {
    best.nu_mask = 0;
    best.energy = eval_e_minus(d, 0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      double e = eval_e_minus(d, mask);
      if (e < best.energy) {
        best.energy = e;
        best.nu_mask = mask;
      }
    }
    best.certified = true;
    return best;
  }

  if (!opts.anneal) {
    throw CapExceededError(std::to_string(k) +
                           " generators exceed the exhaustive-search cap of " +
                           std::to_string(opts.brute_cap));
  }

  // Single-flip Metropolis annealing with a geometric schedule.
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double scale = 0.0;
  for (const auto& f : d.factorization) scale = std::max(scale, std::abs(f.h));
  double t_hot = std::max(1e-3, 4.0 * scale);
  double t_cold = 1e-6;

  bool first = true;
  for (std::size_t r = 0; r < opts.restarts; ++r) {
    std::uint64_t mask =
        k >= 64 ? rng() : rng() & ((std::uint64_t{1} << k) - 1);
    double e = eval_e_minus(d, mask);
    std::size_t total = std::max<std::size_t>(1, opts.sweeps * k);
    for (std::size_t t = 0; t < total; ++t) {
      double temp = t_hot * std::pow(t_cold / t_hot,
                                     static_cast<double>(t) / total);
      std::uint64_t flip = std::uint64_t{1} << (rng() % k);
      double e_new = eval_e_minus(d, mask ^ flip);
      if (e_new <= e || unit(rng) < std::exp((e - e_new) / temp)) {
        mask ^= flip;
        e = e_new;
      }
      if (first || e < best.energy ||
          (e == best.energy && mask < best.nu_mask)) {
        best.energy = e;
        best.nu_mask = mask;
        first = false;
      }
    }
  }
  best.certified = false;
  return best;
}

SpectrumSummary full_spectrum(const Decomposition& d,
                              const SpectrumOptions& opts) {
  std::size_t k = d.g_generators.size();
  std::size_t a = d.a_reps.size();
  if (k > opts.brute_cap) {
    throw CapExceededError(std::to_string(k) +
                           " generators exceed the spectrum cap of " +
                           std::to_string(opts.brute_cap));
  }
  if (d.n >= 63) throw CapExceededError("dimension too large to count");

  SpectrumSummary out;
  out.g_size = k;
  out.a_size = a;
  out.total_dim = std::uint64_t{1} << d.n;
  out.block_dim = std::uint64_t{1} << (d.n - k);
  out.divisor = a >= 2 ? std::uint64_t{1} << ((a - 1 + 1) / 2 - 1) : 1;

  std::vector<std::pair<double, std::uint64_t>> raw;
  raw.reserve((std::size_t{1} << k) * 2);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    SectorValues sv = sector_values(d, mask);
    if (a == 0) {
      raw.emplace_back(sv.s0, out.block_dim);
    } else {
      raw.emplace_back(sv.e_minus, out.block_dim / 2);
      raw.emplace_back(sv.e_plus, out.block_dim / 2);
    }
  }
  std::sort(raw.begin(), raw.end());

  for (const auto& [value, mult] : raw) {
    if (!out.entries.empty() &&
        value - out.entries.back().value <= opts.merge_tolerance) {
      out.entries.back().multiplicity += mult;
      out.entries.back().sector_count += 1;
    } else {
      out.entries.push_back({value, mult, 1});
    }
  }
  return out;
}

PauliSum projector(const std::vector<int>& nu,
                   const std::vector<PauliOperator>& g, std::size_t n,
                   std::size_t cap) {
  if (nu.size() != g.size()) {
    throw DimensionError("one eigenvalue per generator required");
  }
  if (g.size() > cap) {
    throw CapExceededError("projector over " + std::to_string(g.size()) +
                           " generators exceeds the cap of " +
                           std::to_string(cap));
  }
  gf2::Basis basis(n);
  for (const auto& gi : g) {
    if (gi.num_qubits() != n) {
      throw DimensionError("generator width differs from projector width");
    }
    if (gi.is_identity_word() || !basis.insert(gi.word())) {
      throw DependentSetError("projector generators are dependent");
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (nu[i] != 1 && nu[i] != -1) {
      throw DimensionError("eigenvalues must be +1 or -1");
    }
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!commutes(g[i], g[j])) {
        throw NotCommutingError("projector generators anticommute");
      }
    }
  }

  std::size_t k = g.size();
  double weight = std::ldexp(1.0, -static_cast<int>(k));
  PauliSum out(n, kDefaultTolerance * weight);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    PauliOperator prod = PauliOperator::identity(n);
    double coeff = weight;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) {
        prod = multiply(prod, g[i]);
        coeff *= nu[i];
      }
    }
    out.add(prod, coeff);
  }
  return out;
}

}  // namespace noncon
