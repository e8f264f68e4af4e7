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

#include "noncon/battery.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "noncon/clifford.hpp"
#include "noncon/eigenstate.hpp"
#include "noncon/spectrum.hpp"
#include "noncon/structure.hpp"
#include "noncon/unitary_partitioning.hpp"
#include "noncon/verification.hpp"

namespace noncon {

namespace {

std::string fmt(double v) { return format_coefficient(v); }

// Runs one named check, converting exceptions into failures.
void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  try {
    r.detail = body();
    r.status = "pass";
  } catch (const CapExceededError& err) {
    r.status = "skip";
    r.detail = err.what();
  } catch (const std::exception& err) {
    r.status = "fail";
    r.detail = err.what();
  }
  out.push_back(r);
}

void skip(std::vector<CheckResult>& out, const std::string& name,
          const std::string& why) {
  out.push_back({name, "skip", why});
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

double spectrum_moment(const SpectrumSummary& spec, std::size_t k) {
  double acc = 0.0;
  for (const auto& e : spec.entries) {
    acc += static_cast<double>(e.multiplicity) * std::pow(e.value, k);
  }
  return acc / static_cast<double>(spec.total_dim);
}

}  // namespace

std::vector<CheckResult> run_battery(const PauliSum& h,
                                     const BatteryOptions& opts) {
  std::vector<CheckResult> out;
  std::size_t n = h.num_qubits();

  std::vector<PauliOperator> words;
  for (const auto& [w, c] : h.terms()) {
    words.push_back(PauliOperator::make(n, w));
  }

  bool noncontextual = false;
  run_check(out, "classifier_agreement", [&] {
    bool graph_based = is_noncontextual(h);
    bool brute = brute_noncontextuality(words);
    require(graph_based == brute,
            "graph classifier and literal transitivity check disagree");
    noncontextual = graph_based;
    return std::string(noncontextual ? "noncontextual" : "contextual") +
           " by both routes";
  });

  const char* ctx_skip = "input is contextual";
  if (!noncontextual) {
    for (const char* name :
         {"reconstruction", "structure_properties", "closure", "tapering",
          "sector_blocks", "spectrum_vs_dense", "trace_moments",
          "ground_vs_dense", "eigenstate_residual", "projectors",
          "unitary_partitioning"}) {
      skip(out, name, ctx_skip);
    }
    return out;
  }

  Decomposition d = extract_generators(h);
  std::size_t g_size = d.g_generators.size();
  std::size_t a_size = d.a_reps.size();

  run_check(out, "reconstruction", [&] {
    PauliSum back = reconstruct(d);
    require(back.size() == h.size(), "term count changed");
    for (const auto& [w, c] : h.terms()) {
      require(std::abs(back.coefficient(w) - c) <= 1e-12,
              "coefficient mismatch on " + PauliOperator::make(n, w).word_str());
    }
    return "rebuilt " + std::to_string(h.size()) + " terms exactly";
  });

  run_check(out, "structure_properties", [&] {
    require(a_size != 1, "|A| = 1 is not a valid decomposition");
    for (std::size_t i = 0; i < g_size; ++i) {
      for (std::size_t j = i + 1; j < g_size; ++j) {
        require(commutes(d.g_generators[i], d.g_generators[j]),
                "G is not mutually commuting");
      }
      for (const auto& w : words) {
        require(commutes(d.g_generators[i], w),
                "G member fails to commute with a term");
      }
    }
    for (std::size_t i = 0; i < a_size; ++i) {
      require(d.a_reps[i] == d.cliques[i].front(),
              "representative is not its clique's least member");
      for (std::size_t j = i + 1; j < a_size; ++j) {
        require(!commutes(d.a_reps[i], d.a_reps[j]),
                "A members fail to anticommute");
      }
    }
    return "|G| = " + std::to_string(g_size) +
           ", |A| = " + std::to_string(a_size);
  });

  run_check(out, "closure", [&] {
    auto closure = enumerate_closure(d);
    std::uint64_t expect =
        (std::uint64_t{1} << g_size) * (1 + a_size);
    require(closure.size() == expect, "closure size is not 2^|G|(1+|A|)");
    require(expect <= (std::uint64_t{1} << (n + 1)),
            "closure exceeds 2^(n+1)");
    PauliWordLess less;
    for (const auto& [w, c] : h.terms()) {
      require(std::binary_search(closure.begin(), closure.end(), w, less),
              "input term outside its own closure");
    }
    return std::to_string(closure.size()) + " closure words";
  });

  CliffordMap map = tapering_map(d.g_generators, n);
  PauliSum tapered = conjugate(map, h);

  run_check(out, "tapering", [&] {
    for (std::size_t i = 0; i < g_size; ++i) {
      PauliOperator img = conjugate(map, d.g_generators[i]);
      require(img.weight() == 1 && img.letter(map.targets[i].qubit) == 'Z',
              "generator image is not a single-qubit Z");
      require(img.sign() == map.targets[i].sign, "recorded sign is wrong");
    }
    PauliSum back = conjugate(inverse(map), tapered);
    require(back == h, "inverse map does not undo the tapering");
    if (n <= opts.dense_qubit_cap) {
      DenseOperator c = map_unitary(map);
      DenseOperator lhs = dense(tapered);
      DenseOperator rhs = matmul(matmul(dagger(c), dense(h)), c);
      double diff = max_abs_diff(lhs, rhs);
      require(diff <= 1e-9, "dense conjugation mismatch " + fmt(diff));
      return std::string("images, round-trip and dense unitary agree");
    }
    return std::string("images and round-trip agree (dense skipped)");
  });

  if (n > opts.dense_qubit_cap) {
    skip(out, "sector_blocks", "width above the dense cap");
  } else {
    run_check(out, "sector_blocks", [&] {
      std::vector<std::size_t> targets;
      for (const auto& t : map.targets) targets.push_back(t.qubit);
      DenseOperator full = dense(tapered);
      std::size_t dim = full.dim;
      std::vector<bool> covered(dim * dim, false);
      double worst = 0.0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g_size);
           ++mask) {
        std::vector<int> nu(g_size);
        // The block of sector nu sits where target qubit i reads out
        // nu_i * sign_i as a Z eigenvalue.
        std::uint64_t fixed_bits = 0;
        for (std::size_t i = 0; i < g_size; ++i) {
          nu[i] = (mask >> i) & 1 ? -1 : +1;
          if (nu[i] * map.targets[i].sign == -1) {
            fixed_bits |= std::uint64_t{1} << (n - 1 - targets[i]);
          }
        }
        PauliSum block = project_sector(tapered, targets, nu);
        // Map reduced indices back into the full space.
        std::vector<std::size_t> free_qubits;
        for (std::size_t q = 0; q < n; ++q) {
          if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
            free_qubits.push_back(q);
          }
        }
        std::size_t bdim = std::size_t{1} << free_qubits.size();
        DenseOperator bmat = dense(block);
        for (std::size_t r = 0; r < bdim; ++r) {
          std::size_t fr = fixed_bits;
          for (std::size_t b = 0; b < free_qubits.size(); ++b) {
            if ((r >> (free_qubits.size() - 1 - b)) & 1) {
              fr |= std::size_t{1} << (n - 1 - free_qubits[b]);
            }
          }
          for (std::size_t cdx = 0; cdx < bdim; ++cdx) {
            std::size_t fc = fixed_bits;
            for (std::size_t b = 0; b < free_qubits.size(); ++b) {
              if ((cdx >> (free_qubits.size() - 1 - b)) & 1) {
                fc |= std::size_t{1} << (n - 1 - free_qubits[b]);
              }
            }
            worst = std::max(worst, std::abs(full.at(fr, fc) - bmat.at(r, cdx)));
            covered[fr * dim + fc] = true;
          }
        }
      }
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          if (!covered[i * dim + j]) {
            worst = std::max(worst, std::abs(full.at(i, j)));
          }
        }
      }
      require(worst <= 1e-9, "block embedding mismatch " + fmt(worst));
      return "direct sum of " + std::to_string(std::size_t{1} << g_size) +
             " blocks matches the tapered matrix, off-blocks vanish";
    });
  }

  SpectrumSummary spec;
  bool have_spectrum = false;
  try {
    spec = full_spectrum(d);
    have_spectrum = true;
  } catch (const CapExceededError&) {
  }

  if (!have_spectrum) {
    skip(out, "spectrum_vs_dense", "sector count above the spectrum cap");
  } else if (n > opts.dense_qubit_cap) {
    skip(out, "spectrum_vs_dense", "width above the dense cap");
  } else {
    run_check(out, "spectrum_vs_dense", [&] {
      std::vector<double> evals = dense_eigenvalues(dense(h));
      std::uint64_t total = 0;
      std::vector<double> closed;
      for (const auto& e : spec.entries) {
        total += e.multiplicity;
        for (std::uint64_t i = 0; i < e.multiplicity; ++i) {
          closed.push_back(e.value);
        }
        require(e.multiplicity % spec.divisor == 0,
                "multiplicity not divisible by the bound");
      }
      require(total == spec.total_dim, "multiplicities do not sum to 2^n");
      require(closed.size() == evals.size(), "eigenvalue count mismatch");
      double worst = 0.0;
      for (std::size_t i = 0; i < evals.size(); ++i) {
        worst = std::max(worst, std::abs(evals[i] - closed[i]));
      }
      require(worst <= 1e-9, "eigenvalue mismatch " + fmt(worst));
      return "multiset agrees, worst gap " + fmt(worst);
    });
  }

  if (!have_spectrum) {
    skip(out, "trace_moments", "sector count above the spectrum cap");
  } else {
    run_check(out, "trace_moments", [&] {
      std::vector<double> symbolic = trace_moments(h, 4);
      double worst = 0.0;
      for (std::size_t k = 1; k <= 4; ++k) {
        double closed = spectrum_moment(spec, k);
        double gap = std::abs(symbolic[k - 1] - closed) /
                     std::max(1.0, std::abs(symbolic[k - 1]));
        worst = std::max(worst, gap);
      }
      require(worst <= 1e-9, "moment mismatch " + fmt(worst));
      return "k <= 4 agree, worst relative gap " + fmt(worst);
    });
  }

  GroundResult ground;
  bool have_ground = false;
  try {
    ground = ground_search(d);
    have_ground = true;
  } catch (const CapExceededError&) {
  }

  if (!have_ground) {
    skip(out, "ground_vs_dense", "sector count above the search cap");
  } else if (n > opts.dense_qubit_cap) {
    skip(out, "ground_vs_dense", "width above the dense cap");
  } else {
    run_check(out, "ground_vs_dense", [&] {
      std::vector<double> evals = dense_eigenvalues(dense(h));
      double gap = std::abs(ground.energy - evals.front());
      require(gap <= 1e-9, "ground energy off by " + fmt(gap));
      return "epsilon_0 matches the dense minimum within " + fmt(gap);
    });
  }

  if (!have_ground) {
    skip(out, "eigenstate_residual", "sector count above the search cap");
  } else if (n > opts.state_qubit_cap) {
    skip(out, "eigenstate_residual", "width above the statevector cap");
  } else {
    run_check(out, "eigenstate_residual", [&] {
      double worst = 0.0;
      for (int sign : {-1, +1}) {
        StabilizerSum psi = build_eigenstate(d, ground.nu_mask, sign);
        require(rank_bound(psi) <= std::max<std::size_t>(1, a_size),
                "branch count exceeds the linear bound");
        StateVector v = dense_state(psi);
        require(std::abs(norm(v) - 1.0) <= 1e-10, "state is not normalized");
        StateVector hv = act(h, v);
        double res = norm(subtract(hv, scale(v, psi.energy)));
        worst = std::max(worst, res);
      }
      require(worst <= 1e-8, "residual " + fmt(worst));
      return "both signed states in the best sector, worst residual " +
             fmt(worst);
    });
  }

  if (g_size > opts.projector_g_cap) {
    skip(out, "projectors", "generator count above the projector cap");
  } else {
    run_check(out, "projectors", [&] {
      std::vector<PauliSum> projs;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g_size);
           ++mask) {
        std::vector<int> nu(g_size);
        for (std::size_t i = 0; i < g_size; ++i) {
          nu[i] = (mask >> i) & 1 ? -1 : +1;
        }
        projs.push_back(projector(nu, d.g_generators, n));
      }
      PauliSum total(n);
      double worst = 0.0;
      for (std::size_t i = 0; i < projs.size(); ++i) {
        total += projs[i];
        worst = std::max(worst, commutator_max(h, projs[i]));
        for (std::size_t j = 0; j < projs.size(); ++j) {
          PauliSum prod = symbolic_product(projs[i], projs[j]);
          if (i == j) {
            require(prod == projs[i], "projector is not idempotent");
          } else {
            require(prod.empty(), "projectors are not orthogonal");
          }
        }
      }
      require(total.size() == 1 &&
                  std::abs(total.coefficient(PauliWord{0, 0}) - 1.0) <= 1e-12,
              "projectors do not resolve the identity");
      require(worst <= 1e-12, "projector fails to commute with H");
      return std::to_string(projs.size()) +
             " sector projectors: idempotent, orthogonal, complete, symmetric";
    });
  }

  if (a_size < 2) {
    skip(out, "unitary_partitioning", "no anticommuting part");
  } else if (!have_ground) {
    skip(out, "unitary_partitioning", "sector count above the search cap");
  } else {
    run_check(out, "unitary_partitioning", [&] {
      SectorValues sv = sector_values(d, ground.nu_mask);
      if (sv.s_norm <= d.tolerance) {
        throw CapExceededError("sector s-vector vanishes; nothing to reduce");
      }
      NormalizedACSum acs;
      acs.n = n;
      acs.words = d.a_reps;
      acs.norm = sv.s_norm;
      for (double si : sv.s) acs.betas.push_back(si / sv.s_norm);
      PauliSum cnu(n);
      for (std::size_t i = 0; i < a_size; ++i) {
        cnu.add(d.a_reps[i], acs.betas[i]);
      }
      double worst = 0.0;
      for (PlanKind kind : {PlanKind::sequence, PlanKind::lcu}) {
        RotationPlan plan = kind == PlanKind::sequence
                                ? build_sequence_plan(acs, 0)
                                : build_lcu_plan(acs, 0);
        PauliSum reduced = conjugate_by_plan(plan, cnu);
        require(reduced.size() == 1, "reduction left extra words");
        worst = std::max(
            worst, std::abs(reduced.coefficient(d.a_reps[0].word()) - 1.0));
        if (n <= 5) {
          DenseOperator r = plan_unitary(plan);
          DenseOperator rd = dagger(r);
          double unit = max_abs_diff(matmul(rd, r), identity_matrix(n));
          require(unit <= 1e-10, "plan unitary is not unitary");
          double gap = max_abs_diff(dense(reduced),
                                    matmul(matmul(rd, dense(cnu)), r));
          require(gap <= 1e-9, "symbolic and dense conjugation disagree");
        }
      }
      require(worst <= 1e-10, "reduced coefficient off by " + fmt(worst));
      return "both plans collapse C(nu) onto +" + d.a_reps[0].word_str();
    });
  }

  return out;
}

bool battery_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.status == "fail") return false;
  }
  return true;
}

}  // namespace noncon
