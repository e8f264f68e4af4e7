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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "noncon/battery.hpp"
#include "noncon/clifford.hpp"
#include "noncon/eigenstate.hpp"
#include "noncon/io.hpp"
#include "noncon/spectrum.hpp"
#include "noncon/structure.hpp"
#include "noncon/unitary_partitioning.hpp"
#include "noncon/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitContextual = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

using noncon::format_coefficient;

std::string fmt(double v) { return format_coefficient(v); }

void print_plan(const noncon::RotationPlan& plan) {
  if (plan.kind == noncon::PlanKind::sequence) {
    std::cout << "plan = sequence, steps = " << plan.steps.size() << "\n";
    for (const auto& step : plan.steps) {
      std::cout << "  exp(-i * " << fmt(step.angle) << " * " << step.axis.str()
                << ")\n";
    }
  } else {
    std::cout << "plan = lcu, theta = " << fmt(plan.theta)
              << ", expansion = " << plan.expansion.size() << "\n";
    for (const auto& [amp, word] : plan.expansion) {
      std::cout << "  (" << fmt(amp.real()) << ", " << fmt(amp.imag()) << ") "
                << word.word_str() << "\n";
    }
  }
}

int cmd_check(const std::string& path) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  std::vector<noncon::PauliOperator> words;
  for (const auto& [w, c] : h.terms()) {
    words.push_back(noncon::PauliOperator::make(h.num_qubits(), w));
  }
  auto witness = noncon::transitivity_witness(words);
  bool graph_verdict = noncon::is_noncontextual(h);
  if (graph_verdict != !witness.has_value()) {
    std::cerr << "internal error: classifiers disagree\n";
    return kExitVerify;
  }
  if (witness) {
    std::cout << "contextual\n";
    std::cout << "witness: " << (*witness)[0].word_str() << " "
              << (*witness)[1].word_str() << " " << (*witness)[2].word_str()
              << "\n";
    return kExitContextual;
  }
  std::cout << "noncontextual\n";
  return kExitOk;
}

int cmd_decompose(const std::string& path) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  noncon::Decomposition d = noncon::extract_generators(h);
  std::cout << "n = " << d.n << "\n";
  std::cout << "terms = " << h.size() << "\n";
  std::cout << "Z (" << d.z_words.size() << "):\n";
  for (const auto& w : d.z_words) std::cout << "  " << w.word_str() << "\n";
  std::cout << "cliques (" << d.cliques.size() << "):\n";
  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    std::cout << "  " << (i + 1) << ":";
    for (const auto& w : d.cliques[i]) std::cout << " " << w.word_str();
    std::cout << "\n";
  }
  std::cout << "G (" << d.g_generators.size() << "):\n";
  for (const auto& g : d.g_generators) std::cout << "  " << g.word_str() << "\n";
  std::cout << "A (" << d.a_reps.size() << "):";
  for (const auto& a : d.a_reps) std::cout << " " << a.word_str();
  std::cout << "\n";
  std::cout << "factorization:\n";
  for (const auto& f : d.factorization) {
    std::cout << "  " << noncon::PauliOperator::make(d.n, f.word).word_str()
              << ": h = " << fmt(f.h) << ", sign = " << (f.sign > 0 ? "+" : "-")
              << ", g_mask = " << f.g_mask << ", clique = ";
    if (f.clique) {
      std::cout << (*f.clique + 1);
    } else {
      std::cout << "-";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_graph(const std::string& path, const std::string& dot_path) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  noncon::CompatibilityGraph g = noncon::build_graph(h);
  std::string dot = noncon::to_dot(g);
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    noncon::write_file(dot_path, dot);
    std::cout << "wrote " << dot_path << "\n";
  }
  return kExitOk;
}

int cmd_taper(const std::string& path) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  noncon::Decomposition d = noncon::extract_generators(h);
  noncon::CliffordMap map = noncon::tapering_map(d.g_generators, d.n);
  std::cout << "rotations (" << map.rotations.size() << "):\n";
  for (const auto& turn : map.rotations) {
    std::cout << "  exp(-i * " << turn.count << " * pi/4 * "
              << turn.axis.str() << ")\n";
  }
  std::cout << "targets (" << map.targets.size() << "):\n";
  for (std::size_t i = 0; i < map.targets.size(); ++i) {
    std::cout << "  " << d.g_generators[i].word_str() << " -> "
              << (map.targets[i].sign > 0 ? "+" : "-") << "Z["
              << map.targets[i].qubit << "]\n";
  }
  std::cout << "tapered:\n";
  std::cout << noncon::conjugate(map, h).to_text();
  return kExitOk;
}

int cmd_spectrum(const std::string& path, std::size_t cap, bool anneal,
                 std::uint64_t seed) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  noncon::Decomposition d = noncon::extract_generators(h);
  std::size_t g_size = d.g_generators.size();
  if (g_size > cap && !anneal) {
    std::cerr << "error: " << g_size
              << " generators exceed the sector cap of " << cap
              << " (pass --anneal for a partial, uncertified result)\n";
    return kExitCap;
  }
  if (g_size > cap) {
    noncon::GroundOptions gopts;
    gopts.brute_cap = cap;
    gopts.anneal = true;
    gopts.seed = seed;
    noncon::GroundResult best = noncon::ground_search(d, gopts);
    noncon::SectorValues sv = noncon::sector_values(d, best.nu_mask);
    std::cout << "n = " << d.n << ", |G| = " << g_size
              << ", |A| = " << d.a_reps.size() << "\n";
    std::cout << "certified = false\n";
    std::cout << "annealed sector nu_mask = " << best.nu_mask << "\n";
    std::cout << "lambda_minus = " << fmt(sv.e_minus) << "\n";
    std::cout << "lambda_plus = " << fmt(sv.e_plus) << "\n";
    return kExitOk;
  }
  noncon::SpectrumOptions opts;
  opts.brute_cap = cap;
  noncon::SpectrumSummary spec = noncon::full_spectrum(d, opts);
  std::cout << "n = " << d.n << ", |G| = " << spec.g_size
            << ", |A| = " << spec.a_size << "\n";
  std::cout << "block_dim = " << spec.block_dim
            << ", divisor = " << spec.divisor << "\n";
  std::cout << "lambda multiplicity sectors\n";
  std::uint64_t total = 0;
  for (const auto& e : spec.entries) {
    std::cout << fmt(e.value) << " " << e.multiplicity << " "
              << e.sector_count << "\n";
    total += e.multiplicity;
  }
  std::cout << "total_multiplicity = " << total << "\n";
  return kExitOk;
}

int cmd_ground(const std::string& path, const noncon::GroundOptions& opts) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  noncon::Decomposition d = noncon::extract_generators(h);
  noncon::GroundResult res = noncon::ground_search(d, opts);
  std::cout << "epsilon_0 = " << fmt(res.energy) << "\n";
  std::cout << "nu_mask = " << res.nu_mask << "\n";
  for (std::size_t i = 0; i < d.g_generators.size(); ++i) {
    std::cout << "nu[" << d.g_generators[i].word_str() << "] = "
              << ((res.nu_mask >> i) & 1 ? "-1" : "+1") << "\n";
  }
  std::cout << "certified = " << (res.certified ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_eigenstate(const std::string& path, std::uint64_t nu_mask,
                   const std::string& sign_text,
                   const std::string& completion_text) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  noncon::Decomposition d = noncon::extract_generators(h);
  int sign = sign_text == "+" ? +1 : -1;
  noncon::Completion completion = completion_text == "x"
                                      ? noncon::Completion::x
                                      : noncon::Completion::z;
  noncon::StabilizerSum psi =
      noncon::build_eigenstate(d, nu_mask, sign, completion);
  std::cout << "nu_mask = " << nu_mask << ", sign = " << sign_text << "\n";
  std::cout << "energy = " << fmt(psi.energy) << "\n";
  std::cout << "degenerate = " << (psi.degenerate ? "true" : "false") << "\n";
  std::cout << "anchor stabilizers (" << psi.anchor.generators.size()
            << "):\n";
  for (const auto& g : psi.anchor.generators) {
    std::cout << "  " << (g.sign() > 0 ? "+" : "-") << g.word_str() << "\n";
  }
  std::cout << "branches (" << psi.branches.size() << "):\n";
  for (const auto& b : psi.branches) {
    std::cout << "  (" << fmt(b.amplitude.real()) << ", "
              << fmt(b.amplitude.imag()) << ") " << b.word.word_str() << "\n";
  }
  std::cout << "chi = " << noncon::rank_bound(psi) << " (bound "
            << std::max<std::size_t>(1, d.a_reps.size()) << ")\n";
  return kExitOk;
}

int cmd_reduce(const std::string& path, const std::string& kind_text,
               std::size_t target) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  noncon::NormalizedACSum acs = noncon::normalize(h);
  noncon::PlanKind kind = kind_text == "lcu" ? noncon::PlanKind::lcu
                                             : noncon::PlanKind::sequence;
  noncon::RotationPlan plan = kind == noncon::PlanKind::lcu
                                  ? noncon::build_lcu_plan(acs, target)
                                  : noncon::build_sequence_plan(acs, target);
  std::cout << "norm = " << fmt(acs.norm) << "\n";
  std::cout << "target = " << acs.words[target].word_str() << "\n";
  print_plan(plan);

  noncon::PauliSum scaled(h.num_qubits(), h.tolerance());
  for (std::size_t i = 0; i < acs.words.size(); ++i) {
    scaled.add(acs.words[i], acs.betas[i]);
  }
  noncon::PauliSum reduced = noncon::conjugate_by_plan(plan, scaled);
  std::cout << "reduced:\n";
  for (const auto& [w, c] : reduced.terms()) {
    std::cout << "  " << fmt(c * acs.norm) << " "
              << noncon::PauliOperator::make(h.num_qubits(), w).word_str()
              << "\n";
  }
  return kExitOk;
}

int cmd_bounds(std::size_t n) {
  auto rows = noncon::table_of_bounds(n);
  std::cout << "n = " << n << "\n";
  std::cout << "|G| |A| max_support vs_2^n\n";
  for (const auto& row : rows) {
    char cmp = row.flag == 'Y' ? '>' : row.flag == 'N' ? '<' : '=';
    std::cout << row.g_size << " " << row.a_size << " " << row.max_support
              << " " << cmp << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  noncon::PauliSum h = noncon::load_hamiltonian(path);
  auto results = noncon::run_battery(h);
  nlohmann::json doc;
  doc["status"] = noncon::battery_passed(results) ? "pass" : "fail";
  doc["checks"] = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json c;
    c["name"] = r.name;
    c["status"] = r.status;
    c["detail"] = r.detail;
    doc["checks"].push_back(c);
  }
  std::cout << doc.dump(2) << "\n";
  return noncon::battery_passed(results) ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Structure, spectra and eigenstates of noncontextual Pauli "
      "Hamiltonians"};
  app.require_subcommand(1);

  std::string path;
  std::string dot_path;
  std::size_t cap = 24;
  std::uint64_t seed = 1;
  std::size_t sweeps = 1000;
  std::size_t restarts = 8;
  bool anneal = false;
  std::uint64_t nu_mask = 0;
  std::string sign_text = "-";
  std::string completion_text = "z";
  std::string kind_text = "sequence";
  std::size_t target = 0;
  std::size_t bounds_n = 4;

  auto* check = app.add_subcommand(
      "check", "Classify a Hamiltonian (exit 0 noncontextual, 2 contextual)");
  check->add_option("file", path, "Hamiltonian file (text or JSON)")
      ->required();

  auto* decompose = app.add_subcommand(
      "decompose", "Print the symmetry generators, cliques and factorization");
  decompose->add_option("file", path)->required();

  auto* graph = app.add_subcommand(
      "graph", "Export the commutation structure as DOT");
  graph->add_option("file", path)->required();
  graph->add_option("--dot", dot_path, "output path (stdout when omitted)");

  auto* taper = app.add_subcommand(
      "taper", "Rotate the symmetry generators onto single-qubit Z words");
  taper->add_option("file", path)->required();

  auto* spectrum = app.add_subcommand(
      "spectrum", "Every eigenvalue with exact multiplicity");
  spectrum->add_option("file", path)->required();
  spectrum->add_option("--cap", cap, "sector-count cap (2^cap sectors)");
  spectrum->add_flag("--anneal", anneal,
                     "above the cap, report the annealed best sector only");
  spectrum->add_option("--seed", seed, "annealing seed");

  auto* ground = app.add_subcommand("ground", "Minimum eigenvalue and sector");
  ground->add_option("file", path)->required();
  ground->add_option("--cap", cap, "exhaustive-search cap");
  ground->add_flag("--anneal", anneal, "anneal above the cap (uncertified)");
  ground->add_option("--seed", seed, "annealing seed");
  ground->add_option("--sweeps", sweeps, "annealing sweeps per restart");
  ground->add_option("--restarts", restarts, "annealing restarts");

  auto* eigenstate = app.add_subcommand(
      "eigenstate", "Closed-form eigenvector of one sector eigenvalue");
  eigenstate->add_option("file", path)->required();
  eigenstate->add_option("--nu", nu_mask, "sector mask (bit i set: nu_i = -1)");
  eigenstate->add_option("--sign", sign_text, "+ or - branch")
      ->check(CLI::IsMember({"+", "-"}));
  eigenstate
      ->add_option("--completion", completion_text,
                   "anchor padding on free qubits")
      ->check(CLI::IsMember({"z", "x"}));

  auto* reduce = app.add_subcommand(
      "reduce", "Collapse an anticommuting sum onto one word");
  reduce->add_option("file", path)->required();
  reduce->add_option("--plan", kind_text, "sequence or lcu")
      ->check(CLI::IsMember({"sequence", "lcu"}));
  reduce->add_option("--target", target, "index of the target word");

  auto* bounds = app.add_subcommand(
      "bounds", "Support-size bounds 2^|G| (1 + |A|) against 2^n");
  bounds->add_option("--n", bounds_n, "qubit count")->required();

  auto* verify = app.add_subcommand(
      "verify", "Cross-check battery against dense oracles (exit 4 on fail)");
  verify->add_option("file", path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path);
    if (decompose->parsed()) return cmd_decompose(path);
    if (graph->parsed()) return cmd_graph(path, dot_path);
    if (taper->parsed()) return cmd_taper(path);
    if (spectrum->parsed()) return cmd_spectrum(path, cap, anneal, seed);
    if (ground->parsed()) {
      noncon::GroundOptions opts;
      opts.brute_cap = cap;
      opts.anneal = anneal;
      opts.seed = seed;
      opts.sweeps = sweeps;
      opts.restarts = restarts;
      return cmd_ground(path, opts);
    }
    if (eigenstate->parsed()) {
      return cmd_eigenstate(path, nu_mask, sign_text, completion_text);
    }
    if (reduce->parsed()) return cmd_reduce(path, kind_text, target);
    if (bounds->parsed()) return cmd_bounds(bounds_n);
    if (verify->parsed()) return cmd_verify(path);
  } catch (const noncon::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitParse;
  } catch (const noncon::ContextualSetError& err) {
    std::cerr << "contextual: " << err.what() << "\n";
    return kExitContextual;
  } catch (const noncon::CapExceededError& err) {
    std::cerr << "cap exceeded: " << err.what() << "\n";
    return kExitCap;
  } catch (const noncon::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
