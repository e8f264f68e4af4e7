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

// Acceptance battery: ten end-to-end checks with fixed seeds, pinned
// tolerances and pinned runtime budgets.  Every check prints exactly one
// PASS/FAIL line; the process exit code is the number of failed checks.
//
// The checks cross-validate the symbolic machinery against independent
// dense linear algebra (Jacobi eigenvalues, explicit unitaries, literal
// commutation scans), so nothing here reuses the code path it is testing.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "noncon/clifford.hpp"
#include "noncon/eigenstate.hpp"
#include "noncon/pauli.hpp"
#include "noncon/spectrum.hpp"
#include "noncon/structure.hpp"
#include "noncon/unitary_partitioning.hpp"
#include "noncon/verification.hpp"
#include "test_support.hpp"

#ifndef NONCON_CLI_PATH
#define NONCON_CLI_PATH ""
#endif
#ifndef NONCON_WORK_DIR
#define NONCON_WORK_DIR "."
#endif

namespace {

using Clock = std::chrono::steady_clock;
using noncon::PauliOperator;
using noncon::PauliSum;
using noncon::PauliWord;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<PauliOperator> support_words(const PauliSum& h) {
  std::vector<PauliOperator> words;
  for (const auto& [op, coeff] : h.term_operators()) {
    (void)coeff;
    words.push_back(op);
  }
  return words;
}

double coeff_two_norm(const PauliSum& h) {
  double s = 0.0;
  for (const auto& [w, c] : h.terms()) {
    (void)w;
    s += c * c;
  }
  return std::sqrt(s);
}

std::vector<double> expand_spectrum(const noncon::SpectrumSummary& s) {
  std::vector<double> out;
  for (const auto& e : s.entries) {
    for (std::uint64_t i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  }
  return out;
}

std::vector<int> nu_from_mask(std::uint64_t mask, std::size_t g) {
  std::vector<int> nu(g, +1);
  for (std::size_t i = 0; i < g; ++i) {
    if (mask >> i & 1) nu[i] = -1;
  }
  return nu;
}

// ---------------------------------------------------------------------------
// 1. The pair of polynomial classifiers agrees with a literal transitivity
//    scan on 500 random word sets (n <= 5, at most 12 words), with the two
//    reference sets classified correctly.  Budget 10 s.
// ---------------------------------------------------------------------------
Outcome criterion_classifier() {
  auto start = Clock::now();
  testsup::Rng rng(101);
  const std::size_t kSets = 500;
  std::size_t disagreements = 0;
  std::size_t noncontextual_seen = 0;

  for (std::size_t trial = 0; trial < kSets; ++trial) {
    std::size_t n = 1 + rng() % 5;
    PauliSum h(n);
    for (;;) {
      int style = static_cast<int>(rng() % 6);
      if (style <= 1) {
        h = testsup::random_noncontextual_auto(rng, n, 3).h;
      } else if (style == 2 && n >= 2) {
        h = testsup::random_contextual(rng, n, rng() % 3);
      } else {
        std::uint64_t max_words = (std::uint64_t{1} << (2 * n)) - 1;
        std::size_t count = 1 + rng() % 12;
        if (count > max_words) count = static_cast<std::size_t>(max_words);
        h = testsup::to_sum(testsup::random_word_set(rng, n, count), n, rng);
      }
      if (!h.empty() && h.size() <= 12) break;
    }
    bool fast = noncon::is_noncontextual(h);
    bool oracle = noncon::brute_noncontextuality(support_words(h));
    if (fast != oracle) ++disagreements;
    if (oracle) ++noncontextual_seen;
  }

  PauliSum six(2);
  for (const char* w : {"XI", "YI", "ZI", "IX", "IY", "IZ"}) {
    six.add(PauliOperator::parse(w), 1.0);
  }
  PauliSum five(3);
  for (const char* w : {"ZXZ", "YIY", "YYI", "ZYX", "XIX"}) {
    five.add(PauliOperator::parse(w), 1.0);
  }
  bool examples_ok = !noncon::is_noncontextual(six) &&
                     noncon::brute_noncontextuality(support_words(five)) &&
                     noncon::is_noncontextual(five);

  double secs = seconds_since(start);
  Outcome out;
  out.pass = disagreements == 0 && examples_ok && secs < 10.0;
  std::ostringstream d;
  d << kSets << " sets, " << disagreements << " disagreements, "
    << noncontextual_seen << " noncontextual, reference sets "
    << (examples_ok ? "ok" : "WRONG") << ", " << std::fixed
    << std::setprecision(2) << secs << " s (limit 10)";
  out.detail = d.str();
  return out;
}

// ---------------------------------------------------------------------------
// 2. Closure counting: 200 random independent (G, A) pairs on n <= 6 give
//    |closure| = 2^|G| (1 + |A|) exactly, and the n = 4 bound table matches
//    a frozen copy row for row, with the overall maximum 2^(n+1) attained
//    at |G| = n - 1, |A| = 3.  Budget 5 s.
// ---------------------------------------------------------------------------
Outcome criterion_support_counts() {
  auto start = Clock::now();
  testsup::Rng rng(202);
  const std::size_t kPairs = 200;
  std::size_t bad_counts = 0;
  std::size_t bad_sizes = 0;

  for (std::size_t trial = 0; trial < kPairs; ++trial) {
    std::size_t n = 1 + rng() % 6;
    testsup::RandomInstance inst = testsup::random_noncontextual_auto(rng, n, 4);
    noncon::Decomposition d = noncon::extract_generators(inst.h);
    if (d.g_generators.size() != inst.g_count ||
        d.a_reps.size() != inst.a_count) {
      ++bad_sizes;
      continue;
    }
    std::uint64_t expect = (std::uint64_t{1} << d.g_generators.size()) *
                           (1 + d.a_reps.size());
    if (noncon::enumerate_closure(d).size() != expect) ++bad_counts;
  }

  // Frozen n = 4 table: (|G|, |A|, max support, flag vs 2^n).
  using Row = std::tuple<std::size_t, std::size_t, std::uint64_t, char>;
  const std::vector<Row> expected = {
      {4, 0, 16, '='}, {3, 0, 8, 'N'},  {3, 2, 24, 'Y'}, {3, 3, 32, 'Y'},
      {2, 0, 4, 'N'},  {2, 2, 12, 'N'}, {2, 3, 16, '='}, {2, 4, 20, 'Y'},
      {2, 5, 24, 'Y'}, {1, 0, 2, 'N'},  {1, 2, 6, 'N'},  {1, 3, 8, 'N'},
      {1, 4, 10, 'N'}, {1, 5, 12, 'N'}, {1, 6, 14, 'N'}, {1, 7, 16, '='}};

  std::vector<Row> table;
  std::uint64_t table_max = 0;
  std::size_t max_g = 0, max_a = 0;
  for (const auto& row : noncon::table_of_bounds(4)) {
    table.emplace_back(row.g_size, row.a_size, row.max_support, row.flag);
    if (row.max_support > table_max) {
      table_max = row.max_support;
      max_g = row.g_size;
      max_a = row.a_size;
    }
  }
  auto sorted = [](std::vector<Row> r) {
    std::sort(r.begin(), r.end());
    return r;
  };
  bool table_ok = sorted(table) == sorted(expected) && table_max == 32 &&
                  max_g == 3 && max_a == 3;

  // The CLI subcommand must print the same rows ('Y'/'N' render as '>'/'<').
  bool cli_ok = true;
  std::string cli = NONCON_CLI_PATH;
  if (!cli.empty()) {
    cli_ok = false;
    std::string path = std::string(NONCON_WORK_DIR) + "/acceptance_bounds.txt";
    std::string cmd = cli + " bounds --n 4 > " + path + " 2>/dev/null";
    if (std::system(cmd.c_str()) == 0) {
      std::ifstream in(path);
      std::vector<Row> rows;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0])))
          continue;
        std::istringstream ls(line);
        std::size_t g = 0, a = 0;
        std::uint64_t m = 0;
        char cmp = 0;
        if (ls >> g >> a >> m >> cmp) {
          char flag = cmp == '>' ? 'Y' : cmp == '<' ? 'N' : '=';
          rows.emplace_back(g, a, m, flag);
        }
      }
      cli_ok = sorted(rows) == sorted(expected);
    }
  }

  double secs = seconds_since(start);
  Outcome out;
  out.pass = bad_counts == 0 && bad_sizes == 0 && table_ok && cli_ok &&
             secs < 5.0;
  std::ostringstream d;
  d << kPairs << " pairs, " << bad_counts << " count mismatches, " << bad_sizes
    << " structure mismatches, table " << (table_ok ? "ok" : "WRONG")
    << ", cli " << (cli_ok ? "ok" : "WRONG") << ", " << std::fixed
    << std::setprecision(2) << secs << " s (limit 5)";
  out.detail = d.str();
  return out;
}

// ---------------------------------------------------------------------------
// 3. Spectrum of an anticommuting sum: 200 random sums on n <= 5 have dense
//    eigenvalues exactly {-|c|, +|c|}, each with multiplicity 2^(n-1),
//    within 1e-10.  Budget 30 s.
// ---------------------------------------------------------------------------
Outcome criterion_anticommuting_spectrum() {
  auto start = Clock::now();
  testsup::Rng rng(303);
  const std::size_t kSums = 200;
  std::size_t bad = 0;
  double worst = 0.0;

  for (std::size_t trial = 0; trial < kSums; ++trial) {
    std::size_t n = 1 + rng() % 5;
    std::size_t a = 1 + rng() % (2 * n + 1);
    PauliSum h = testsup::random_anticommuting_sum(rng, n, a);
    double nrm = coeff_two_norm(h);
    std::vector<double> ev = noncon::dense_eigenvalues(noncon::dense(h));
    std::size_t dim = std::size_t{1} << n;
    bool ok = ev.size() == dim;
    for (std::size_t i = 0; ok && i < dim; ++i) {
      double target = i < dim / 2 ? -nrm : nrm;
      double diff = std::abs(ev[i] - target);
      worst = std::max(worst, diff);
      if (diff > 1e-10) ok = false;
    }
    if (!ok) ++bad;
  }

  double secs = seconds_since(start);
  Outcome out;
  out.pass = bad == 0 && secs < 30.0;
  std::ostringstream d;
  d << kSums << " sums, " << bad << " bad spectra, worst deviation "
    << std::scientific << std::setprecision(2) << worst << ", " << std::fixed
    << std::setprecision(2) << secs << " s (limit 30)";
  out.detail = d.str();
  return out;
}

// ---------------------------------------------------------------------------
// 4. Reduction identity: both rotation plans collapse each normalized
//    anticommuting sum to its target word with coefficient 1 +- 1e-12, and
//    the symbolic conjugation matches the explicit dense unitary entrywise
//    for n <= 4.
// ---------------------------------------------------------------------------
Outcome criterion_reduction() {
  auto start = Clock::now();
  testsup::Rng rng(404);
  const std::size_t kSums = 200;
  std::size_t bad_coeff = 0;
  std::size_t bad_dense = 0;

  for (std::size_t trial = 0; trial < kSums; ++trial) {
    std::size_t n = 1 + rng() % 5;
    std::size_t a = 2 + rng() % (2 * n);
    PauliSum h = testsup::random_anticommuting_sum(rng, n, a);
    noncon::NormalizedACSum acs = noncon::normalize(h);
    std::size_t target = rng() % acs.words.size();

    PauliSum unit(n);
    for (std::size_t i = 0; i < acs.words.size(); ++i) {
      unit.add(acs.words[i], acs.betas[i]);
    }

    for (noncon::PlanKind kind :
         {noncon::PlanKind::sequence, noncon::PlanKind::lcu}) {
      noncon::RotationPlan plan = kind == noncon::PlanKind::sequence
                                      ? noncon::build_sequence_plan(acs, target)
                                      : noncon::build_lcu_plan(acs, target);
      PauliSum conj = noncon::conjugate_by_plan(plan, unit);
      double main_coeff = conj.coefficient(plan.target.word());
      double rest = 0.0;
      for (const auto& [w, c] : conj.terms()) {
        if (!(w == plan.target.word())) rest += std::abs(c);
      }
      if (std::abs(main_coeff - 1.0) > 1e-12 || rest > 1e-12) ++bad_coeff;

      if (n <= 4) {
        noncon::DenseOperator r = noncon::plan_unitary(plan);
        noncon::DenseOperator lhs = noncon::dense(conj);
        noncon::DenseOperator rhs = noncon::matmul(
            noncon::matmul(noncon::dagger(r), noncon::dense(unit)), r);
        if (noncon::max_abs_diff(lhs, rhs) > 1e-12) ++bad_dense;
      }
    }
  }

  double secs = seconds_since(start);
  Outcome out;
  out.pass = bad_coeff == 0 && bad_dense == 0;
  std::ostringstream d;
  d << kSums << " sums x 2 plans, " << bad_coeff << " coefficient failures, "
    << bad_dense << " dense mismatches, " << std::fixed << std::setprecision(2)
    << secs << " s";
  out.detail = d.str();
  return out;
}

// ---------------------------------------------------------------------------
// 5. Block structure: sector projectors annihilate cross blocks
//    symbolically and the diagonal blocks add back up to the input.
// ---------------------------------------------------------------------------
Outcome criterion_blocks() {
  auto start = Clock::now();
  testsup::Rng rng(505);
  const std::size_t kInstances = 60;
  std::size_t bad_cross = 0;
  std::size_t bad_sum = 0;

  for (std::size_t trial = 0; trial < kInstances; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::size_t g = 1 + rng() % std::min<std::size_t>(3, n);
    std::size_t a = 0, m = 0;
    for (;;) {
      const std::size_t choices[] = {0, 2, 3, 4, 5};
      a = choices[rng() % 5];
      m = a / 2;
      if (m + g <= n) break;
    }
    PauliSum h = testsup::random_noncontextual(rng, n, g, a, rng() % 3).h;
    noncon::Decomposition d = noncon::extract_generators(h);
    std::size_t g_size = d.g_generators.size();
    std::uint64_t sectors = std::uint64_t{1} << g_size;

    std::vector<PauliSum> projs;
    for (std::uint64_t mask = 0; mask < sectors; ++mask) {
      projs.push_back(noncon::projector(nu_from_mask(mask, g_size),
                                        d.g_generators, n));
    }

    PauliSum total(n);
    for (std::uint64_t m1 = 0; m1 < sectors; ++m1) {
      for (std::uint64_t m2 = 0; m2 < sectors; ++m2) {
        PauliSum block = noncon::symbolic_product(
            projs[m1], noncon::symbolic_product(h, projs[m2]));
        if (m1 == m2) {
          total += block;
        } else if (block.max_abs_coefficient() > 1e-12) {
          ++bad_cross;
        }
      }
    }
    PauliSum diff = h;
    diff *= -1.0;
    total += diff;
    if (total.max_abs_coefficient() > 1e-12) ++bad_sum;
  }

  double secs = seconds_since(start);
  Outcome out;
  out.pass = bad_cross == 0 && bad_sum == 0;
  std::ostringstream d;
  d << kInstances << " instances, " << bad_cross << " nonzero cross blocks, "
    << bad_sum << " reconstruction failures, " << std::fixed
    << std::setprecision(2) << secs << " s";
  out.detail = d.str();
  return out;
}

// Shared corpus results for checks 6 and 7.
struct SpectrumStats {
  std::size_t corpus = 0;
  std::size_t dense_checked = 0;
  std::size_t bad_values = 0;
  std::size_t bad_totals = 0;
  std::size_t bad_moments = 0;
  double worst_value = 0.0;
  double worst_moment = 0.0;
  std::size_t divisible_instances = 0;
  std::size_t divisibility_violations = 0;
  double secs = 0.0;
};

SpectrumStats run_spectrum_corpus() {
  auto start = Clock::now();
  testsup::Rng rng(606);
  SpectrumStats st;

  auto check_instance = [&](const PauliSum& h, bool with_dense) {
    noncon::Decomposition d = noncon::extract_generators(h);
    noncon::SpectrumSummary spec = noncon::full_spectrum(d);
    std::size_t n = h.num_qubits();
    std::uint64_t dim = std::uint64_t{1} << n;

    std::uint64_t total = 0;
    for (const auto& e : spec.entries) total += e.multiplicity;
    if (total != dim) ++st.bad_totals;

    if (with_dense) {
      ++st.dense_checked;
      std::vector<double> closed = expand_spectrum(spec);
      std::vector<double> ev = noncon::dense_eigenvalues(noncon::dense(h));
      bool ok = closed.size() == ev.size();
      for (std::size_t i = 0; ok && i < ev.size(); ++i) {
        double diff = std::abs(closed[i] - ev[i]);
        st.worst_value = std::max(st.worst_value, diff);
        if (diff > 1e-9) ok = false;
      }
      if (!ok) ++st.bad_values;
    }

    std::vector<double> sym = noncon::trace_moments(h, 4);
    bool mok = true;
    for (std::size_t k = 1; k <= 4; ++k) {
      double from_spec = 0.0;
      for (const auto& e : spec.entries) {
        from_spec += static_cast<double>(e.multiplicity) *
                     std::pow(e.value, static_cast<double>(k));
      }
      from_spec /= static_cast<double>(dim);
      double rel = std::abs(from_spec - sym[k - 1]) /
                   std::max(1.0, std::abs(sym[k - 1]));
      st.worst_moment = std::max(st.worst_moment, rel);
      if (rel > 1e-9) mok = false;
    }
    if (!mok) ++st.bad_moments;

    std::size_t a = d.a_reps.size();
    if (a >= 2) {
      ++st.divisible_instances;
      std::uint64_t divisor = std::uint64_t{1} << (a / 2 - 1);
      for (const auto& e : spec.entries) {
        if (e.multiplicity % divisor != 0) ++st.divisibility_violations;
      }
    }
    ++st.corpus;
  };

  for (std::size_t trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 6;
    check_instance(testsup::random_noncontextual_auto(rng, n, 4).h, true);
  }
  for (std::size_t trial = 0; trial < 40; ++trial) {
    std::size_t n = 7 + rng() % 4;
    check_instance(testsup::random_noncontextual_auto(rng, n, 4).h, false);
  }

  st.secs = seconds_since(start);
  return st;
}

Outcome criterion_spectrum(const SpectrumStats& st) {
  Outcome out;
  out.pass = st.bad_values == 0 && st.bad_totals == 0 && st.bad_moments == 0 &&
             st.secs < 180.0;
  std::ostringstream d;
  d << st.dense_checked << " dense-checked + "
    << (st.corpus - st.dense_checked) << " moment-only, " << st.bad_values
    << " spectrum / " << st.bad_totals << " total / " << st.bad_moments
    << " moment failures, worst " << std::scientific << std::setprecision(2)
    << st.worst_value << " / " << st.worst_moment << ", " << std::fixed
    << std::setprecision(2) << st.secs << " s (limit 180)";
  out.detail = d.str();
  return out;
}

Outcome criterion_divisibility(const SpectrumStats& st) {
  Outcome out;
  out.pass = st.divisibility_violations == 0 && st.divisible_instances > 0;
  std::ostringstream d;
  d << st.divisible_instances << " instances with |A| >= 2, "
    << st.divisibility_violations << " multiplicity violations";
  out.detail = d.str();
  return out;
}

// ---------------------------------------------------------------------------
// 8. Eigenstate residuals: every (sector, sign) eigenstate of 100 random
//    instances on n <= 8 densifies to a unit vector with residual
//    |H psi - E psi| <= 1e-10 and respects the branch-count bound.
//    Budget 120 s.
// ---------------------------------------------------------------------------
Outcome criterion_eigenstates() {
  auto start = Clock::now();
  testsup::Rng rng(808);
  const std::size_t kInstances = 100;
  std::size_t states = 0;
  std::size_t bad_norm = 0;
  std::size_t bad_residual = 0;
  std::size_t bad_rank = 0;
  std::size_t bad_bound = 0;
  double worst_residual = 0.0;

  for (std::size_t trial = 0; trial < kInstances; ++trial) {
    std::size_t n = 1 + rng() % 8;
    PauliSum h = testsup::random_noncontextual_auto(rng, n, 3).h;
    noncon::Decomposition d = noncon::extract_generators(h);
    std::size_t g = d.g_generators.size();
    std::size_t a = d.a_reps.size();
    if (a > 2 * (n - g) + 1) ++bad_bound;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
      for (int sign : {+1, -1}) {
        noncon::Completion comp = (rng() & 1) ? noncon::Completion::z
                                              : noncon::Completion::x;
        noncon::StabilizerSum psi =
            noncon::build_eigenstate(d, mask, sign, comp);
        noncon::StateVector v = noncon::dense_state(psi);
        ++states;
        if (std::abs(noncon::norm(v) - 1.0) > 1e-10) ++bad_norm;
        noncon::StateVector res =
            noncon::subtract(noncon::act(h, v), noncon::scale(v, psi.energy));
        double r = noncon::norm(res);
        worst_residual = std::max(worst_residual, r);
        if (r > 1e-10) ++bad_residual;
        std::size_t branches = psi.branches.size();
        if (a == 0 ? branches != 1 : branches > a) ++bad_rank;
      }
    }
  }

  double secs = seconds_since(start);
  Outcome out;
  out.pass = bad_norm == 0 && bad_residual == 0 && bad_rank == 0 &&
             bad_bound == 0 && secs < 120.0;
  std::ostringstream d;
  d << states << " states from " << kInstances << " instances, " << bad_norm
    << " norm / " << bad_residual << " residual / " << bad_rank << " rank / "
    << bad_bound << " size-bound failures, worst residual " << std::scientific
    << std::setprecision(2) << worst_residual << ", " << std::fixed
    << std::setprecision(2) << secs << " s (limit 120)";
  out.detail = d.str();
  return out;
}

// ---------------------------------------------------------------------------
// 9. Ground search: the exhaustive search equals the dense minimum on
//    n <= 6, and annealing with default settings finds the exact minimum on
//    at least 95% of larger instances with |G| <= 12.
// ---------------------------------------------------------------------------
Outcome criterion_ground() {
  auto start = Clock::now();
  testsup::Rng rng(909);
  std::size_t bad_exact = 0;
  const std::size_t kExact = 80;
  for (std::size_t trial = 0; trial < kExact; ++trial) {
    std::size_t n = 1 + rng() % 6;
    PauliSum h = testsup::random_noncontextual_auto(rng, n, 3).h;
    noncon::Decomposition d = noncon::extract_generators(h);
    noncon::GroundResult res = noncon::ground_search(d);
    std::vector<double> ev = noncon::dense_eigenvalues(noncon::dense(h));
    if (!res.certified || std::abs(res.energy - ev.front()) > 1e-10)
      ++bad_exact;
  }

  const std::size_t kAnneal = 120;
  std::size_t hits = 0;
  for (std::size_t trial = 0; trial < kAnneal; ++trial) {
    std::size_t n = 6 + rng() % 8;
    const std::size_t choices[] = {0, 2, 3, 4, 5};
    std::size_t a = choices[rng() % 5];
    std::size_t m = a / 2;
    std::size_t g = std::min<std::size_t>(12, n - m);
    PauliSum h = testsup::random_noncontextual(rng, n, g, a, rng() % 4).h;
    noncon::Decomposition d = noncon::extract_generators(h);

    noncon::GroundResult brute = noncon::ground_search(d);
    noncon::GroundOptions opts;
    opts.brute_cap = 0;
    opts.anneal = true;
    opts.seed = 7000 + trial;
    noncon::GroundResult annealed = noncon::ground_search(d, opts);
    if (brute.certified && !annealed.certified &&
        std::abs(annealed.energy - brute.energy) <= 1e-10) {
      ++hits;
    }
  }

  double secs = seconds_since(start);
  Outcome out;
  out.pass = bad_exact == 0 && hits * 100 >= kAnneal * 95;
  std::ostringstream d;
  d << kExact << " exact instances, " << bad_exact << " failures; annealing "
    << hits << "/" << kAnneal << " exact hits (need 95%), " << std::fixed
    << std::setprecision(2) << secs << " s";
  out.detail = d.str();
  return out;
}

// ---------------------------------------------------------------------------
// 10. Tapering: 200 random independent commuting sets map to single-qubit Z
//     words on distinct qubits, the symbolic conjugation matches the dense
//     unitary, and commutation relations of bystander words are preserved.
// ---------------------------------------------------------------------------
Outcome criterion_tapering() {
  auto start = Clock::now();
  testsup::Rng rng(1010);
  const std::size_t kSets = 200;
  std::size_t bad_images = 0;
  std::size_t bad_dense = 0;
  std::size_t bad_commutation = 0;

  for (std::size_t trial = 0; trial < kSets; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::size_t k = 1 + rng() % n;
    std::vector<PauliOperator> gens = testsup::random_commuting_set(rng, n, k);
    noncon::CliffordMap map = noncon::tapering_map(gens, n);

    std::set<std::size_t> qubits;
    bool images_ok = map.targets.size() == k;
    for (std::size_t i = 0; images_ok && i < k; ++i) {
      qubits.insert(map.targets[i].qubit);
      PauliOperator img = noncon::conjugate(map, gens[i]);
      PauliOperator want =
          PauliOperator::single(n, map.targets[i].qubit, 'Z');
      if (map.targets[i].sign < 0) want = want.negated();
      if (!(img == want)) images_ok = false;
    }
    if (images_ok && qubits.size() != k) images_ok = false;
    if (!images_ok) ++bad_images;

    noncon::DenseOperator c = noncon::map_unitary(map);
    std::vector<PauliOperator> bystanders =
        testsup::random_word_set(rng, n, std::min<std::size_t>(5, (1u << (2 * n)) - 1));
    std::vector<PauliOperator> all = gens;
    all.insert(all.end(), bystanders.begin(), bystanders.end());
    for (const PauliOperator& p : all) {
      noncon::DenseOperator lhs = noncon::dense(noncon::conjugate(map, p));
      noncon::DenseOperator rhs = noncon::matmul(
          noncon::matmul(noncon::dagger(c), noncon::dense(p)), c);
      if (noncon::max_abs_diff(lhs, rhs) > 1e-10) ++bad_dense;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        bool before = noncon::commutes(all[i], all[j]);
        bool after = noncon::commutes(noncon::conjugate(map, all[i]),
                                      noncon::conjugate(map, all[j]));
        if (before != after) ++bad_commutation;
      }
    }
  }

  double secs = seconds_since(start);
  Outcome out;
  out.pass = bad_images == 0 && bad_dense == 0 && bad_commutation == 0;
  std::ostringstream d;
  d << kSets << " sets, " << bad_images << " image / " << bad_dense
    << " dense / " << bad_commutation << " commutation failures, "
    << std::fixed << std::setprecision(2) << secs << " s";
  out.detail = d.str();
  return out;
}

void report(int index, const char* label, const Outcome& out, int& failures) {
  if (!out.pass) ++failures;
  std::printf("[%2d] %s %s: %s\n", index, out.pass ? "PASS" : "FAIL", label,
              out.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::printf("acceptance battery: fixed seeds, pinned tolerances\n");
  int failures = 0;

  report(1, "classifier vs transitivity oracle", criterion_classifier(),
         failures);
  report(2, "closure counts and bound table", criterion_support_counts(),
         failures);
  report(3, "anticommuting-sum spectrum", criterion_anticommuting_spectrum(),
         failures);
  report(4, "reduction to a single word", criterion_reduction(), failures);
  report(5, "sector block structure", criterion_blocks(), failures);

  SpectrumStats st = run_spectrum_corpus();
  report(6, "closed-form spectrum vs dense", criterion_spectrum(st), failures);
  report(7, "multiplicity divisibility", criterion_divisibility(st), failures);

  report(8, "eigenstate residuals and rank", criterion_eigenstates(),
         failures);
  report(9, "ground search exactness", criterion_ground(), failures);
  report(10, "tapering round trip", criterion_tapering(), failures);

  std::printf("criteria passed: %d/10\n", 10 - failures);
  return failures;
}
