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

#include <cstdio>
#include <string>

#include <doctest.h>

#include "noncon/errors.hpp"
#include "noncon/io.hpp"
#include "test_support.hpp"

using namespace noncon;

namespace {

std::string temp_path(const char* stem) {
  return std::string("io_test_") + stem + ".tmp";
}

struct FileGuard {
  std::string path;
  explicit FileGuard(std::string p) : path(std::move(p)) {}
  ~FileGuard() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("text files round trip through disk") {
  testsup::Rng rng(81);
  PauliSum h(3);
  for (int t = 0; t < 6; ++t) {
    h.add(testsup::random_word(rng, 3), testsup::random_coeff(rng));
  }
  FileGuard guard(temp_path("text"));
  save_hamiltonian(h, guard.path);
  PauliSum back = load_hamiltonian(guard.path);
  CHECK(back == h);
}

TEST_CASE("json files round trip through disk") {
  testsup::Rng rng(82);
  PauliSum h(4);
  for (int t = 0; t < 5; ++t) {
    h.add(testsup::random_word(rng, 4), testsup::random_coeff(rng));
  }
  FileGuard guard(temp_path("json"));
  save_hamiltonian(h, guard.path, true);
  std::string raw = read_file(guard.path);
  CHECK(raw.find("\"terms\"") != std::string::npos);
  PauliSum back = load_hamiltonian(guard.path);
  CHECK(back == h);
}

TEST_CASE("json parsing validates structure") {
  CHECK(parse_hamiltonian(
            "{\"n\": 2, \"terms\": [{\"pauli\": \"ZZ\", \"coeff\": 0.5}]}")
            .size() == 1);
  CHECK_THROWS_AS(parse_hamiltonian("{\"terms\": \"oops\"}"), ParseError);
  CHECK_THROWS_AS(parse_hamiltonian("{bad json"), ParseError);
  CHECK_THROWS_AS(
      parse_hamiltonian(
          "{\"n\": 1, \"terms\": [{\"pauli\": \"ZZ\", \"coeff\": 0.5}]}"),
      ParseError);
  CHECK_THROWS_AS(
      parse_hamiltonian("{\"n\": 1, \"terms\": [{\"pauli\": \"iZ\", "
                        "\"coeff\": 0.5}]}"),
      ParseError);
}

TEST_CASE("format sniffing keys on the first non-space character") {
  PauliSum text = parse_hamiltonian("  \n 0.5 ZZ\n");
  CHECK(text.size() == 1);
  PauliSum json = parse_hamiltonian(
      "  \n\t{\"n\": 1, \"terms\": [{\"pauli\": \"Z\", \"coeff\": 1.0}]}");
  CHECK(json.num_qubits() == 1);
}

TEST_CASE("missing files raise ParseError") {
  CHECK_THROWS_AS(load_hamiltonian("does_not_exist_anywhere.txt"), ParseError);
}

TEST_CASE("json output preserves canonical order and exact coefficients") {
  PauliSum h(2);
  h.add(PauliOperator::parse("XI"), 0.1);
  h.add(PauliOperator::parse("IZ"), -0.30000000000000004);
  std::string json = hamiltonian_to_json(h);
  std::size_t iz = json.find("IZ");
  std::size_t xi = json.find("XI");
  REQUIRE(iz != std::string::npos);
  REQUIRE(xi != std::string::npos);
  CHECK(iz < xi);
  PauliSum back = parse_hamiltonian(json);
  CHECK(back.coefficient(PauliOperator::parse("IZ").word()) ==
        -0.30000000000000004);
  CHECK(back == h);
}
