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

#include "noncon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace noncon {

namespace {

PauliSum parse_json(const std::string& content) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("bad JSON: ") + err.what());
  }
  try {
    std::size_t n = doc.at("n").get<std::size_t>();
    PauliSum sum(n);
    for (const auto& term : doc.at("terms")) {
      PauliOperator op =
          PauliOperator::parse(term.at("pauli").get<std::string>());
      if (op.num_qubits() != n) {
        throw ParseError("term width differs from declared n");
      }
      if (!op.is_hermitian()) {
        throw ParseError("imaginary phase prefix is not allowed here");
      }
      sum.add(op, term.at("coeff").get<double>());
    }
    return sum;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("bad JSON Hamiltonian: ") + err.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

PauliSum parse_hamiltonian(const std::string& content) {
  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    return parse_json(content);
  }
  return PauliSum::parse_text(content);
}

PauliSum load_hamiltonian(const std::string& path) {
  return parse_hamiltonian(read_file(path));
}

std::string hamiltonian_to_text(const PauliSum& h) { return h.to_text(); }

std::string hamiltonian_to_json(const PauliSum& h) {
  nlohmann::json doc;
  doc["n"] = h.num_qubits();
  doc["terms"] = nlohmann::json::array();
  for (const auto& [w, c] : h.terms()) {
    nlohmann::json term;
    term["pauli"] = PauliOperator::make(h.num_qubits(), w).word_str();
    term["coeff"] = c;
    doc["terms"].push_back(term);
  }
  return doc.dump(2) + "\n";
}

void save_hamiltonian(const PauliSum& h, const std::string& path,
                      bool as_json) {
  write_file(path, as_json ? hamiltonian_to_json(h) : hamiltonian_to_text(h));
}

}  // namespace noncon
