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

#include <string>

#include "noncon/pauli.hpp"

namespace noncon {

/**
 * Reads a Hamiltonian from disk. Files whose first non-space character is
 * '{' are parsed as JSON ({"n": ..., "terms": [{"pauli": ..., "coeff":
 * ...}]}); everything else is the line-oriented text form. ParseError on
 * malformed input or unreadable paths.
 */
PauliSum load_hamiltonian(const std::string& path);

/** Parses either format from a string; sniffs JSON the same way. */
PauliSum parse_hamiltonian(const std::string& content);

/** Canonical text form of the sum. */
std::string hamiltonian_to_text(const PauliSum& h);

/** JSON form with terms in canonical order. */
std::string hamiltonian_to_json(const PauliSum& h);

void save_hamiltonian(const PauliSum& h, const std::string& path,
                      bool as_json = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace noncon
