// Copyright 2026 The stabinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stabinv/invariants.hpp"
#include "stabinv/stabilizer.hpp"

// File formats: code files, tree specs, fingerprint JSON.
namespace stabinv::io {

using Json = nlohmann::ordered_json;

enum class CodeFormat { kAuto, kBits, kPauli };

/// Code text. Bits: header "n k" then 2n rows of k bits (z rows first).
/// Pauli: header "pauli" or "pauli n", then one Pauli string per generator.
/// '#' starts a comment. kAuto picks Pauli when the header says "pauli".
/// Parse errors carry 1-based line numbers. The code is not validated.
stabilizer::GeneratorMatrix parse_code(std::string_view text, CodeFormat format = CodeFormat::kAuto);
stabilizer::GeneratorMatrix read_code_file(const std::filesystem::path& path, CodeFormat format = CodeFormat::kAuto);
void write_code(std::ostream& out, const stabilizer::GeneratorMatrix& s);

std::string read_file(const std::filesystem::path& path);

/// A tree spec is one of
///   "all:r"       every tuple of degree r (enumerate_trees(r) on each qubit)
///   "@file"       a tree file, one tree per qubit (one line: used on every qubit)
///   "t1;t2;..."   explicit serializations, one per qubit (one tree: every qubit)
struct TreeSpec {
  std::optional<std::size_t> all_degree;
  std::optional<invariants::TreeTuple> tuple;
};
TreeSpec parse_tree_spec(std::string_view spec, std::size_t n);

/// 1-based comma-separated qubit list, e.g. "1,3".
stabilizer::QubitSet parse_omega(std::string_view text, std::size_t n);

Json to_json(const invariants::InvariantRecord& record);
Json to_json(const invariants::Fingerprint& fp);
invariants::Fingerprint fingerprint_from_json(const Json& j);
/// Generator matrix rows as bit strings.
Json code_to_json(const stabilizer::GeneratorMatrix& s);

}  // namespace stabinv::io
