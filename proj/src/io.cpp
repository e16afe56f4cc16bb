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

#include "stabinv/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "stabinv/errors.hpp"

namespace stabinv::io {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, std::string(line)});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t parse_size(const std::string& s, std::size_t line, const char* what) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + s + "'", line);
  }
  return v;
}

stabilizer::GeneratorMatrix parse_bits(const std::vector<Line>& lines) {
  const std::vector<std::string> header = words(lines.front().text);
  if (header.size() != 2) throw ParseError("header must be 'n k'", lines.front().number);
  const std::size_t n = parse_size(header[0], lines.front().number, "n");
  const std::size_t k = parse_size(header[1], lines.front().number, "k");
  const std::size_t last = lines.back().number;
  // With k = 0 the 2n rows are empty lines.
  if (k == 0 && lines.size() == 1) return stabilizer::GeneratorMatrix(gf2::GF2Matrix(2 * n, 0));
  if (lines.size() - 1 < 2 * n) {
    throw ParseError("expected " + std::to_string(2 * n) + " rows, found " + std::to_string(lines.size() - 1),
                     last + 1);
  }
  if (lines.size() - 1 > 2 * n) throw ParseError("unexpected extra row", lines[2 * n + 1].number);
  gf2::GF2Matrix m(2 * n, k);
  for (std::size_t r = 0; r < 2 * n; ++r) {
    std::string row;
    for (char c : lines[r + 1].text) {
      if (c != ' ' && c != '\t') row.push_back(c);
    }
    if (row.size() != k) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " bits, expected " +
                           std::to_string(k),
                       lines[r + 1].number);
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (row[c] != '0' && row[c] != '1') throw ParseError("bits must be 0 or 1", lines[r + 1].number);
      m.set(r, c, row[c] == '1');
    }
  }
  return stabilizer::GeneratorMatrix(std::move(m));
}

stabilizer::GeneratorMatrix parse_pauli(const std::vector<Line>& lines, bool has_header) {
  std::optional<std::size_t> n;
  std::size_t first = 0;
  if (has_header) {
    const auto header = words(lines.front().text);
    if (header.size() > 2) throw ParseError("header must be 'pauli' or 'pauli n'", lines.front().number);
    if (header.size() == 2) n = parse_size(header[1], lines.front().number, "n");
    first = 1;
  }
  std::vector<std::string> gens;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto w = words(lines[i].text);
    if (w.size() != 1) throw ParseError("one Pauli string per line", lines[i].number);
    gens.push_back(w[0]);
    std::string_view body = w[0];
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    if (!n) n = body.size();
    if (body.size() != *n) {
      throw ParseError("Pauli string has length " + std::to_string(body.size()) + ", expected " +
                           std::to_string(*n),
                       lines[i].number);
    }
    for (char c : body) {
      if (c != 'I' && c != '_' && c != 'X' && c != 'Y' && c != 'Z') {
        throw ParseError(std::string("unknown Pauli letter '") + c + "'", lines[i].number);
      }
    }
  }
  if (!n) throw ParseError("empty Pauli code needs 'pauli n'", lines.empty() ? 1 : lines.front().number);
  return stabilizer::from_pauli_strings(gens, *n);
}

}  // namespace

stabilizer::GeneratorMatrix parse_code(std::string_view text, CodeFormat format) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty code file", 1);
  const auto head = words(lines.front().text);
  const bool pauli_header = !head.empty() && head.front() == "pauli";
  switch (format) {
    case CodeFormat::kBits:
      if (pauli_header) throw ParseError("bits format expected, found a pauli header", lines.front().number);
      return parse_bits(lines);
    case CodeFormat::kPauli:
      return parse_pauli(lines, pauli_header);
    case CodeFormat::kAuto:
      break;
  }
  return pauli_header ? parse_pauli(lines, true) : parse_bits(lines);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

stabilizer::GeneratorMatrix read_code_file(const std::filesystem::path& path, CodeFormat format) {
  return parse_code(read_file(path), format);
}

void write_code(std::ostream& out, const stabilizer::GeneratorMatrix& s) {
  out << s.n() << ' ' << s.k() << '\n';
  for (std::size_t r = 0; r < 2 * s.n(); ++r) {
    for (std::size_t c = 0; c < s.k(); ++c) out << (s.matrix().get(r, c) ? '1' : '0');
    out << '\n';
  }
}

TreeSpec parse_tree_spec(std::string_view spec, std::size_t n) {
  spec = trim(spec);
  TreeSpec out;
  if (spec.starts_with("all:")) {
    const std::string deg(spec.substr(4));
    out.all_degree = parse_size(deg, 0, "degree after 'all:'");
    if (*out.all_degree < 1) throw ParseError("degree must be at least 1", 0);
    return out;
  }
  std::vector<trees::BinaryTree> list;
  if (spec.starts_with("@")) {
    list = trees::read_tree_file(read_file(std::string(spec.substr(1))));
  } else {
    try {
      list = invariants::TreeTuple::parse(spec).trees();
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  if (list.size() == 1 && n > 1) list.assign(n, list.front());
  if (list.size() != n) {
    throw DimensionError("tree spec names " + std::to_string(list.size()) + " trees for a code on " +
                         std::to_string(n) + " qubits");
  }
  try {
    out.tuple = invariants::TreeTuple(std::move(list));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  return out;
}

stabilizer::QubitSet parse_omega(std::string_view text, std::size_t n) {
  stabilizer::QubitSet out;
  text = trim(text);
  std::size_t pos = 0;
  while (!text.empty() && pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item(trim(text.substr(pos, end - pos)));
    const std::size_t q = parse_size(item, 0, "qubit number");
    if (q < 1 || q > n) throw DimensionError("qubit " + item + " outside 1.." + std::to_string(n));
    out.push_back(q - 1);
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json to_json(const invariants::InvariantRecord& record) {
  return Json{{"r", record.r}, {"tuple", record.tuple}, {"dim", record.dim}};
}

Json to_json(const invariants::Fingerprint& fp) {
  Json records = Json::array();
  for (const auto& rec : fp.records) records.push_back(to_json(rec));
  return Json{{"n", fp.n}, {"r_max", fp.r_max}, {"records", records}};
}

invariants::Fingerprint fingerprint_from_json(const Json& j) {
  invariants::Fingerprint fp;
  fp.n = j.at("n").get<std::size_t>();
  fp.r_max = j.at("r_max").get<std::size_t>();
  for (const auto& rec : j.at("records")) {
    fp.records.push_back(
        {rec.at("r").get<std::size_t>(), rec.at("tuple").get<std::string>(), rec.at("dim").get<std::size_t>()});
  }
  return fp;
}

Json code_to_json(const stabilizer::GeneratorMatrix& s) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < 2 * s.n(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < s.k(); ++c) row.push_back(s.matrix().get(r, c) ? '1' : '0');
    rows.push_back(row);
  }
  return Json{{"n", s.n()}, {"k", s.k()}, {"rows", rows}};
}

}  // namespace stabinv::io
