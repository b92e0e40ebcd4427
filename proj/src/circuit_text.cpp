// Copyright 2026 The qchannel Authors
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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "qchannel/circuit.hpp"

namespace qchannel {

namespace {

std::string format_angle(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string qubit_list(const std::vector<int>& qs) {
  std::string out;
  for (int q : qs) out += " q" + std::to_string(q);
  return out;
}

const std::map<std::string, OpType>& opcode_table() {
  static const std::map<std::string, OpType> table = {
      {"RX", OpType::RX},       {"RY", OpType::RY},         {"RZ", OpType::RZ},
      {"U", OpType::U},         {"X", OpType::X},           {"CNOT", OpType::CNOT},
      {"MEASURE", OpType::MEASURE}, {"RESET", OpType::RESET}, {"TRACE", OpType::TRACE}};
  return table;
}

// Parses "<prefix><non-negative integer>", e.g. q3 or c12.
std::optional<int> parse_index(const std::string& token, char prefix) {
  if (token.size() < 2 || token[0] != prefix) return std::nullopt;
  int value = 0;
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return std::nullopt;
    if (value > 100000000) return std::nullopt;
    value = value * 10 + (token[i] - '0');
  }
  return value;
}

std::optional<double> parse_angle(const std::string& token) {
  if (token.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || errno == ERANGE) return std::nullopt;
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "QUBITS " << c.num_qubits << "\n";
  out << "CREGS " << c.num_cregs << "\n";
  out << "INPUTS" << qubit_list(c.inputs) << "\n";
  out << "OUTPUTS" << qubit_list(c.outputs) << "\n";
  for (const Gate& g : c.gates) {
    if (!g.condition.empty()) {
      out << "IF ";
      for (std::size_t i = 0; i < g.condition.size(); ++i) {
        if (i) out << ",";
        out << "c" << g.condition[i].creg << "=" << g.condition[i].bit;
      }
      out << " ";
    }
    out << op_name(g.type) << qubit_list(g.qubits);
    if (g.type == OpType::MEASURE) out << " c" << g.creg;
    for (double p : g.params) out << " " << format_angle(p);
    out << "\n";
  }
  return out.str();
}

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  bool seen_qubits = false, seen_cregs = false, seen_inputs = false, seen_outputs = false;
  int outputs_line = 0;
  std::vector<int> gate_lines;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const auto fail = [&](const std::string& reason) { throw ParseError(line_no, reason); };
    const auto header_count = [&](bool& seen) {
      if (seen) fail("duplicate " + tok[0] + " header");
      seen = true;
      if (tok.size() != 2) fail(tok[0] + " expects one integer");
      const auto v = parse_index("n" + tok[1], 'n');
      if (!v) fail(tok[0] + " expects one integer");
      return *v;
    };
    const auto header_list = [&](bool& seen) {
      if (seen) fail("duplicate " + tok[0] + " header");
      seen = true;
      std::vector<int> qs;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto q = parse_index(tok[i], 'q');
        if (!q) fail("bad qubit '" + tok[i] + "'");
        qs.push_back(*q);
      }
      return qs;
    };

    if (tok[0] == "QUBITS") {
      c.num_qubits = header_count(seen_qubits);
      continue;
    }
    if (tok[0] == "CREGS") {
      c.num_cregs = header_count(seen_cregs);
      continue;
    }
    if (tok[0] == "INPUTS") {
      c.inputs = header_list(seen_inputs);
      continue;
    }
    if (tok[0] == "OUTPUTS") {
      c.outputs = header_list(seen_outputs);
      outputs_line = line_no;
      continue;
    }

    Gate g;
    std::size_t pos = 0;
    if (tok[0] == "IF") {
      if (tok.size() < 3) fail("IF needs a condition and an instruction");
      for (const std::string& part : split(tok[1], ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) fail("bad condition '" + part + "'");
        const auto reg = parse_index(part.substr(0, eq), 'c');
        const std::string bit = part.substr(eq + 1);
        if (!reg || (bit != "0" && bit != "1")) fail("bad condition '" + part + "'");
        g.condition.push_back({*reg, bit == "1" ? 1 : 0});
      }
      pos = 2;
    }
    const auto op = opcode_table().find(tok[pos]);
    if (op == opcode_table().end()) fail("unknown instruction '" + tok[pos] + "'");
    g.type = op->second;
    ++pos;

    const std::size_t n_qubits = g.type == OpType::CNOT ? 2 : 1;
    const std::size_t n_params = g.type == OpType::U ? 4
                                 : (g.type == OpType::RX || g.type == OpType::RY || g.type == OpType::RZ) ? 1
                                                                                                          : 0;
    const std::size_t n_regs = g.type == OpType::MEASURE ? 1 : 0;
    if (tok.size() - pos != n_qubits + n_params + n_regs) {
      fail(std::string("wrong operand count for ") + op_name(g.type));
    }
    for (std::size_t i = 0; i < n_qubits; ++i, ++pos) {
      const auto q = parse_index(tok[pos], 'q');
      if (!q) fail("bad qubit '" + tok[pos] + "'");
      g.qubits.push_back(*q);
    }
    if (n_regs) {
      const auto reg = parse_index(tok[pos], 'c');
      if (!reg) fail("bad register '" + tok[pos] + "'");
      g.creg = *reg;
      ++pos;
    }
    for (std::size_t i = 0; i < n_params; ++i, ++pos) {
      const auto a = parse_angle(tok[pos]);
      if (!a) fail("bad angle '" + tok[pos] + "'");
      g.params.push_back(*a);
    }
    c.gates.push_back(std::move(g));
    gate_lines.push_back(line_no);
  }
  if (!seen_qubits) throw ParseError(line_no, "missing QUBITS header");

  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    // Locate the first offending instruction by validating growing prefixes.
    Circuit prefix = c;
    prefix.outputs.clear();
    for (std::size_t len = 0; len <= c.gates.size(); ++len) {
      prefix.gates.assign(c.gates.begin(), c.gates.begin() + static_cast<long>(len));
      try {
        prefix.validate();
      } catch (const std::invalid_argument& inner) {
        throw ParseError(len == 0 ? 1 : gate_lines[len - 1], inner.what());
      }
    }
    throw ParseError(outputs_line ? outputs_line : line_no, e.what());
  }
  return c;
}

}  // namespace qchannel
