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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qchannel/linalg.hpp"

namespace qchannel {

enum class OpType { RX, RY, RZ, U, X, CNOT, MEASURE, RESET, TRACE };

const char* op_name(OpType type);
bool is_unitary(OpType type);

/** The gate fires only if classical register `creg` holds `bit`. */
struct Condition {
  int creg = 0;
  int bit = 0;
  bool operator==(const Condition&) const = default;
};

/**
 * One instruction. Qubit roles: CNOT carries {control, target}, everything
 * else a single qubit. RX/RY/RZ carry one angle, U carries (alpha, beta,
 * gamma, delta) for e^{i alpha} Rz(beta) Ry(gamma) Rz(delta). MEASURE writes
 * `creg`. RESET returns a just-measured qubit to |0>: it applies X when the
 * most recent measurement of that qubit read 1.
 */
struct Gate {
  OpType type = OpType::X;
  std::vector<int> qubits;
  std::vector<double> params;
  int creg = -1;
  std::vector<Condition> condition;

  bool operator==(const Gate&) const = default;

  static Gate rx(int q, double theta) { return {OpType::RX, {q}, {theta}, -1, {}}; }
  static Gate ry(int q, double theta) { return {OpType::RY, {q}, {theta}, -1, {}}; }
  static Gate rz(int q, double theta) { return {OpType::RZ, {q}, {theta}, -1, {}}; }
  static Gate u(int q, double alpha, double beta, double gamma, double delta) {
    return {OpType::U, {q}, {alpha, beta, gamma, delta}, -1, {}};
  }
  static Gate x(int q) { return {OpType::X, {q}, {}, -1, {}}; }
  static Gate cnot(int control, int target) { return {OpType::CNOT, {control, target}, {}, -1, {}}; }
  static Gate measure(int q, int creg) { return {OpType::MEASURE, {q}, {}, creg, {}}; }
  static Gate reset(int q) { return {OpType::RESET, {q}, {}, -1, {}}; }
  static Gate trace(int q) { return {OpType::TRACE, {q}, {}, -1, {}}; }

  Gate when(std::vector<Condition> cond) && {
    condition = std::move(cond);
    return std::move(*this);
  }
};

/**
 * Gate list over `num_qubits` qubits and `num_cregs` classical bits. Qubit 0
 * is the most significant bit of every state index. Input qubits carry the
 * channel input (in list order, first = most significant); every other qubit
 * starts in |0>. Output qubits are kept; all remaining qubits are discarded at
 * the end.
 */
struct Circuit {
  int num_qubits = 0;
  int num_cregs = 0;
  std::vector<int> inputs;
  std::vector<int> outputs;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;

  Circuit& add(Gate g) {
    gates.push_back(std::move(g));
    return *this;
  }

  /// Structural checks; throws std::invalid_argument describing the first problem.
  void validate() const;
  int count(OpType type) const;
};

/**
 * Append the gates of @p block with qubit i relabelled to qubit_map[i] and
 * @p extra prepended to every condition. The block must not use classical
 * registers.
 */
void append_mapped(Circuit& dst, const Circuit& block, const std::vector<int>& qubit_map,
                   const std::vector<Condition>& extra = {});

CMat rx_matrix(double theta);
CMat ry_matrix(double theta);
CMat rz_matrix(double theta);
CMat u_matrix(double alpha, double beta, double gamma, double delta);
CMat x_matrix();
/// 2x2 matrix of a single-qubit unitary gate.
CMat gate_matrix(const Gate& g);

struct ZyzAngles {
  double alpha = 0, beta = 0, gamma = 0, delta = 0;
};

/**
 * U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta) with gamma in [0, pi] and
 * alpha, beta, delta in (-pi, pi]. For gamma in {0, pi} delta is 0 and the
 * whole z rotation sits in beta.
 */
ZyzAngles zyz_decompose(const CMat& u);

struct CnotCount {
  int worst_case = 0;
  bool per_branch_uniform = true;
};

/// CNOT count maximized over assignments of the registers that guard CNOTs.
CnotCount cnot_count(const Circuit& c);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format: QUBITS/CREGS/INPUTS/OUTPUTS headers, one instruction per line.
std::string serialize(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace qchannel
