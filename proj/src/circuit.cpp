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

#include "qchannel/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qchannel {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t expected_qubits(OpType type) { return type == OpType::CNOT ? 2 : 1; }

std::size_t expected_params(OpType type) {
  switch (type) {
    case OpType::RX:
    case OpType::RY:
    case OpType::RZ:
      return 1;
    case OpType::U:
      return 4;
    default:
      return 0;
  }
}

bool has_duplicates(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

// Wraps a z-rotation angle into (-pi, pi]; each 2 pi shift flips the sign of
// the rotation, which is compensated in the global phase.
double wrap_rotation(double angle, double& alpha) {
  while (angle > kPi) {
    angle -= 2 * kPi;
    alpha += kPi;
  }
  while (angle <= -kPi) {
    angle += 2 * kPi;
    alpha += kPi;
  }
  return angle;
}

double wrap_phase(double alpha) {
  alpha = std::remainder(alpha, 2 * kPi);
  if (alpha <= -kPi) alpha += 2 * kPi;
  return alpha;
}

}  // namespace

const char* op_name(OpType type) {
  switch (type) {
    case OpType::RX: return "RX";
    case OpType::RY: return "RY";
    case OpType::RZ: return "RZ";
    case OpType::U: return "U";
    case OpType::X: return "X";
    case OpType::CNOT: return "CNOT";
    case OpType::MEASURE: return "MEASURE";
    case OpType::RESET: return "RESET";
    case OpType::TRACE: return "TRACE";
  }
  return "?";
}

bool is_unitary(OpType type) {
  return type != OpType::MEASURE && type != OpType::RESET && type != OpType::TRACE;
}

void Circuit::validate() const {
  if (num_qubits < 0 || num_cregs < 0) throw std::invalid_argument("negative circuit size");
  const auto check_list = [&](const std::vector<int>& list, const char* what) {
    for (int q : list) {
      if (q < 0 || q >= num_qubits) throw std::invalid_argument(std::string(what) + " qubit out of range");
    }
    if (has_duplicates(list)) throw std::invalid_argument(std::string("duplicate ") + what + " qubit");
  };
  check_list(inputs, "input");
  check_list(outputs, "output");

  std::vector<bool> written(num_cregs, false);
  std::vector<bool> traced(num_qubits, false);
  // Register of the measurement that last touched each qubit, or -1.
  std::vector<int> last_measure(num_qubits, -1);

  for (std::size_t idx = 0; idx < gates.size(); ++idx) {
    const Gate& g = gates[idx];
    const std::string where = "gate " + std::to_string(idx) + " (" + op_name(g.type) + "): ";
    if (g.qubits.size() != expected_qubits(g.type)) throw std::invalid_argument(where + "wrong number of qubits");
    if (g.params.size() != expected_params(g.type)) throw std::invalid_argument(where + "wrong number of angles");
    for (double p : g.params) {
      if (!std::isfinite(p)) throw std::invalid_argument(where + "non-finite angle");
    }
    for (int q : g.qubits) {
      if (q < 0 || q >= num_qubits) throw std::invalid_argument(where + "qubit out of range");
      if (traced[q]) throw std::invalid_argument(where + "qubit used after TRACE");
    }
    if (g.type == OpType::CNOT && g.qubits[0] == g.qubits[1]) {
      throw std::invalid_argument(where + "control equals target");
    }
    for (const Condition& c : g.condition) {
      if (c.creg < 0 || c.creg >= num_cregs) throw std::invalid_argument(where + "condition register out of range");
      if (c.bit != 0 && c.bit != 1) throw std::invalid_argument(where + "condition bit must be 0 or 1");
      if (!written[c.creg]) throw std::invalid_argument(where + "condition references unwritten register");
    }
    if (g.type != OpType::MEASURE && g.creg != -1) throw std::invalid_argument(where + "only MEASURE writes a register");

    const int q = g.qubits[0];
    switch (g.type) {
      case OpType::MEASURE:
        if (g.creg < 0 || g.creg >= num_cregs) throw std::invalid_argument(where + "register out of range");
        if (written[g.creg]) throw std::invalid_argument(where + "register written twice");
        written[g.creg] = true;
        last_measure[q] = g.creg;
        break;
      case OpType::RESET:
        if (last_measure[q] < 0) throw std::invalid_argument(where + "RESET must directly follow a MEASURE of the qubit");
        last_measure[q] = -1;
        break;
      case OpType::TRACE:
        traced[q] = true;
        break;
      default:
        for (int t : g.qubits) last_measure[t] = -1;
    }
  }
  for (int q : outputs) {
    if (traced[q]) throw std::invalid_argument("traced qubit declared as output");
  }
}

int Circuit::count(OpType type) const {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(), [&](const Gate& g) { return g.type == type; }));
}

void append_mapped(Circuit& dst, const Circuit& block, const std::vector<int>& qubit_map,
                   const std::vector<Condition>& extra) {
  if (static_cast<int>(qubit_map.size()) != block.num_qubits) {
    throw std::invalid_argument("append_mapped: qubit map size mismatch");
  }
  for (const Gate& g : block.gates) {
    if (g.type == OpType::MEASURE || !g.condition.empty()) {
      throw std::invalid_argument("append_mapped: block must not use classical registers");
    }
    Gate copy = g;
    for (int& q : copy.qubits) q = qubit_map.at(q);
    copy.condition = extra;
    dst.gates.push_back(std::move(copy));
  }
}

CMat rx_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CMat m(2, 2);
  m << c, Complex(0, -s), Complex(0, -s), c;
  return m;
}

CMat ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CMat m(2, 2);
  m << c, -s, s, c;
  return m;
}

CMat rz_matrix(double theta) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

CMat u_matrix(double alpha, double beta, double gamma, double delta) {
  return std::polar(1.0, alpha) * rz_matrix(beta) * ry_matrix(gamma) * rz_matrix(delta);
}

CMat x_matrix() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMat gate_matrix(const Gate& g) {
  switch (g.type) {
    case OpType::RX: return rx_matrix(g.params.at(0));
    case OpType::RY: return ry_matrix(g.params.at(0));
    case OpType::RZ: return rz_matrix(g.params.at(0));
    case OpType::U: return u_matrix(g.params.at(0), g.params.at(1), g.params.at(2), g.params.at(3));
    case OpType::X: return x_matrix();
    default: throw std::invalid_argument(std::string("no 2x2 matrix for ") + op_name(g.type));
  }
}

ZyzAngles zyz_decompose(const CMat& u) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("zyz_decompose: expected a 2x2 matrix");
  if ((u.adjoint() * u - CMat::Identity(2, 2)).norm() > 1e-10) {
    throw std::invalid_argument("zyz_decompose: matrix is not unitary");
  }
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  ZyzAngles a;
  a.alpha = std::arg(det) / 2;
  const CMat w = u * std::polar(1.0, -a.alpha);  // special unitary

  const double lower = std::abs(w(1, 0));
  const double upper = std::abs(w(0, 0));
  if (lower < 1e-12) {
    a.gamma = 0;
    a.beta = 2 * std::arg(w(1, 1));
  } else if (upper < 1e-12) {
    a.gamma = kPi;
    a.beta = 2 * std::arg(w(1, 0));
  } else {
    a.gamma = 2 * std::atan2(lower, upper);
    a.beta = std::arg(w(1, 1)) + std::arg(w(1, 0));
    a.delta = std::arg(w(1, 1)) - std::arg(w(1, 0));
  }
  a.beta = wrap_rotation(a.beta, a.alpha);
  a.delta = wrap_rotation(a.delta, a.alpha);
  a.alpha = wrap_phase(a.alpha);
  return a;
}

CnotCount cnot_count(const Circuit& c) {
  std::set<int> regs;
  for (const Gate& g : c.gates) {
    if (g.type != OpType::CNOT) continue;
    for (const Condition& cond : g.condition) regs.insert(cond.creg);
  }
  if (regs.size() > 24) throw std::invalid_argument("cnot_count: too many guarding registers");
  const std::vector<int> reg_list(regs.begin(), regs.end());

  CnotCount result{0, true};
  int first = -1;
  for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << reg_list.size()); ++assignment) {
    const auto value_of = [&](int creg) {
      const auto pos = std::lower_bound(reg_list.begin(), reg_list.end(), creg) - reg_list.begin();
      return static_cast<int>((assignment >> pos) & 1);
    };
    int count = 0;
    for (const Gate& g : c.gates) {
      if (g.type != OpType::CNOT) continue;
      const bool fires = std::all_of(g.condition.begin(), g.condition.end(),
                                     [&](const Condition& cond) { return value_of(cond.creg) == cond.bit; });
      if (fires) ++count;
    }
    if (first < 0) first = count;
    if (count != first) result.per_branch_uniform = false;
    result.worst_case = std::max(result.worst_case, count);
  }
  return result;
}

}  // namespace qchannel
