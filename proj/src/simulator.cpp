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

#include "qchannel/simulator.hpp"

#include <stdexcept>

namespace qchannel {

namespace {

using Index = Eigen::Index;

class BranchRunner {
 public:
  explicit BranchRunner(const Circuit& c) : c_(c), p_(c.num_qubits) {}

  std::vector<BranchOperator> run() {
    std::vector<int> regs(c_.num_cregs, -1);
    std::vector<int> last(p_, -1);
    step(0, initial_state(), regs, last);
    return std::move(out_);
  }

  CMat initial_state() const {
    const Index m = static_cast<Index>(c_.inputs.size());
    CMat state = CMat::Zero(Index{1} << p_, Index{1} << m);
    for (Index j = 0; j < state.cols(); ++j) {
      Index row = 0;
      for (Index i = 0; i < m; ++i) {
        if ((j >> (m - 1 - i)) & 1) row |= Index{1} << (p_ - 1 - c_.inputs[i]);
      }
      state(row, j) = 1.0;
    }
    return state;
  }

  void apply_single(CMat& s, int q, const CMat& u) const {
    const Index bit = Index{1} << (p_ - 1 - q);
    for (Index i0 = 0; i0 < s.rows(); ++i0) {
      if (i0 & bit) continue;
      const Index i1 = i0 | bit;
      for (Index col = 0; col < s.cols(); ++col) {
        const Complex x0 = s(i0, col), x1 = s(i1, col);
        s(i0, col) = u(0, 0) * x0 + u(0, 1) * x1;
        s(i1, col) = u(1, 0) * x0 + u(1, 1) * x1;
      }
    }
  }

  void apply_cnot(CMat& s, int control, int target) const {
    const Index cb = Index{1} << (p_ - 1 - control);
    const Index tb = Index{1} << (p_ - 1 - target);
    for (Index i = 0; i < s.rows(); ++i) {
      if ((i & cb) && !(i & tb)) s.row(i).swap(s.row(i | tb));
    }
  }

  void apply_unitary(CMat& s, const Gate& g) const {
    if (g.type == OpType::CNOT) {
      apply_cnot(s, g.qubits[0], g.qubits[1]);
    } else {
      apply_single(s, g.qubits[0], gate_matrix(g));
    }
  }

 private:
  bool fires(const Gate& g, const std::vector<int>& regs) const {
    for (const Condition& cond : g.condition) {
      if (cond.creg < 0 || cond.creg >= c_.num_cregs || regs[cond.creg] < 0) {
        throw std::invalid_argument("condition references unwritten register");
      }
      if (regs[cond.creg] != cond.bit) return false;
    }
    return true;
  }

  void step(std::size_t idx, CMat state, std::vector<int>& regs, std::vector<int>& last) {
    for (; idx < c_.gates.size(); ++idx) {
      const Gate& g = c_.gates[idx];
      if (!fires(g, regs)) continue;
      const int q = g.qubits[0];
      switch (g.type) {
        case OpType::TRACE:
          break;
        case OpType::RESET:
          if (last[q] == 1) apply_single(state, q, x_matrix());
          last[q] = -1;
          break;
        case OpType::MEASURE: {
          const Index bit = Index{1} << (p_ - 1 - q);
          for (int b = 0; b < 2; ++b) {
            CMat projected = state;
            for (Index i = 0; i < projected.rows(); ++i) {
              if (static_cast<bool>(i & bit) != static_cast<bool>(b)) projected.row(i).setZero();
            }
            const int saved_last = last[q];
            regs[g.creg] = b;
            last[q] = b;
            step(idx + 1, std::move(projected), regs, last);
            regs[g.creg] = -1;
            last[q] = saved_last;
          }
          return;
        }
        default:
          apply_unitary(state, g);
          last[q] = -1;
          if (g.type == OpType::CNOT) last[g.qubits[1]] = -1;
      }
    }
    std::string record;
    for (int r : regs) record += r < 0 ? '-' : static_cast<char>('0' + r);
    out_.push_back({std::move(record), std::move(state)});
  }

  const Circuit& c_;
  int p_;
  std::vector<BranchOperator> out_;
};

}  // namespace

CMat simulate_unitary(const Circuit& c) {
  c.validate();
  BranchRunner runner(c);
  CMat state = runner.initial_state();
  for (const Gate& g : c.gates) {
    if (!is_unitary(g.type) || !g.condition.empty()) {
      throw std::invalid_argument("simulate_unitary: circuit has non-unitary or conditioned instructions");
    }
    runner.apply_unitary(state, g);
  }
  return state;
}

std::vector<BranchOperator> simulate_branches(const Circuit& c) {
  c.validate();
  return BranchRunner(c).run();
}

KrausSet circuit_to_kraus(const Circuit& c) {
  const auto branches = simulate_branches(c);
  const int p = c.num_qubits;
  std::vector<bool> is_output(p, false);
  for (int q : c.outputs) is_output[q] = true;
  std::vector<int> env;
  for (int q = 0; q < p; ++q) {
    if (!is_output[q]) env.push_back(q);
  }
  const Index n_out = static_cast<Index>(c.outputs.size());
  const Index n_env = static_cast<Index>(env.size());

  KrausSet ks{static_cast<int>(c.inputs.size()), static_cast<int>(n_out), {}};
  for (const auto& branch : branches) {
    for (Index e = 0; e < (Index{1} << n_env); ++e) {
      Index base = 0;
      for (Index i = 0; i < n_env; ++i) {
        if ((e >> (n_env - 1 - i)) & 1) base |= Index{1} << (p - 1 - env[i]);
      }
      CMat op(Index{1} << n_out, branch.op.cols());
      for (Index r = 0; r < op.rows(); ++r) {
        Index row = base;
        for (Index i = 0; i < n_out; ++i) {
          if ((r >> (n_out - 1 - i)) & 1) row |= Index{1} << (p - 1 - c.outputs[i]);
        }
        op.row(r) = branch.op.row(row);
      }
      if (op.squaredNorm() >= 1e-28) ks.ops.push_back(std::move(op));
    }
  }
  return ks;
}

std::vector<double> outcome_distribution(const Circuit& c, const CVec& psi) {
  if (psi.size() != (Index{1} << c.inputs.size())) {
    throw std::invalid_argument("outcome_distribution: input state has the wrong dimension");
  }
  std::vector<double> probs;
  for (const auto& branch : simulate_branches(c)) probs.push_back((branch.op * psi).squaredNorm());
  return probs;
}

}  // namespace qchannel
