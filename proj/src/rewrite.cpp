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

#include "qchannel/rewrite.hpp"

#include <optional>

namespace qchannel {

namespace {

bool touches(const Gate& g, int q) {
  for (int t : g.qubits) {
    if (t == q) return true;
  }
  return false;
}

// Finds one rewritable CNOT; returns (cnot index, measure index).
std::optional<std::pair<std::size_t, std::size_t>> find_pattern(const Circuit& c) {
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (c.gates[i].type != OpType::CNOT) continue;
    const int control = c.gates[i].qubits[0];
    for (std::size_t j = i + 1; j < c.gates.size(); ++j) {
      const Gate& g = c.gates[j];
      if (!touches(g, control)) continue;
      if (g.type == OpType::MEASURE && g.condition.empty()) return std::make_pair(i, j);
      break;
    }
  }
  return std::nullopt;
}

}  // namespace

Circuit drop_dead_unitaries(const Circuit& c) {
  c.validate();
  std::vector<bool> read(c.num_cregs, false);
  for (const Gate& g : c.gates) {
    for (const Condition& cond : g.condition) read[cond.creg] = true;
  }
  std::vector<bool> dead(c.num_qubits, true);
  for (int q : c.outputs) dead[q] = false;

  std::vector<bool> keep(c.gates.size(), true);
  for (std::size_t idx = c.gates.size(); idx-- > 0;) {
    const Gate& g = c.gates[idx];
    const int q = g.qubits[0];
    switch (g.type) {
      case OpType::TRACE:
        dead[q] = true;
        break;
      case OpType::MEASURE:
        if (read[g.creg]) dead[q] = false;
        break;
      case OpType::RESET:
        // The reset consumes the preceding outcome.
        dead[q] = false;
        break;
      case OpType::CNOT: {
        const int t = g.qubits[1];
        if (dead[q] && dead[t]) {
          keep[idx] = false;
        } else {
          dead[q] = dead[t] = false;
        }
        break;
      }
      default:
        if (dead[q]) keep[idx] = false;
    }
  }
  Circuit out = c;
  out.gates.clear();
  for (std::size_t idx = 0; idx < c.gates.size(); ++idx) {
    if (keep[idx]) out.gates.push_back(c.gates[idx]);
  }
  return out;
}

Circuit classicalize_controls(const Circuit& c) {
  c.validate();
  Circuit out = c;
  while (const auto hit = find_pattern(out)) {
    const auto [i, j] = *hit;
    const Gate measure = out.gates[j];
    Gate flip = Gate::x(out.gates[i].qubits[1]);
    flip.condition = out.gates[i].condition;
    flip.condition.push_back({measure.creg, 1});
    out.gates.erase(out.gates.begin() + static_cast<long>(j));
    out.gates[i] = std::move(flip);
    out.gates.insert(out.gates.begin() + static_cast<long>(i), measure);
  }
  return out;
}

Circuit apply_rewrites(const Circuit& c) {
  Circuit cur = c;
  for (;;) {
    Circuit next = drop_dead_unitaries(classicalize_controls(cur));
    if (next == cur) return next;
    cur = std::move(next);
  }
}

}  // namespace qchannel
