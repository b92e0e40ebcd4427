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

#include <cstdint>
#include <string>
#include <vector>

#include "qchannel/channel.hpp"
#include "qchannel/circuit.hpp"

namespace qchannel {

enum class TemplateId { T11, T12, T21, T22 };

/**
 * Fixed measured-circuit topology with free angles. The skeleton holds zeros in
 * every angle slot; instantiate fills the slots in gate order (U takes four
 * angles, RX/RY/RZ one).
 *
 *   T11  1 -> 1, 2 qubits, 1 CNOT
 *   T12  1 -> 2, 2 qubits, 4 CNOTs (ancilla reset and reused)
 *   T21  2 -> 1, 3 qubits, 7 CNOTs
 *   T22  2 -> 2, 4 qubits, 13 CNOTs
 */
struct Template {
  TemplateId id = TemplateId::T11;
  std::string name;
  int m = 0, n = 0;
  int max_rank = 0;  ///< largest Kraus rank the topology is meant to cover
  int param_count = 0;
  int cnot_count = 0;
  Circuit skeleton;
};

Template make_template(TemplateId id);
/// "1to1", "1to2", "2to1" or "2to2".
Template template_by_name(const std::string& name);

Circuit instantiate(const Template& t, const std::vector<double>& params);

struct FitOptions {
  int starts = 20;
  long max_iters = 20000;  ///< objective evaluations per start
  double tol = 1e-6;
  std::uint64_t seed = 0;
};

struct FitResult {
  std::vector<double> params;
  double distance = 0;  ///< Choi Frobenius distance to the target
  bool success = false;
  int start_index = -1;  ///< start that produced params
  long evaluations = 0;
};

/**
 * Multi-start Nelder-Mead on the squared Choi distance. Starts run in index
 * order and stop at the first one that reaches @p tol; otherwise the best
 * start (lowest index on ties) is returned. The global phase angle of every U
 * slot is held at 0.
 *
 * Throws std::invalid_argument if the target's dimensions or Kraus rank do not
 * fit the template.
 */
FitResult fit(const Template& t, const KrausSet& target, const FitOptions& opts);

}  // namespace qchannel
