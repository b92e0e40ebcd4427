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

#include <functional>
#include <vector>

namespace qchannel {

struct NelderMeadOptions {
  long max_evaluations = 20000;
  double initial_step = 0.5;
  /// Stop once the best value drops below this.
  double target = 0.0;
  /// Restart around the best vertex when the simplex has collapsed to this size.
  double collapse_size = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0;
  long evaluations = 0;
};

/**
 * Nelder-Mead minimization with dimension-dependent coefficients
 * (reflection 1, expansion 1 + 2/d, contraction 3/4 - 1/(2d), shrink 1 - 1/d).
 * A collapsed simplex is rebuilt around the best vertex until the evaluation
 * budget is spent.
 */
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             const NelderMeadOptions& opts);

}  // namespace qchannel
