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

#include "qchannel/isometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qchannel {

namespace {

constexpr double kTiny = 1e-12;

// One multiplexed rotation of the reduction G (not of the emitted circuit).
struct Step {
  RotationAxis axis;
  std::vector<int> controls;
  int target;
  std::vector<double> angles;
};

// Shape of the ladder step for column k on qubit t of an n-qubit register.
// Returns false if the step is structurally the identity. `full` selects the
// control set: all other qubits instead of just the more significant ones.
bool step_shape(long k, int t, int n, bool& full) {
  const int b = n - 1 - t;
  const long k_high = k >> (b + 1);
  const int k_b = static_cast<int>((k >> b) & 1);
  const long k_low = k & ((1L << b) - 1);
  if (k_high == (1L << t) - 1 && k_b == 1) return false;
  full = k_b == 0 && k_low != 0;
  return true;
}

std::vector<int> step_controls(int t, int n, bool full) {
  std::vector<int> controls;
  for (int q = 0; q < n; ++q) {
    if (q == t) continue;
    if (q < t || full) controls.push_back(q);
  }
  return controls;
}

CMat axis_matrix(RotationAxis axis, double theta) {
  return axis == RotationAxis::Y ? ry_matrix(theta) : rz_matrix(theta);
}

// Left-multiplies w by the block diagonal operator of the step.
void apply_step(CMat& w, const Step& s, int n) {
  const int b = n - 1 - s.target;
  const Eigen::Index dim = w.rows();
  std::vector<CMat> blocks;
  blocks.reserve(s.angles.size());
  for (double a : s.angles) blocks.push_back(axis_matrix(s.axis, a));
  for (Eigen::Index i0 = 0; i0 < dim; ++i0) {
    if ((i0 >> b) & 1) continue;
    const Eigen::Index i1 = i0 | (Eigen::Index{1} << b);
    std::size_t pattern = 0;
    for (int c : s.controls) pattern = (pattern << 1) | static_cast<std::size_t>((i0 >> (n - 1 - c)) & 1);
    const CMat& m = blocks[pattern];
    for (Eigen::Index col = 0; col < w.cols(); ++col) {
      const Complex x0 = w(i0, col), x1 = w(i1, col);
      w(i0, col) = m(0, 0) * x0 + m(0, 1) * x1;
      w(i1, col) = m(1, 0) * x0 + m(1, 1) * x1;
    }
  }
}

// Column-by-column reduction; appends the steps of G to `steps` if given.
CMat reduce(const CMat& v, int columns, std::vector<Step>* steps) {
  const int n = log2_exact(v.rows());
  CMat w = v;
  for (long k = 0; k < columns; ++k) {
    for (int t = n - 1; t >= 0; --t) {
      bool full = false;
      if (!step_shape(k, t, n, full)) continue;
      const int b = n - 1 - t;
      const long k_high = k >> (b + 1);
      const int k_b = static_cast<int>((k >> b) & 1);
      const long k_low = k & ((1L << b) - 1);

      Step rz{RotationAxis::Z, step_controls(t, n, full), t, {}};
      Step ry{RotationAxis::Y, rz.controls, t, {}};
      const std::size_t patterns = std::size_t{1} << rz.controls.size();
      rz.angles.assign(patterns, 0.0);
      ry.angles.assign(patterns, 0.0);
      for (std::size_t s = 0; s < patterns; ++s) {
        // Decode the pattern into the high part y and (for full) the low part.
        long y = 0, low = 0;
        for (std::size_t ci = 0; ci < rz.controls.size(); ++ci) {
          const int bit = static_cast<int>((s >> (rz.controls.size() - 1 - ci)) & 1);
          if (rz.controls[ci] < t) {
            y = (y << 1) | bit;
          } else {
            low = (low << 1) | bit;
          }
        }
        if (full && low != k_low) continue;
        if (!(y > k_high || (y == k_high && k_b == 0))) continue;
        const Eigen::Index i0 = (y << (b + 1)) | k_low;
        const Eigen::Index i1 = i0 | (Eigen::Index{1} << b);
        const Complex a0 = w(i0, k), a1 = w(i1, k);
        const double r0 = std::abs(a0), r1 = std::abs(a1);
        if (r0 >= kTiny && r1 >= kTiny) rz.angles[s] = std::arg(a0) - std::arg(a1);
        if (r0 >= kTiny || r1 >= kTiny) {
          ry.angles[s] = k_b == 0 ? -2 * std::atan2(r1, r0) : 2 * std::atan2(r0, r1);
        }
      }
      apply_step(w, rz, n);
      apply_step(w, ry, n);
      if (steps) {
        steps->push_back(std::move(rz));
        steps->push_back(std::move(ry));
      }
    }
  }
  return w;
}

}  // namespace

std::vector<Gate> multiplexed_rotation(RotationAxis axis, const std::vector<int>& controls, int target,
                                       const std::vector<double>& angles) {
  const std::size_t c = controls.size();
  if (c > 20 || angles.size() != (std::size_t{1} << c)) {
    throw std::invalid_argument("multiplexed_rotation: expected 2^c angles");
  }
  if (std::find(controls.begin(), controls.end(), target) != controls.end()) {
    throw std::invalid_argument("multiplexed_rotation: target among controls");
  }
  const auto rotation = [&](double theta) {
    return axis == RotationAxis::Y ? Gate::ry(target, theta) : Gate::rz(target, theta);
  };
  if (c == 0) return {rotation(angles[0])};

  const std::size_t size = angles.size();
  std::vector<Gate> gates;
  gates.reserve(2 * size);
  for (std::size_t j = 0; j < size; ++j) {
    const std::size_t gray = j ^ (j >> 1);
    double theta = 0;
    for (std::size_t s = 0; s < size; ++s) {
      theta += (std::popcount(s & gray) % 2 ? -1.0 : 1.0) * angles[s];
    }
    gates.push_back(rotation(theta / static_cast<double>(size)));
    const std::size_t next = (j + 1) % size;
    const int bit = std::countr_zero(gray ^ (next ^ (next >> 1)));
    gates.push_back(Gate::cnot(controls[c - 1 - bit], target));
  }
  return gates;
}

long builtin_iso_cnots(int m, int n) {
  if (m < 0 || n < m) throw std::invalid_argument("builtin_iso_cnots: need 0 <= m <= n");
  long total = 0;
  for (long k = 0; k < (1L << m); ++k) {
    for (int t = n - 1; t >= 0; --t) {
      bool full = false;
      if (!step_shape(k, t, n, full)) continue;
      const auto c = step_controls(t, n, full).size();
      if (c > 0) total += 2 * (1L << c);
    }
  }
  if (m >= 1) total += (1L << m) - 2;
  return total;
}

IsoCostModel builtin_cost_model() { return IsoCostModel{builtin_iso_cnots}; }

CMat reduce_columns(const CMat& v, int columns) {
  if (!is_power_of_two(v.rows()) || !is_power_of_two(v.cols()) || v.rows() < v.cols()) {
    throw std::invalid_argument("reduce_columns: expected a tall 2^n x 2^m matrix");
  }
  if (columns < 0 || columns > v.cols()) throw std::invalid_argument("reduce_columns: bad column count");
  if (isometry_residual(v) > 1e-9) throw std::invalid_argument("not an isometry");
  return reduce(v, columns, nullptr);
}

Circuit decompose_isometry(const CMat& v) {
  if (!is_power_of_two(v.rows()) || !is_power_of_two(v.cols()) || v.rows() < v.cols()) {
    throw std::invalid_argument("decompose_isometry: expected a tall 2^n x 2^m matrix");
  }
  if (isometry_residual(v) > 1e-9) throw std::invalid_argument("not an isometry");
  const int n = log2_exact(v.rows());
  const int m = log2_exact(v.cols());

  std::vector<Step> steps;
  const CMat w = reduce(v, static_cast<int>(v.cols()), &steps);

  // Diagonal correction on the m least significant qubits, built from Rz
  // multiplexors of decreasing size; the leftover global phase is dropped.
  std::vector<double> psi(v.cols());
  for (Eigen::Index j = 0; j < v.cols(); ++j) psi[j] = -std::arg(w(j, j));
  for (int level = 0; level < m; ++level) {
    const int target = n - 1 - level;
    std::vector<int> controls;
    for (int q = n - m; q < target; ++q) controls.push_back(q);
    const std::size_t pairs = psi.size() / 2;
    Step rz{RotationAxis::Z, controls, target, std::vector<double>(pairs)};
    std::vector<double> rest(pairs);
    for (std::size_t s = 0; s < pairs; ++s) {
      rz.angles[s] = psi[2 * s + 1] - psi[2 * s];
      rest[s] = 0.5 * (psi[2 * s] + psi[2 * s + 1]);
    }
    steps.push_back(std::move(rz));
    psi = std::move(rest);
  }

  Circuit c;
  c.num_qubits = n;
  for (int q = n - m; q < n; ++q) c.inputs.push_back(q);
  for (int q = 0; q < n; ++q) c.outputs.push_back(q);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::vector<double> inverse(it->angles.size());
    std::transform(it->angles.begin(), it->angles.end(), inverse.begin(), [](double a) { return -a; });
    for (Gate& g : multiplexed_rotation(it->axis, it->controls, it->target, inverse)) c.add(std::move(g));
  }
  return c;
}

}  // namespace qchannel
