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

#include "qchannel/compiler.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qchannel {

namespace {

using Index = Eigen::Index;

std::vector<Condition> prefix_condition(long s, int length) {
  std::vector<Condition> cond;
  for (int j = 0; j < length; ++j) cond.push_back({j, static_cast<int>((s >> (length - 1 - j)) & 1)});
  return cond;
}

std::vector<int> range(int first, int count) {
  std::vector<int> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

CMat reconstruct_from(const CompilePlan& plan, int round, long s) {
  if (round == plan.k_tilde) return plan.finals.at(s);
  const CMat& g = plan.stages.at(round).at(s);
  const Index d = g.cols();
  const CMat top = reconstruct_from(plan, round + 1, 2 * s) * g.topRows(d);
  const CMat bottom = reconstruct_from(plan, round + 1, 2 * s + 1) * g.bottomRows(d);
  CMat v(top.rows() + bottom.rows(), d);
  v << top, bottom;
  return v;
}

}  // namespace

void ConvexMixture::validate() const {
  if (components.empty()) throw std::invalid_argument("empty mixture");
  double total = 0;
  for (const auto& [p, ks] : components) {
    if (!(p > 0)) throw std::invalid_argument("mixture probabilities must be positive");
    if (ks.m != components[0].second.m || ks.n != components[0].second.n) {
      throw std::invalid_argument("mixture components differ in dimensions");
    }
    ks.validate();
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mixture probabilities must sum to 1");
}

CMat ConvexMixture::choi() const {
  CMat j = components.at(0).first * choi_from_kraus(components[0].second).j;
  for (std::size_t i = 1; i < components.size(); ++i) j += components[i].first * choi_from_kraus(components[i].second).j;
  return j;
}

CompilePlan plan_measured(const KrausSet& ks, std::optional<int> force_k) {
  const DilationIsometry dil = stinespring_isometry(ks, true, force_k);
  CompilePlan plan;
  plan.m = ks.m;
  plan.n = ks.n;
  plan.k = dil.k;
  plan.v = dil.v;
  if (plan.n + plan.k < plan.m) throw std::invalid_argument("rank/shape mismatch");
  if (plan.m < plan.n) {
    plan.l = plan.n - plan.m;
    plan.k_tilde = plan.k;
  } else {
    plan.l = 1;
    plan.k_tilde = std::max(0, plan.n + plan.k - plan.m - 1);
  }
  plan.final_measure_count = plan.k - plan.k_tilde;

  const Index d = Index{1} << plan.m;
  std::vector<CMat> current{dil.v};
  for (int round = 0; round < plan.k_tilde; ++round) {
    std::vector<CMat> stage, next;
    for (const CMat& q : current) {
      const Index half = q.rows() / 2;
      CMat g(2 * d, d);
      for (int b = 0; b < 2; ++b) {
        const QrResult qr = qr_rectangular(q.middleRows(b * half, half));
        g.middleRows(b * d, d) = qr.r.topRows(d);
        next.push_back(qr.q.leftCols(d));
      }
      if (isometry_residual(g) > 1e-9) throw std::runtime_error("rank/shape mismatch");
      stage.push_back(std::move(g));
    }
    plan.stages.push_back(std::move(stage));
    current = std::move(next);
  }
  for (const CMat& f : current) {
    if (isometry_residual(f) > 1e-9) throw std::runtime_error("rank/shape mismatch");
  }
  plan.finals = std::move(current);
  return plan;
}

CMat reconstruct(const CompilePlan& plan) { return reconstruct_from(plan, 0, 0); }

Circuit compile_measured(const KrausSet& ks, std::optional<int> force_k) {
  const CompilePlan plan = plan_measured(ks, force_k);
  const int m = plan.m, n = plan.n, k = plan.k, l = plan.l;
  const int p = m + l;
  const std::vector<int> system = range(l, m);

  Circuit c;
  c.num_qubits = p;
  c.num_cregs = k;
  c.inputs = system;

  if (k == 0 && m < n) {
    append_mapped(c, decompose_isometry(plan.v), range(0, p));
    c.outputs = range(0, p);
    return c;
  }
  if (k == 0 || n + k == m) {
    // Unitary on the system register; the top k system qubits are measured
    // and discarded, and the ancilla stays idle.
    append_mapped(c, decompose_isometry(plan.v), system);
    for (int j = 0; j < k; ++j) c.add(Gate::measure(system[j], j));
    c.add(Gate::trace(0));
    c.outputs = range(l + k, m - k);
    return c;
  }

  std::vector<int> stage_map{0};
  stage_map.insert(stage_map.end(), system.begin(), system.end());
  for (int round = 0; round < plan.k_tilde; ++round) {
    for (long s = 0; s < static_cast<long>(plan.stages[round].size()); ++s) {
      append_mapped(c, decompose_isometry(plan.stages[round][s]), stage_map, prefix_condition(s, round));
    }
    c.add(Gate::measure(0, round));
    c.add(Gate::reset(0));
  }
  for (long s = 0; s < static_cast<long>(plan.finals.size()); ++s) {
    append_mapped(c, decompose_isometry(plan.finals[s]), range(0, p), prefix_condition(s, plan.k_tilde));
  }
  for (int j = 0; j < plan.final_measure_count; ++j) c.add(Gate::measure(j, plan.k_tilde + j));
  c.outputs = range(plan.final_measure_count, p - plan.final_measure_count);
  return c;
}

Circuit compile_qcm(const KrausSet& ks, std::optional<int> force_k) {
  const DilationIsometry dil = stinespring_isometry(ks, true, force_k);
  const int p = ks.n + dil.k;
  if (p < ks.m) throw std::invalid_argument("rank/shape mismatch");
  Circuit c = decompose_isometry(dil.v);
  for (int q = 0; q < dil.k; ++q) c.add(Gate::trace(q));
  c.outputs = range(dil.k, ks.n);
  return c;
}

std::vector<std::pair<double, Circuit>> compile_random_qcm(const ConvexMixture& mix) {
  mix.validate();
  for (const auto& [p, ks] : mix.components) {
    if (kraus_rank(ks) > (1 << ks.m)) throw std::invalid_argument("component not implementable in m+n qubits");
  }
  std::vector<std::pair<double, Circuit>> out;
  for (const auto& [p, ks] : mix.components) out.emplace_back(p, compile_qcm(ks));
  return out;
}

long predict_upper_bound(int m, int n, int k, const IsoCostModel& cost) {
  if (m < 0 || n < 0 || k < 0 || n + k < m) throw std::invalid_argument("predict_upper_bound: need n + k >= m");
  if (k == 0) return cost.n_iso(m, n);
  if (n + k == m) return cost.n_iso(m, m);
  if (m < n) return k * cost.n_iso(m, m + 1) + cost.n_iso(m, n);
  return (k + n - m) * cost.n_iso(m, m + 1);
}

}  // namespace qchannel
