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

#include "qchannel/templates.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qchannel/nelder_mead.hpp"

namespace qchannel {

namespace {

using Cond = std::vector<Condition>;

struct Builder {
  Circuit& c;

  void u(int q, const Cond& cond) { c.add(Gate::u(q, 0, 0, 0, 0).when(cond)); }
  void ry(int q, const Cond& cond) { c.add(Gate::ry(q, 0).when(cond)); }
  void rz(int q, const Cond& cond) { c.add(Gate::rz(q, 0).when(cond)); }
  void cnot(int a, int b, const Cond& cond) { c.add(Gate::cnot(a, b).when(cond)); }

  // Two-CNOT one-to-two isometry; a starts in |0>.
  void iso12(int a, int b, const Cond& cond) {
    u(a, cond), u(b, cond);
    cnot(a, b, cond);
    ry(a, cond), ry(b, cond);
    cnot(a, b, cond);
    u(a, cond), u(b, cond);
  }

  // Two-qubit gate with two CNOTs and free single-qubit layers.
  void two_cnot(int a, int b, const Cond& cond) {
    u(a, cond), u(b, cond);
    cnot(a, b, cond);
    u(a, cond), u(b, cond);
    cnot(a, b, cond);
    u(a, cond), u(b, cond);
  }

  // Ry multiplexed on (c1, c2) acting on t, Gray-code expanded.
  void ladder(int t, int c1, int c2, const Cond& cond) {
    ry(t, cond);
    cnot(c1, t, cond);
    ry(t, cond);
    cnot(c2, t, cond);
    ry(t, cond);
    cnot(c1, t, cond);
    ry(t, cond);
  }

  // General two-qubit unitary with three CNOTs.
  void three_cnot(int a, int b, const Cond& cond) {
    u(a, cond), u(b, cond);
    cnot(a, b, cond);
    ry(a, cond), rz(b, cond);
    cnot(b, a, cond);
    ry(a, cond);
    cnot(a, b, cond);
    u(a, cond), u(b, cond);
  }
};

Circuit skeleton_for(TemplateId id) {
  Circuit c;
  Builder b{c};
  const Cond none;
  switch (id) {
    case TemplateId::T11:
      c.num_qubits = 2;
      c.num_cregs = 1;
      c.inputs = {1};
      c.outputs = {1};
      b.u(0, none), b.u(1, none);
      b.cnot(0, 1, none);
      b.ry(0, none), b.ry(1, none);
      c.add(Gate::measure(0, 0));
      c.add(Gate::x(1).when({{0, 1}}));
      b.u(1, none);
      break;
    case TemplateId::T12:
      c.num_qubits = 2;
      c.num_cregs = 1;
      c.inputs = {1};
      c.outputs = {0, 1};
      b.iso12(0, 1, none);
      c.add(Gate::measure(0, 0));
      c.add(Gate::reset(0));
      for (int bit = 0; bit < 2; ++bit) b.iso12(0, 1, {{0, bit}});
      break;
    case TemplateId::T21:
      c.num_qubits = 3;
      c.num_cregs = 2;
      c.inputs = {1, 2};
      c.outputs = {2};
      b.two_cnot(1, 2, none);
      b.ladder(0, 1, 2, none);
      c.add(Gate::measure(0, 0));
      for (int bit = 0; bit < 2; ++bit) {
        const Cond cond{{0, bit}};
        b.u(1, cond), b.u(2, cond);
        b.cnot(1, 2, cond);
        b.ry(1, cond), b.rz(2, cond);
        b.cnot(2, 1, cond);
        b.ry(1, cond);
      }
      c.add(Gate::measure(1, 1));
      c.add(Gate::x(2).when({{1, 1}}));
      for (int bit = 0; bit < 2; ++bit) b.u(2, {{0, bit}});
      break;
    case TemplateId::T22:
      c.num_qubits = 4;
      c.num_cregs = 2;
      c.inputs = {2, 3};
      c.outputs = {2, 3};
      b.two_cnot(2, 3, none);
      b.ladder(0, 2, 3, none);
      c.add(Gate::measure(0, 0));
      for (int bit = 0; bit < 2; ++bit) {
        b.two_cnot(2, 3, {{0, bit}});
        b.ladder(1, 2, 3, {{0, bit}});
      }
      c.add(Gate::measure(1, 1));
      for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) b.three_cnot(2, 3, {{0, b0}, {1, b1}});
      }
      break;
  }
  return c;
}

int slots_of(const Gate& g) { return static_cast<int>(g.params.size()); }

using Mat2 = std::array<Complex, 4>;

Mat2 u_entries(double alpha, double beta, double gamma, double delta) {
  const double c = std::cos(gamma / 2), s = std::sin(gamma / 2);
  const Complex ph = std::polar(1.0, alpha);
  return {ph * std::polar(c, -(beta + delta) / 2), ph * std::polar(-s, -(beta - delta) / 2),
          ph * std::polar(s, (beta - delta) / 2), ph * std::polar(c, (beta + delta) / 2)};
}

// Channel evaluator specialised for one skeleton: computes the Choi matrix of
// the instantiated circuit without building intermediate circuits.
class ChoiEvaluator {
 public:
  explicit ChoiEvaluator(const Circuit& skeleton) : c_(skeleton), p_(skeleton.num_qubits) {
    rows_ = std::size_t{1} << p_;
    cols_ = std::size_t{1} << c_.inputs.size();
    n_out_ = static_cast<int>(c_.outputs.size());
    std::vector<bool> is_out(p_, false);
    for (int q : c_.outputs) is_out[q] = true;
    std::vector<int> env;
    for (int q = 0; q < p_; ++q) {
      if (!is_out[q]) env.push_back(q);
    }
    const std::size_t n_env = std::size_t{1} << env.size();
    const std::size_t n_rows_out = std::size_t{1} << n_out_;
    row_map_.assign(n_env, std::vector<std::size_t>(n_rows_out));
    for (std::size_t e = 0; e < n_env; ++e) {
      for (std::size_t a = 0; a < n_rows_out; ++a) {
        std::size_t row = 0;
        for (std::size_t i = 0; i < env.size(); ++i) {
          if ((e >> (env.size() - 1 - i)) & 1) row |= std::size_t{1} << (p_ - 1 - env[i]);
        }
        for (int i = 0; i < n_out_; ++i) {
          if ((a >> (n_out_ - 1 - i)) & 1) row |= std::size_t{1} << (p_ - 1 - c_.outputs[i]);
        }
        row_map_[e][a] = row;
      }
    }
    dim_ = n_rows_out * cols_;
    offsets_.reserve(c_.gates.size());
    int offset = 0;
    for (const Gate& g : c_.gates) {
      offsets_.push_back(offset);
      offset += slots_of(g);
    }
    mats_.resize(c_.gates.size());
  }

  CMat choi(const std::vector<double>& params) {
    for (std::size_t i = 0; i < c_.gates.size(); ++i) {
      const Gate& g = c_.gates[i];
      const double* p = params.data() + offsets_[i];
      switch (g.type) {
        case OpType::U: mats_[i] = u_entries(p[0], p[1], p[2], p[3]); break;
        case OpType::RY: mats_[i] = u_entries(0, 0, p[0], 0); break;
        case OpType::RZ: mats_[i] = u_entries(0, p[0], 0, 0); break;
        case OpType::RX: {
          const double cs = std::cos(p[0] / 2), sn = std::sin(p[0] / 2);
          mats_[i] = {cs, Complex(0, -sn), Complex(0, -sn), cs};
          break;
        }
        case OpType::X: mats_[i] = {0.0, 1.0, 1.0, 0.0}; break;
        default: break;
      }
    }
    j_ = CMat::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    std::vector<Complex> state(rows_ * cols_, 0.0);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t row = 0;
      const std::size_t m = c_.inputs.size();
      for (std::size_t i = 0; i < m; ++i) {
        if ((col >> (m - 1 - i)) & 1) row |= std::size_t{1} << (p_ - 1 - c_.inputs[i]);
      }
      state[row * cols_ + col] = 1.0;
    }
    std::vector<int> regs(c_.num_cregs, -1), last(p_, -1);
    run(0, state, regs, last);
    return j_;
  }

 private:
  void apply(std::vector<Complex>& s, int q, const Mat2& u) const {
    const std::size_t bit = std::size_t{1} << (p_ - 1 - q);
    for (std::size_t i0 = 0; i0 < rows_; ++i0) {
      if (i0 & bit) continue;
      Complex* r0 = &s[i0 * cols_];
      Complex* r1 = &s[(i0 | bit) * cols_];
      for (std::size_t col = 0; col < cols_; ++col) {
        const Complex x0 = r0[col], x1 = r1[col];
        r0[col] = u[0] * x0 + u[1] * x1;
        r1[col] = u[2] * x0 + u[3] * x1;
      }
    }
  }

  void run(std::size_t idx, std::vector<Complex> s, std::vector<int>& regs, std::vector<int>& last) {
    static const Mat2 kX{0.0, 1.0, 1.0, 0.0};
    for (; idx < c_.gates.size(); ++idx) {
      const Gate& g = c_.gates[idx];
      bool fires = true;
      for (const Condition& cond : g.condition) fires = fires && regs[cond.creg] == cond.bit;
      if (!fires) continue;
      const int q = g.qubits[0];
      if (g.type == OpType::CNOT) {
        const std::size_t cb = std::size_t{1} << (p_ - 1 - q);
        const std::size_t tb = std::size_t{1} << (p_ - 1 - g.qubits[1]);
        for (std::size_t i = 0; i < rows_; ++i) {
          if ((i & cb) && !(i & tb)) {
            std::swap_ranges(s.begin() + static_cast<long>(i * cols_), s.begin() + static_cast<long>((i + 1) * cols_),
                             s.begin() + static_cast<long>((i | tb) * cols_));
          }
        }
      } else if (g.type == OpType::MEASURE) {
        const std::size_t bit = std::size_t{1} << (p_ - 1 - q);
        for (int b = 0; b < 2; ++b) {
          std::vector<Complex> proj = s;
          for (std::size_t i = 0; i < rows_; ++i) {
            if (static_cast<bool>(i & bit) != static_cast<bool>(b)) {
              std::fill_n(proj.begin() + static_cast<long>(i * cols_), cols_, Complex(0.0));
            }
          }
          regs[g.creg] = b;
          const int saved = last[q];
          last[q] = b;
          run(idx + 1, std::move(proj), regs, last);
          last[q] = saved;
          regs[g.creg] = -1;
        }
        return;
      } else if (g.type == OpType::RESET) {
        if (last[q] == 1) apply(s, q, kX);
      } else if (g.type != OpType::TRACE) {
        apply(s, q, mats_[idx]);
      }
    }
    // Accumulate vec(A) vec(A)^dagger for every environment index.
    const std::size_t n_rows_out = row_map_[0].size();
    CVec v(static_cast<Eigen::Index>(dim_));
    for (const auto& rows : row_map_) {
      for (std::size_t col = 0; col < cols_; ++col) {
        for (std::size_t a = 0; a < n_rows_out; ++a) v(static_cast<Eigen::Index>(col * n_rows_out + a)) = s[rows[a] * cols_ + col];
      }
      if (v.squaredNorm() > 0) j_.noalias() += v * v.adjoint();
    }
  }

  const Circuit& c_;
  int p_;
  int n_out_ = 0;
  std::size_t rows_ = 0, cols_ = 0, dim_ = 0;
  std::vector<std::vector<std::size_t>> row_map_;
  std::vector<int> offsets_;
  std::vector<Mat2> mats_;
  CMat j_;
};

}  // namespace

Template make_template(TemplateId id) {
  Template t;
  t.id = id;
  t.skeleton = skeleton_for(id);
  switch (id) {
    case TemplateId::T11: t.name = "1to1", t.m = 1, t.n = 1, t.max_rank = 2; break;
    case TemplateId::T12: t.name = "1to2", t.m = 1, t.n = 2, t.max_rank = 2; break;
    case TemplateId::T21: t.name = "2to1", t.m = 2, t.n = 1, t.max_rank = 4; break;
    case TemplateId::T22: t.name = "2to2", t.m = 2, t.n = 2, t.max_rank = 4; break;
  }
  for (const Gate& g : t.skeleton.gates) t.param_count += slots_of(g);
  t.cnot_count = cnot_count(t.skeleton).worst_case;
  return t;
}

Template template_by_name(const std::string& name) {
  for (TemplateId id : {TemplateId::T11, TemplateId::T12, TemplateId::T21, TemplateId::T22}) {
    Template t = make_template(id);
    if (t.name == name) return t;
  }
  throw std::invalid_argument("unknown template '" + name + "'");
}

Circuit instantiate(const Template& t, const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != t.param_count) {
    throw std::invalid_argument("template expects " + std::to_string(t.param_count) + " parameters");
  }
  Circuit c = t.skeleton;
  std::size_t pos = 0;
  for (Gate& g : c.gates) {
    for (double& p : g.params) p = params[pos++];
  }
  return c;
}

FitResult fit(const Template& t, const KrausSet& target, const FitOptions& opts) {
  target.validate();
  if (target.m != t.m || target.n != t.n) {
    throw std::invalid_argument("target dimensions do not match template " + t.name);
  }
  if (kraus_rank(target) > t.max_rank) {
    throw std::invalid_argument("target Kraus rank exceeds what template " + t.name + " covers");
  }
  if (opts.starts < 1) throw std::invalid_argument("fit needs at least one start");

  // Free coordinates: every slot except the global phase of U gates.
  std::vector<int> free_slots;
  int pos = 0;
  for (const Gate& g : t.skeleton.gates) {
    for (int i = 0; i < slots_of(g); ++i, ++pos) {
      if (!(g.type == OpType::U && i == 0)) free_slots.push_back(pos);
    }
  }

  ChoiEvaluator evaluator(t.skeleton);
  const CMat jt = choi_from_kraus(target).j;
  std::vector<double> full(t.param_count, 0.0);
  const auto expand = [&](const std::vector<double>& x) {
    for (std::size_t i = 0; i < free_slots.size(); ++i) full[free_slots[i]] = x[i];
    return full;
  };
  const auto objective = [&](const std::vector<double>& x) { return (evaluator.choi(expand(x)) - jt).squaredNorm(); };

  NelderMeadOptions nm;
  nm.max_evaluations = opts.max_iters;
  nm.target = opts.tol * opts.tol;

  FitResult best;
  best.distance = INFINITY;
  for (int s = 0; s < opts.starts; ++s) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> x0(free_slots.size());
    for (double& x : x0) x = angle(rng);
    const NelderMeadResult r = nelder_mead(objective, x0, nm);
    best.evaluations += r.evaluations;
    const double d = std::sqrt(std::max(0.0, r.value));
    if (d < best.distance) {
      best.distance = d;
      best.params = expand(r.x);
      best.start_index = s;
    }
    if (best.distance < opts.tol) break;
  }
  best.success = best.distance < opts.tol;
  return best;
}

}  // namespace qchannel
