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

#include "qchannel/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "qchannel/bounds.hpp"
#include "qchannel/compiler.hpp"
#include "qchannel/rewrite.hpp"
#include "qchannel/simulator.hpp"
#include "qchannel/templates.hpp"

namespace qchannel::cli {

namespace {

constexpr int kMaxTotalQubits = 8;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::invalid_argument("cannot write " + path);
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

ConvexMixture read_mixture(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  ConvexMixture mix;
  if (!doc.is_object() || !doc.contains("components")) {
    mix.components.emplace_back(1.0, kraus_from_json(text));
    return mix;
  }
  if (!doc["components"].is_array()) throw std::invalid_argument("components must be a list");
  for (const auto& comp : doc["components"]) {
    if (!comp.is_object() || !comp.contains("probability") || !comp["probability"].is_number()) {
      throw std::invalid_argument("every component needs a numeric probability");
    }
    mix.components.emplace_back(comp["probability"].get<double>(), kraus_from_json(comp.dump()));
  }
  mix.validate();
  return mix;
}

void check_size(int m, int n, int k) {
  if (m + n + k > kMaxTotalQubits) {
    throw std::invalid_argument("channel too large: m + n + k = " + std::to_string(m + n + k) + " exceeds " +
                                std::to_string(kMaxTotalQubits));
  }
}

std::string report_line(const Circuit& c, double dist) {
  std::ostringstream line;
  line << "qubits=" << c.num_qubits << " cnots=" << cnot_count(c).worst_case
       << " measurements=" << c.count(OpType::MEASURE) << " choi_dist=" << sci(dist);
  return line.str();
}

struct CompileArgs {
  std::string model = "measured";
  std::string in, out;
  std::optional<int> k;
  bool no_verify = false;
  bool no_rewrite = false;
  bool report = false;
  double tol = 1e-8;
};

int do_compile(const CompileArgs& a, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(a.in);
  if (a.model == "random") {
    const ConvexMixture mix = read_mixture(text);
    const KrausSet& first = mix.components[0].second;
    check_size(first.m, first.n, first.n);
    const auto circuits = compile_random_qcm(mix);
    CMat implemented = CMat::Zero(mix.choi().rows(), mix.choi().cols());
    Circuit widest;
    int worst = 0;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      const Circuit c = a.no_rewrite ? circuits[i].second : apply_rewrites(circuits[i].second);
      write_file(a.out + "." + std::to_string(i), serialize(c));
      if (!a.no_verify) implemented += circuits[i].first * choi_from_kraus(circuit_to_kraus(c)).j;
      if (c.num_qubits >= widest.num_qubits) widest = c;
      worst = std::max(worst, cnot_count(c).worst_case);
    }
    const double dist = a.no_verify ? 0.0 : (implemented - mix.choi()).norm();
    if (a.report) {
      out << "components=" << circuits.size() << " qubits=" << widest.num_qubits << " cnots=" << worst
          << " measurements=0 choi_dist=" << sci(dist) << "\n";
    }
    if (!a.no_verify && !(dist < a.tol)) {
      err << "verification failed: choi_dist=" << sci(dist) << "\n";
      return kVerifyFailed;
    }
    return kOk;
  }

  const KrausSet ks = kraus_from_json(text);
  const int k = a.k ? *a.k : ceil_log2(kraus_rank(ks));
  check_size(ks.m, ks.n, k);
  Circuit c;
  if (a.model == "measured") {
    c = compile_measured(ks, a.k);
  } else if (a.model == "qcm") {
    c = compile_qcm(ks, a.k);
  } else {
    throw std::invalid_argument("unknown model '" + a.model + "'");
  }
  if (!a.no_rewrite) c = apply_rewrites(c);
  const double dist = a.no_verify ? 0.0 : choi_distance(circuit_to_kraus(c), ks);
  write_file(a.out, serialize(c));
  if (a.report) out << report_line(c, dist) << "\n";
  if (!a.no_verify && !(dist < a.tol)) {
    err << "verification failed: choi_dist=" << sci(dist) << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

int do_verify(const std::string& circuit_path, const std::string& channel_path, double tol, std::ostream& out) {
  const Circuit c = parse_circuit(read_file(circuit_path));
  const KrausSet ks = kraus_from_json(read_file(channel_path));
  if (static_cast<int>(c.inputs.size()) != ks.m || static_cast<int>(c.outputs.size()) != ks.n) {
    throw std::invalid_argument("circuit and channel dimensions differ");
  }
  const double dist = choi_distance(circuit_to_kraus(c), ks);
  const bool ok = dist < tol;
  out << "choi_dist=" << sci(dist) << " " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int do_info(const std::string& path, std::ostream& out) {
  const KrausSet ks = kraus_from_json(read_file(path));
  out << "m=" << ks.m << "\n"
      << "n=" << ks.n << "\n"
      << "kraus_rank=" << kraus_rank(ks) << "\n"
      << "extreme=" << (is_extreme(ks) ? "yes" : "no") << "\n"
      << "tp_residual=" << sci(ks.tp_residual()) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile quantum channels into CNOT circuits with measurements"};
  app.name("qchannel");
  app.require_subcommand(1);

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "compile a channel into a circuit");
  compile->add_option("--model", ca.model)->check(CLI::IsMember({"measured", "qcm", "random"}));
  compile->add_option("--in", ca.in)->required();
  compile->add_option("--out", ca.out)->required();
  compile->add_option("--k", ca.k, "environment qubits (at least the minimal value)");
  compile->add_option("--tol", ca.tol);
  compile->add_flag("--no-verify", ca.no_verify);
  compile->add_flag("--no-rewrite", ca.no_rewrite);
  compile->add_flag("--report", ca.report);

  std::string v_circuit, v_channel;
  double v_tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "compare a circuit against a channel");
  verify->add_option("--circuit", v_circuit)->required();
  verify->add_option("--channel", v_channel)->required();
  verify->add_option("--tol", v_tol);

  std::string i_in;
  auto* info = app.add_subcommand("info", "print channel properties");
  info->add_option("--in", i_in)->required();

  int r_m = 0, r_n = 0, r_k = 1;
  std::uint64_t r_seed = 0;
  std::string r_out;
  auto* random = app.add_subcommand("random", "write a seeded random channel");
  random->add_option("--m", r_m)->required();
  random->add_option("--n", r_n)->required();
  random->add_option("--kraus-rank", r_k)->required();
  random->add_option("--seed", r_seed)->required();
  random->add_option("--out", r_out)->required();

  int b_m = 0, b_n = 0;
  std::vector<int> b_grid;
  bool b_csv = false;
  auto* bounds = app.add_subcommand("bounds", "evaluate CNOT bounds");
  auto* b_m_opt = bounds->add_option("--m", b_m);
  bounds->add_option("--n", b_n)->needs(b_m_opt);
  auto* grid_opt = bounds->add_option("--grid", b_grid, "Mmax Nmax")->expected(2);
  b_m_opt->excludes(grid_opt);
  bounds->add_flag("--csv", b_csv);

  std::string f_template, f_in, f_out;
  FitOptions fo;
  auto* fit_cmd = app.add_subcommand("fit", "fit a fixed template to a channel");
  fit_cmd->add_option("--template", f_template)->required()->check(CLI::IsMember({"1to1", "1to2", "2to1", "2to2"}));
  fit_cmd->add_option("--in", f_in)->required();
  fit_cmd->add_option("--starts", fo.starts)->required();
  fit_cmd->add_option("--seed", fo.seed)->required();
  fit_cmd->add_option("--out", f_out);
  fit_cmd->add_option("--tol", fo.tol);
  fit_cmd->add_option("--max-iters", fo.max_iters);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalid;
  }

  try {
    if (compile->parsed()) return do_compile(ca, out, err);
    if (verify->parsed()) return do_verify(v_circuit, v_channel, v_tol, out);
    if (info->parsed()) return do_info(i_in, out);
    if (random->parsed()) {
      write_file(r_out, kraus_to_json(random_channel(r_m, r_n, r_k, r_seed)));
      return kOk;
    }
    if (bounds->parsed()) {
      if (!b_grid.empty()) {
        if (b_csv) {
          out << bounds_csv(b_grid[0], b_grid[1]);
        } else {
          for (int m = 0; m <= b_grid[0]; ++m) {
            for (int n = 0; n <= b_grid[1]; ++n) out << table1(m, n).to_text() << "\n";
          }
        }
      } else if (b_csv) {
        const std::string header = bounds_csv(0, 0).substr(0, bounds_csv(0, 0).find('\n') + 1);
        out << header << b_m << "," << b_n << "," << lb_random_qcm(b_m, b_n) << "," << lb_measured_qcm(b_m, b_n)
            << "," << lb_qcm_isometry(b_m, b_n) << "," << param_count_extreme(b_m, b_n) << "\n";
      } else {
        out << table1(b_m, b_n).to_text();
      }
      return kOk;
    }
    if (fit_cmd->parsed()) {
      const Template t = template_by_name(f_template);
      const KrausSet target = kraus_from_json(read_file(f_in));
      const FitResult r = fit(t, target, fo);
      const Circuit c = instantiate(t, r.params);
      // Cross-check with the general simulator.
      const double dist = choi_distance(circuit_to_kraus(c), target);
      if (!f_out.empty()) write_file(f_out, serialize(c));
      out << "template=" << t.name << " cnots=" << t.cnot_count << " start=" << r.start_index
          << " choi_dist=" << sci(dist) << " " << (dist < fo.tol ? "PASS" : "FAIL") << "\n";
      return dist < fo.tol ? kOk : kVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace qchannel::cli
