// Copyright 2026 The zxkit Authors
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

// Command-line front end: eval, simplify, optimize, equal, validate-rules.
//
// Exit status is 0 on success, 1 when the answer is negative (diagrams not
// equal, a rule unsound, verification failed) and 2 on usage or input errors.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zxkit/circuit.hpp"
#include "zxkit/diagram_json.hpp"
#include "zxkit/engine.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/optimize.hpp"
#include "zxkit/qasm.hpp"
#include "zxkit/rules.hpp"
#include "zxkit/semantics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace zxkit;

namespace {

constexpr int kReportVersion = 1;

struct Globals {
  std::string format = "human";
  double tol = 1e-9;
  std::optional<std::size_t> max_legs;

  bool as_json() const { return format == "json"; }

  EvalOptions eval_options() const {
    EvalOptions o;
    if (max_legs) {
      o.max_legs = *max_legs;
    } else if (const char* env = std::getenv("ZX_MAX_LEGS")) {
      o.max_legs = std::stoul(env);
    }
    return o;
  }
};

/// Thrown for results that should end the process with status 1.
struct Negative {
  std::string message;
};

bool is_qasm(const std::string& path) { return fs::path(path).extension() == ".qasm"; }

Diagram load_any(const std::string& path) {
  return is_qasm(path) ? to_diagram(load_qasm(path)) : load_diagram(path);
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string complex_text(Complex c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", c.real(), c.imag());
  return buf;
}

json metrics_json(const Metrics& m) {
  return {{"total", m.total},
          {"two_qubit", m.two_qubit},
          {"t_count", m.t_count},
          {"h_count", m.h_count},
          {"rotations", m.rotations}};
}

json report(const std::string& command) {
  return {{"report_version", kReportVersion}, {"command", command}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

// ------------------------------------------------------------------ eval

int run_eval(const Globals& g, const std::string& path) {
  const Diagram d = load_any(path);
  const Matrix m = eval(d, g.eval_options());
  if (g.as_json()) {
    json j = report("eval");
    j["input"] = path;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = matrix_json(m);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << m.rows() << " x " << m.cols() << "\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        std::cout << (c ? "  " : "") << complex_text(m(r, c));
      std::cout << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------- simplify

int run_simplify(const Globals& g, const std::string& path, const std::string& strategy,
                 bool trace, const std::string& out) {
  const Diagram d = load_any(path);
  const SimplifyResult r = simplify(d, parse_strategy(strategy));
  if (!out.empty()) save_diagram(r.diagram, out);
  const Measure before = measure(d), after = measure(r.diagram);
  if (g.as_json()) {
    json j = report("simplify");
    j["input"] = path;
    j["strategy"] = strategy;
    j["steps"] = r.trace.steps.size();
    j["measure_before"] = {before.vertices, before.edges, before.pi_flags};
    j["measure_after"] = {after.vertices, after.edges, after.pi_flags};
    if (trace) j["trace"] = trace_to_json(r.trace);
    if (out.empty()) j["diagram"] = diagram_to_json(r.diagram);
    std::cout << j.dump(2) << "\n";
  } else {
    if (trace)
      for (const TraceStep& s : r.trace.steps)
        std::cout << s.rule << " " << s.fingerprint << " x" << complex_text(s.factor.value)
                  << "\n";
    std::cout << strategy << ": " << r.trace.steps.size() << " steps, vertices "
              << before.vertices << " -> " << after.vertices << ", edges " << before.edges
              << " -> " << after.edges << "\n";
    if (out.empty()) std::cout << dump_diagram(r.diagram) << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- optimize

struct OptimizeOutcome {
  std::string input;
  std::optional<OptimizeResult> result;
  std::string error;
  int status = 0;
};

int run_optimize(const Globals& g, const std::vector<std::string>& inputs,
                 const std::string& out, const std::string& report_path, int jobs) {
  const bool many = inputs.size() > 1;
  if (many && !out.empty()) fs::create_directories(out);
  std::vector<OptimizeOutcome> outcomes(inputs.size());
  OptimizeOptions opts;
  opts.tol = std::max(g.tol, 1e-8);

#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(inputs.size()); ++i) {
    OptimizeOutcome& o = outcomes[i];
    o.input = inputs[i];
    try {
      o.result = optimize(load_qasm(inputs[i]), opts);
    } catch (const VerificationFailed& e) {
      o.error = e.what();
      o.status = 1;
    } catch (const std::exception& e) {
      o.error = e.what();
      o.status = 2;
    }
  }

  int status = 0;
  json circuits = json::array();
  for (const OptimizeOutcome& o : outcomes) {
    status = std::max(status, o.status);
    json entry = {{"input", o.input}};
    if (!o.result) {
      entry["error"] = o.error;
      std::cerr << o.input << ": " << o.error << "\n";
    } else {
      const OptimizeResult& r = *o.result;
      entry["method"] = r.method;
      entry["verified"] = r.verified;
      entry["rewrite_steps"] = r.trace.steps.size();
      entry["before"] = metrics_json(r.before);
      entry["after"] = metrics_json(r.after);
      if (!out.empty()) {
        const std::string target =
            many ? (fs::path(out) / (fs::path(o.input).stem().string() + ".opt.qasm")).string()
                 : out;
        save_qasm(r.circuit, target);
        entry["output"] = target;
      }
    }
    circuits.push_back(entry);
  }

  json j = report("optimize");
  j["circuits"] = circuits;
  if (!report_path.empty()) write_text(report_path, j.dump(2) + "\n");
  if (g.as_json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const OptimizeOutcome& o : outcomes) {
      if (!o.result) continue;
      const OptimizeResult& r = *o.result;
      std::cout << o.input << ": gates " << r.before.total << " -> " << r.after.total
                << ", two-qubit " << r.before.two_qubit << " -> " << r.after.two_qubit
                << ", T " << r.before.t_count << " -> " << r.after.t_count << ", H "
                << r.before.h_count << " -> " << r.after.h_count << " (" << r.method
                << (r.verified ? ", verified" : "") << ")\n";
      if (out.empty() && !many) std::cout << emit_qasm(r.circuit);
    }
  }
  return status;
}

// ----------------------------------------------------------------- equal

int run_equal(const Globals& g, const std::string& a, const std::string& b,
              bool up_to_scalar) {
  const EvalOptions opts = g.eval_options();
  const Matrix ma = eval(load_any(a), opts), mb = eval(load_any(b), opts);
  bool equal = false;
  json j = report("equal");
  j["inputs"] = {a, b};
  j["up_to_scalar"] = up_to_scalar;
  if (ma.rows() != mb.rows() || ma.cols() != mb.cols()) {
    j["reason"] = "shape mismatch";
  } else if (up_to_scalar) {
    const ScalarWitness w = equal_up_to_scalar(ma, mb, g.tol);
    equal = w.equal;
    if (w.scalar) j["scalar"] = complex_json(*w.scalar);
  } else {
    const double dev = max_abs_diff(ma, mb);
    equal = dev <= g.tol;
    j["max_deviation"] = dev;
  }
  j["equal"] = equal;
  if (g.as_json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << (equal ? "equal" : "not equal") << "\n";
  return equal ? 0 : 1;
}

// -------------------------------------------------------- validate-rules

int run_validate(const Globals& g, std::size_t trials, std::uint64_t seed) {
  const double tol = std::min(g.tol, kSoundnessTolerance);
  const std::vector<RuleReport> reports = validate_catalog(trials, seed, tol);
  bool all = true;
  json rules = json::array();
  for (const RuleReport& r : reports) {
    all = all && r.sound;
    rules.push_back({{"rule", r.rule},
                     {"trials", r.trials},
                     {"max_deviation", r.max_deviation},
                     {"unmatched", r.unmatched},
                     {"sound", r.sound}});
  }
  if (g.as_json()) {
    json j = report("validate-rules");
    j["seed"] = seed;
    j["tolerance"] = tol;
    j["rules"] = rules;
    j["sound"] = all;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const RuleReport& r : reports) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%-18s %6zu trials  max deviation %.3e  %s\n",
                    r.rule.c_str(), r.trials, r.max_deviation, r.sound ? "ok" : "FAIL");
      std::cout << buf;
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxkit: ZX-calculus diagrams, rewriting and circuit optimisation"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--max-legs", g.max_legs,
                 "Largest inputs+outputs count to evaluate (default 12, or ZX_MAX_LEGS)");

  std::string input, input_b, strategy = "full", out, report_path;
  std::vector<std::string> inputs;
  bool trace = false, up_to_scalar = false;
  int jobs = 1;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;

  auto* eval_cmd = app.add_subcommand("eval", "Print the matrix of a diagram or circuit");
  eval_cmd->add_option("input", input, ".zx.json or .qasm file")->required();

  auto* simp = app.add_subcommand("simplify", "Rewrite a diagram to normal form");
  simp->add_option("input", input, ".zx.json or .qasm file")->required();
  simp->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"full", "circuit-safe"}))
      ->capture_default_str();
  simp->add_flag("--trace", trace, "Print every rewrite step");
  simp->add_option("-o,--output", out, "Write the result to this .zx.json file");

  auto* opt = app.add_subcommand("optimize", "Optimise QASM circuits");
  opt->add_option("inputs", inputs, ".qasm files")->required();
  opt->add_option("-o,--output", out, "Output file (a directory for several inputs)");
  opt->add_option("--report", report_path, "Write a JSON report here");
  opt->add_option("--jobs", jobs, "Circuits to optimise in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* eq = app.add_subcommand("equal", "Compare the semantics of two inputs");
  eq->add_option("a", input, "First .zx.json or .qasm file")->required();
  eq->add_option("b", input_b, "Second .zx.json or .qasm file")->required();
  eq->add_flag("--up-to-scalar", up_to_scalar, "Allow a nonzero global factor");

  auto* val = app.add_subcommand("validate-rules", "Check every rule on random instances");
  val->add_option("--trials", trials)->capture_default_str();
  val->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval_cmd) return run_eval(g, input);
    if (*simp) return run_simplify(g, input, strategy, trace, out);
    if (*opt) return run_optimize(g, inputs, out, report_path, jobs);
    if (*eq) return run_equal(g, input, input_b, up_to_scalar);
    if (*val) return run_validate(g, trials, seed);
  } catch (const SoundnessViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
