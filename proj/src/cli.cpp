// Copyright 2026 The ngs Authors
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

#include "ngs/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ngs/noisy_analytic.hpp"
#include "ngs/verification.hpp"

namespace ngs::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Row = std::vector<std::string>;

// Buffers the CSV so nothing is written when a later row fails.
struct Table {
  Row header;
  std::vector<Row> rows;
};

void write_table(const Table& table, const RunConfig& config, std::ostream& out) {
  std::ostringstream text;
  const auto write_row = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << row[i];
    text << '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);

  if (config.out.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + config.out + " for writing");
  file << text.str();
  if (!file) throw std::runtime_error("failed writing " + config.out);
}

std::string fmt_int(std::size_t v) { return std::to_string(v); }

void require_size(const RunConfig& config) {
  if (config.size == 0) throw UsageError(config.command + " requires --n");
}

void require_p(const RunConfig& config) {
  if (config.p.empty()) throw UsageError(config.command + " requires --p");
}

std::vector<double> sorted(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<double> p_grid_or_default(const RunConfig& config) {
  return config.p.empty() ? default_p_grid(config.size, config.points) : sorted(config.p);
}

int cmd_curve(const RunConfig& config, std::ostream& out) {
  require_size(config);
  require_p(config);
  const DatabaseSpec db(config.size);
  Table table{{"m", "p", "prob"}, {}};
  for (double p : sorted(config.p)) {
    const auto curve = probability_curve(db, NoiseSpec(p), std::nullopt, config.m_upper);
    for (const auto& pt : curve.points) {
      table.rows.push_back({fmt_int(pt.m), format_real(p), format_real(pt.prob)});
    }
  }
  write_table(table, config, out);
  return kOk;
}

int cmd_povm_curve(const RunConfig& config, std::ostream& out) {
  require_size(config);
  require_p(config);
  const DatabaseSpec db(config.size);
  const PovmSpec povm(config.epsilon, config.outcomes.value_or(config.size + 3));
  Table table{{"m", "p", "epsilon", "r", "prob_ortho", "prob_povm"}, {}};
  for (double p : sorted(config.p)) {
    const NoiseSpec noise(p);
    const auto ortho = probability_curve(db, noise, std::nullopt, config.m_upper);
    const auto smeared = probability_curve(db, noise, povm, config.m_upper);
    for (std::size_t i = 0; i < ortho.points.size(); ++i) {
      table.rows.push_back({fmt_int(ortho.points[i].m), format_real(p),
                            format_real(povm.epsilon()), fmt_int(povm.outcomes()),
                            format_real(ortho.points[i].prob),
                            format_real(smeared.points[i].prob)});
    }
  }
  write_table(table, config, out);
  return kOk;
}

int cmd_pcrit(const RunConfig& config, std::ostream& out) {
  require_size(config);
  const auto pc = critical_p(config.size, config.rule);
  const std::string p_text = pc ? format_real(pc->p_c) : "none";
  out << "n=" << format_real(std::log2(static_cast<double>(config.size)))
      << ",N=" << config.size << ",p_c=" << p_text << '\n';
  if (!config.out.empty()) {
    Table table{{"n", "N", "p_c"}, {}};
    table.rows.push_back({format_real(std::log2(static_cast<double>(config.size))),
                          fmt_int(config.size), p_text});
    write_table(table, config, out);
  }
  return kOk;
}

int cmd_pc_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto sweep = pc_sweep(config.n_min, config.n_max, config.rule);
  Table table{{"n", "N", "p_c"}, {}};
  for (const auto& row : sweep) {
    table.rows.push_back({format_real(row.n), fmt_int(row.size), format_real(row.p_c)});
  }
  write_table(table, config, out);
  if (sweep.size() >= 2) {
    err << "loglog_slope=" << format_real(loglog_slope(sweep)) << '\n';
  }
  return kOk;
}

int cmd_mmax(const RunConfig& config, std::ostream& out) {
  require_size(config);
  const DatabaseSpec db(config.size);
  Table table{{"p", "m_continuous", "m_integer", "peak_prob"}, {}};
  for (const auto& sample : mmax_sweep(db, p_grid_or_default(config))) {
    table.rows.push_back({format_real(sample.p), format_real(sample.peak.m_continuous),
                          fmt_int(sample.peak.m_integer), format_real(sample.peak.peak_prob)});
  }
  write_table(table, config, out);
  return kOk;
}

int cmd_fit(const RunConfig& config, std::ostream& out) {
  require_size(config);
  const DatabaseSpec db(config.size);
  const auto fit = fit_mmax_vs_p(db, p_grid_or_default(config));
  Table table{{"N", "intercept", "slope"}, {}};
  table.rows.push_back({fmt_int(config.size), format_real(fit.intercept), format_real(fit.slope)});
  write_table(table, config, out);
  return kOk;
}

int cmd_surface(const RunConfig& config, std::ostream& out) {
  require_size(config);
  const DatabaseSpec db(config.size);
  Table table{{"m", "p", "prob"}, {}};
  for (const auto& pt : probability_surface(db, p_grid_or_default(config), config.m_upper)) {
    table.rows.push_back({fmt_int(pt.m), format_real(pt.p), format_real(pt.prob)});
  }
  write_table(table, config, out);
  return kOk;
}

int cmd_compare_rules(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_size(config);
  const DatabaseSpec db(config.size);
  const auto grid = p_grid_or_default(config);
  const auto fit = fit_mmax_vs_p(db, grid);
  const auto rows = compare_iteration_rules(db, fit, grid);
  Table table{{"p", "m_fit", "m_pi", "prob_fit", "prob_pi", "abs_diff"}, {}};
  for (const auto& r : rows) {
    table.rows.push_back({format_real(r.p), fmt_int(r.m_fit), fmt_int(r.m_pi),
                          format_real(r.prob_fit), format_real(r.prob_pi),
                          format_real(r.abs_diff)});
  }
  write_table(table, config, out);
  err << "max_abs_diff=" << format_real(max_abs_difference(rows)) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  VerificationOptions options;
  options.max_size = config.max_size;
  options.seed = config.seed;
  if (options.max_size < 2) throw UsageError("--max-n must be at least 2");
  require_dense(options.max_size);

  const auto report = run_verification(options);
  Table table{{"check", "count", "failures", "max_error"}, {}};
  for (const auto& t : report.tallies) {
    table.rows.push_back(
        {t.name, fmt_int(t.checks), fmt_int(t.failures), fmt::format("{:.3e}", t.max_error)});
  }
  write_table(table, config, out);
  if (!report.passed()) {
    err << "verification failed: " << report.first_failure() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not a number: '" + item + "'");
    values.push_back(value);
  }
  if (values.empty() || text.back() == ',') {
    throw std::invalid_argument("malformed p list: '" + text + "'");
  }
  return values;
}

std::string format_real(double value) { return fmt::format("{:.12g}", value); }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& c = config.command;
    if (c == "curve") return cmd_curve(config, out);
    if (c == "povm-curve") return cmd_povm_curve(config, out);
    if (c == "pcrit") return cmd_pcrit(config, out);
    if (c == "pc-sweep") return cmd_pc_sweep(config, out, err);
    if (c == "mmax") return cmd_mmax(config, out);
    if (c == "fit") return cmd_fit(config, out);
    if (c == "surface") return cmd_surface(config, out);
    if (c == "compare-rules") return cmd_compare_rules(config, out, err);
    if (c == "verify") return cmd_verify(config, out, err);
    err << "error: unknown command '" << c << "'\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionFailed;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover search under depolarizing noise: probability tables and verification"};
  app.require_subcommand(1);

  RunConfig config;
  std::string p_text;
  std::string rule_text = "int";
  std::size_t outcomes = 0;

  const auto add_size = [&](CLI::App* sub) {
    sub->add_option("--n", config.size, "Database size N")->required()->check(CLI::Range(2, 1 << 30));
  };
  const auto add_p = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", p_text, "Comma-separated noise strengths");
    if (required) opt->required();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "CSV output path (default stdout)");
  };
  const auto add_rule = [&](CLI::App* sub) {
    sub->add_option("--m-rule", rule_text, "Iteration count rule")
        ->check(CLI::IsMember({"int", "argmax"}));
  };
  const auto add_m_upper = [&](CLI::App* sub) {
    sub->add_option("--m-upper", config.m_upper, "Largest iteration count")->capture_default_str();
  };
  const auto add_points = [&](CLI::App* sub) {
    sub->add_option("--points", config.points, "Size of the default p grid on [0, p_c]")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
  };

  auto* curve = app.add_subcommand("curve", "Success probability against m");
  add_size(curve);
  add_p(curve, true);
  add_m_upper(curve);
  add_out(curve);

  auto* povm_curve = app.add_subcommand("povm-curve", "Orthogonal and POVM success probability");
  add_size(povm_curve);
  add_p(povm_curve, true);
  povm_curve->add_option("--epsilon", config.epsilon, "Detector error")->capture_default_str();
  povm_curve->add_option("--r", outcomes, "Number of POVM outcomes (default N+3)");
  add_m_upper(povm_curve);
  add_out(povm_curve);

  auto* pcrit = app.add_subcommand("pcrit", "Critical noise strength for one N");
  add_size(pcrit);
  add_rule(pcrit);
  add_out(pcrit);

  auto* sweep = app.add_subcommand("pc-sweep", "Critical noise strength for N = 2^n");
  sweep->add_option("--n-min", config.n_min, "Smallest exponent")->capture_default_str();
  sweep->add_option("--n-max", config.n_max, "Largest exponent")->capture_default_str();
  add_rule(sweep);
  add_out(sweep);

  auto* mmax = app.add_subcommand("mmax", "Noisy peak location against p");
  add_size(mmax);
  add_p(mmax, false);
  add_points(mmax);
  add_out(mmax);

  auto* fit = app.add_subcommand("fit", "Linear fit of the peak location against p");
  add_size(fit);
  add_p(fit, false);
  add_points(fit);
  add_out(fit);

  auto* surface = app.add_subcommand("surface", "Long-format (m, p, prob) table");
  add_size(surface);
  add_p(surface, false);
  add_points(surface);
  add_m_upper(surface);
  add_out(surface);

  auto* compare = app.add_subcommand("compare-rules", "Fitted iteration rule against pi sqrt(N)/4");
  add_size(compare);
  add_p(compare, false);
  add_points(compare);
  add_out(compare);

  auto* verify = app.add_subcommand("verify", "Analytic formulas against the dense simulator");
  verify->add_option("--max-n", config.max_size, "Largest N (powers of two from 2)")
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Seed for random test states")->capture_default_str();
  add_out(verify);

  try {
    app.parse(argc, argv);
    config.command = app.get_subcommands().front()->get_name();
    if (!p_text.empty()) config.p = parse_p_list(p_text);
    config.rule = rule_text == "argmax" ? IterationRule::IntegerArgmax : IterationRule::FloorQuarterPiSqrtN;
    if (outcomes != 0) config.outcomes = outcomes;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return run(config, out, err);
}

}  // namespace ngs::cli
