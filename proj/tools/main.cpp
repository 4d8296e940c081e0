// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0
//
// diffent: Renyi information, Shannon entropy, and the log-likelihood shape
// index for stationary laws of scalar ergodic diffusions.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diffent/errors.hpp"
#include "diffent/measures.hpp"
#include "diffent/model_config.hpp"
#include "diffent/models.hpp"
#include "diffent/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace diffent;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kValidationFailed = 3,
  kIo = 4,
};

std::string fmt(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}
std::string fmt_csv(double v) { return fmt(v, 17); }
std::string fmt_human(double v) { return fmt(v, 10); }

struct CommonOpts {
  std::string model_path;
  std::vector<std::string> sets;
  std::string out_path;
  std::string format = "text";
  bool dump_config = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-m,--model", opts.model_path, "model configuration file");
  cmd->add_option("--set", opts.sets, "key=value override (repeatable)");
  cmd->add_option("--out", opts.out_path, "write the result table to this path");
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--dump-config", opts.dump_config,
                "print the canonical configuration and exit");
}

ModelConfig load_config(const CommonOpts& opts) {
  ModelConfig config;
  if (!opts.model_path.empty()) {
    config = ModelConfig::from_file(opts.model_path);
  }
  for (const auto& s : opts.sets) config.set(s);
  if (config.family.empty()) {
    throw std::invalid_argument("no model given: use --model <file> or --set family=<name>");
  }
  return config;
}

// Writes to the file when a path is set, to stdout otherwise.
int emit(const CommonOpts& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return kOk;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << opts.out_path << "' for writing\n";
    return kIo;
  }
  out << payload;
  if (!out.flush()) {
    std::cerr << "error: write to '" << opts.out_path << "' failed\n";
    return kIo;
  }
  return kOk;
}

const char* method_name(Method m) {
  return m == Method::closed_form ? "closed" : "quadrature";
}

// ---------------------------------------------------------------------------
// entropy

int run_entropy(const CommonOpts& opts, const std::string& measure,
                std::optional<double> alpha) {
  ModelConfig config = load_config(opts);
  if (opts.dump_config) {
    std::cout << config.dump();
    return kOk;
  }
  auto model = config.build();

  MeasureReport report;
  if (measure == "renyi") {
    if (!alpha) throw std::invalid_argument("--alpha is required for the renyi measure");
    if (auto closed = model->closed_renyi(*alpha)) {
      report.alpha = *alpha;
      report.value = *closed;
      report.method = Method::closed_form;
      report.abs_err_est = 1e-14 * (1.0 + std::fabs(*closed));
    } else {
      report = renyi_numeric(model->density(), *alpha);
    }
  } else if (measure == "shannon") {
    if (auto closed = model->closed_shannon()) {
      report.value = *closed;
      report.method = Method::closed_form;
      report.abs_err_est = 1e-14 * (1.0 + std::fabs(*closed));
    } else {
      report = shannon_numeric(model->density());
    }
  } else if (measure == "song") {
    if (auto closed = model->closed_song()) {
      report.value = *closed;
      report.method = Method::closed_form;
      report.abs_err_est = 1e-14 * (1.0 + std::fabs(*closed));
    } else {
      report = song_numeric(model->density());
    }
  } else {
    throw std::invalid_argument("unknown measure '" + measure + "'");
  }

  if (opts.format == "json") {
    json j{{"family", config.family},
           {"measure", measure},
           {"value", report.value},
           {"method", method_name(report.method)},
           {"abs_err_est", report.abs_err_est}};
    if (report.alpha) j["alpha"] = *report.alpha;
    return emit(opts, j.dump(2) + "\n");
  }
  std::ostringstream out;
  out << measure;
  if (report.alpha) out << "(alpha=" << fmt_human(*report.alpha) << ")";
  out << " = " << fmt_human(report.value) << "  [" << method_name(report.method)
      << ", err<=" << fmt(report.abs_err_est, 3) << "]\n";
  return emit(opts, out.str());
}

// ---------------------------------------------------------------------------
// spectrum

int run_spectrum(const CommonOpts& opts, double alpha_min, double alpha_max, int steps) {
  ModelConfig config = load_config(opts);
  if (opts.dump_config) {
    std::cout << config.dump();
    return kOk;
  }
  if (!(alpha_min > 0.0) || !(alpha_max > alpha_min) || steps < 2) {
    throw std::invalid_argument("spectrum needs 0 < alpha-min < alpha-max and steps >= 2");
  }
  auto model = config.build();
  std::vector<double> grid = geometric_alpha_grid(alpha_min, alpha_max, steps);
  // alpha = 1 is always supplied by the Shannon row
  std::erase_if(grid, [](double a) { return std::fabs(a - 1.0) < 1e-6; });
  SpectrumTable table = compute_spectrum(*model, grid);

  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json r{{"alpha", row.alpha},
             {"method", method_name(row.method)},
             {"flag", row.divergent() ? "divergent" : ""}};
      if (row.renyi) {
        r["renyi"] = *row.renyi;
        r["err"] = row.err;
      } else {
        r["renyi"] = nullptr;
        r["err"] = nullptr;
      }
      rows.push_back(std::move(r));
    }
    return emit(opts, json{{"family", config.family}, {"rows", rows}}.dump(2) + "\n");
  }

  std::ostringstream out;
  out << "alpha,renyi,method,err,flag\n";
  for (const auto& row : table.rows) {
    out << fmt_csv(row.alpha) << ',';
    if (row.renyi) {
      out << fmt_csv(*row.renyi) << ',' << method_name(row.method) << ','
          << fmt_csv(row.err) << ",\n";
    } else {
      out << ',' << method_name(row.method) << ",,divergent\n";
    }
  }
  return emit(opts, out.str());
}

// ---------------------------------------------------------------------------
// validate

struct ValidationRow {
  std::string alpha_label;  // order, "1" for Shannon, empty for the shape row
  double closed = 0.0;
  double numeric = 0.0;
  double abs_diff = 0.0;
  std::string status;  // pass | fail | informational
};

int run_validate(const CommonOpts& opts, std::vector<double> alphas, double tol) {
  ModelConfig config = load_config(opts);
  if (opts.dump_config) {
    std::cout << config.dump();
    return kOk;
  }
  auto model = config.build();
  if (alphas.empty()) alphas = {0.6, 2.0, 3.0};
  const double song_tol = std::max(tol, 1e-4);

  std::vector<ValidationRow> rows;
  auto push = [&rows](const std::string& label, double closed, double numeric, double tol_row,
                      bool informational = false) {
    ValidationRow r;
    r.alpha_label = label;
    r.closed = closed;
    r.numeric = numeric;
    r.abs_diff = std::fabs(closed - numeric);
    r.status = informational ? "informational" : (r.abs_diff <= tol_row ? "pass" : "fail");
    rows.push_back(std::move(r));
  };

  const LogDensity density = model->density();

  if (auto* p4 = dynamic_cast<const models::PearsonTypeIV*>(model.get())) {
    // closed forms exist only at the special orders; validate those
    using Branch = models::PearsonTypeIV::Branch;
    for (int m : {1, 2}) {
      for (Branch branch : {Branch::even, Branch::half}) {
        const double alpha = p4->special_order(m, branch);
        const double closed = p4->renyi_special(m, branch);
        const double numeric = p4->renyi_cos_form(alpha).value;
        push(fmt_csv(alpha), closed, numeric, tol);
      }
    }
    if (p4->a() == 1.0) {
      auto dual = p4->shannon_a1();
      push("1", dual.formula_value, dual.oracle.value, tol, /*informational=*/true);
    }
  } else {
    for (double alpha : alphas) {
      try {
        auto closed = model->closed_renyi(alpha);
        if (!closed) continue;
        const double numeric = renyi_numeric(density, alpha).value;
        push(fmt_csv(alpha), *closed, numeric, tol);
      } catch (const divergence_error&) {
        // order outside the validity region: nothing to compare
      }
    }
    if (auto closed = model->closed_shannon()) {
      push("1", *closed, shannon_numeric(density).value, tol);
    }
    if (auto closed = model->closed_song()) {
      push("", *closed, song_from_spectrum(*model, 1e-3).value, song_tol);
    }
  }

  if (rows.empty()) {
    throw std::invalid_argument("family '" + config.family + "' has no closed forms to validate");
  }

  bool all_pass = true;
  for (const auto& r : rows) all_pass = all_pass && r.status != "fail";

  if (opts.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      jrows.push_back(json{{"alpha", r.alpha_label},
                           {"closed", r.closed},
                           {"numeric", r.numeric},
                           {"abs_diff", r.abs_diff},
                           {"pass", r.status}});
    }
    const int rc =
        emit(opts, json{{"family", config.family}, {"rows", jrows}, {"all_pass", all_pass}}
                       .dump(2) +
                       "\n");
    return rc != kOk ? rc : (all_pass ? kOk : kValidationFailed);
  }

  std::ostringstream out;
  out << "alpha,closed,numeric,abs_diff,pass\n";
  for (const auto& r : rows) {
    out << r.alpha_label << ',' << fmt_csv(r.closed) << ',' << fmt_csv(r.numeric) << ','
        << fmt_csv(r.abs_diff) << ',' << r.status << '\n';
  }
  const int rc = emit(opts, out.str());
  return rc != kOk ? rc : (all_pass ? kOk : kValidationFailed);
}

// ---------------------------------------------------------------------------
// divergence

int run_divergence(const CommonOpts& opts, const std::string& model2_path,
                   const std::vector<std::string>& sets2, double alpha) {
  ModelConfig config_f = load_config(opts);
  CommonOpts opts2;
  opts2.model_path = model2_path;
  opts2.sets = sets2;
  ModelConfig config_g = load_config(opts2);
  if (opts.dump_config) {
    std::cout << config_f.dump() << config_g.dump();
    return kOk;
  }
  auto f = config_f.build();
  auto g = config_g.build();
  MeasureReport d = renyi_divergence(f->density(), g->density(), alpha);
  MeasureReport psi = power_divergence(f->density(), g->density(), alpha);

  if (opts.format == "json") {
    json j{{"family_f", config_f.family},
           {"family_g", config_g.family},
           {"alpha", alpha},
           {"renyi_divergence", d.value},
           {"power_divergence", psi.value},
           {"abs_err_est", d.abs_err_est}};
    return emit(opts, j.dump(2) + "\n");
  }
  std::ostringstream out;
  out << "D(alpha=" << fmt_human(alpha) << ") = " << fmt_human(d.value)
      << "  [quadrature, err<=" << fmt(d.abs_err_est, 3) << "]\n"
      << "Psi(alpha=" << fmt_human(alpha) << ") = " << fmt_human(psi.value) << "\n";
  return emit(opts, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diffent: information measures of stationary laws of scalar ergodic diffusions"};
  app.require_subcommand(1);

  CommonOpts entropy_opts, spectrum_opts, validate_opts, divergence_opts;

  auto* entropy = app.add_subcommand("entropy", "compute one measure for one model");
  add_common(entropy, entropy_opts);
  std::string measure;
  entropy->add_option("--measure", measure, "renyi | shannon | song")
      ->required()
      ->check(CLI::IsMember({"renyi", "shannon", "song"}));
  double entropy_alpha = std::numeric_limits<double>::quiet_NaN();
  auto* alpha_opt = entropy->add_option("--alpha", entropy_alpha, "order for the renyi measure");

  auto* spectrum = app.add_subcommand("spectrum", "tabulate R_alpha over an order grid");
  add_common(spectrum, spectrum_opts);
  double alpha_min = 0.25, alpha_max = 16.0;
  int steps = 33;
  spectrum->add_option("--alpha-min", alpha_min, "smallest order (default 0.25)");
  spectrum->add_option("--alpha-max", alpha_max, "largest order (default 16)");
  spectrum->add_option("--steps", steps, "number of grid points (default 33)");

  auto* validate = app.add_subcommand(
      "validate", "compare closed forms against the quadrature oracle");
  add_common(validate, validate_opts);
  std::vector<double> validate_alphas;
  double validate_tol = 1e-6;
  validate->add_option("--alpha", validate_alphas, "orders to validate (default 0.6 2 3)");
  validate->add_option("--tol", validate_tol, "pass tolerance (default 1e-6)");

  auto* divergence = app.add_subcommand(
      "divergence", "Renyi and power divergence between two models");
  add_common(divergence, divergence_opts);
  std::string model2;
  std::vector<std::string> sets2;
  double div_alpha = 0.5;
  divergence->add_option("-n,--model2", model2, "second model configuration file");
  divergence->add_option("--set2", sets2, "key=value override for the second model");
  divergence->add_option("--alpha", div_alpha, "divergence order (default 0.5)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (entropy->parsed()) {
      std::optional<double> alpha;
      if (alpha_opt->count() > 0) alpha = entropy_alpha;
      return run_entropy(entropy_opts, measure, alpha);
    }
    if (spectrum->parsed()) {
      return run_spectrum(spectrum_opts, alpha_min, alpha_max, steps);
    }
    if (validate->parsed()) {
      return run_validate(validate_opts, validate_alphas, validate_tol);
    }
    if (divergence->parsed()) {
      return run_divergence(divergence_opts, model2, sets2, div_alpha);
    }
  } catch (const divergence_error& ex) {
    std::cerr << "divergence error: " << ex.what() << "\n";
    return kDomain;
  } catch (const not_ergodic_error& ex) {
    std::cerr << "not ergodic: " << ex.what() << "\n";
    return kDomain;
  } catch (const support_error& ex) {
    std::cerr << "support error: " << ex.what() << "\n";
    return kDomain;
  } catch (const integration_error& ex) {
    std::cerr << "integration error: " << ex.what() << "\n";
    return kDomain;
  } catch (const std::domain_error& ex) {
    std::cerr << "domain error: " << ex.what() << "\n";
    return kDomain;
  } catch (const std::overflow_error& ex) {
    std::cerr << "overflow: " << ex.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kIo;
  }
  return kUsage;
}
