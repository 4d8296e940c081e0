// Copyright (c) 2026 The diffent authors
// SPDX-License-Identifier: Apache-2.0

#include "diffent/model_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "diffent/exponential_family.hpp"
#include "diffent/expression.hpp"

namespace diffent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t == "inf" || t == "+inf") {
    out = kInf;
    return true;
  }
  if (t == "-inf") {
    out = -kInf;
    return true;
  }
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && !t.empty();
}

std::string format_number(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool is_expression_key(const std::string& family, const std::string& key) {
  if (family == "custom") return key == "drift" || key == "diffusion2";
  if (family == "expfam") {
    if (key == "sigma") return true;
    return key.size() > 1 && key[0] == 'b' &&
           std::all_of(key.begin() + 1, key.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }
  return false;
}

const std::map<std::string, std::map<std::string, double>>& family_defaults() {
  static const std::map<std::string, std::map<std::string, double>> defaults = {
      {"ou", {{"theta", 1.0}, {"mu", 0.0}}},
      {"cir", {{"theta", 1.0}, {"mu", 2.0}}},
      {"pearson4", {{"a", 1.0}, {"mu", 0.0}, {"theta", 1.0}}},
      {"invgamma", {{"a", 1.0}, {"mu", 1.0}, {"theta", 1.0}}},
      {"scaledf", {{"a", 1.0}, {"mu", 1.0}, {"theta", 1.0}}},
      {"jacobi", {{"a", -0.25}, {"mu", 0.5}, {"theta", 1.0}}},
      {"gig",
       {{"gamma", 0.5}, {"lambda", 1.0}, {"theta1", 1.5}, {"theta2", 1.0}, {"theta3", 1.0}}},
      {"hyperbolic",
       {{"gamma", 1.0}, {"beta", 0.0}, {"delta", 1.0}, {"mu", 0.0}, {"sigma", 1.0}}},
      {"skewt", {{"gamma", 3.0}, {"beta", 3.0}, {"sigma", 1.0}}},
      {"custom", {{"lower", -kInf}, {"upper", kInf}, {"xtilde", 0.0}}},
      {"expfam", {{"p", 1.0}, {"lower", -kInf}, {"upper", kInf}, {"x0", 0.0}, {"lambda", 1.0}}},
  };
  return defaults;
}

double get_param(const ModelConfig& c, const std::string& key) {
  auto it = c.params.find(key);
  if (it != c.params.end()) return it->second;
  const auto& defs = family_defaults().at(c.family);
  auto dit = defs.find(key);
  if (dit != defs.end()) return dit->second;
  throw std::invalid_argument("model config: missing parameter '" + key + "' for family " +
                              c.family);
}

Expression parse_probed_expression(const std::string& key, const std::string& text,
                                   const Interval& domain) {
  Expression e = Expression::parse(text);
  // reject up front any expression that misbehaves on the state space
  for (int i = 1; i < 33; ++i) {
    const double t = i / 33.0;
    double x;
    if (domain.bounded()) {
      x = domain.lower + t * (domain.upper - domain.lower);
    } else if (domain.bounded_below()) {
      x = domain.lower + t / (1.0 - t);
    } else if (domain.bounded_above()) {
      x = domain.upper - t / (1.0 - t);
    } else {
      x = (2.0 * t - 1.0) / (t * (1.0 - t));
    }
    if (!std::isfinite(e(x))) {
      throw std::invalid_argument("model config: expression '" + key +
                                  "' is not finite at probe point x = " + format_number(x));
    }
  }
  return e;
}

}  // namespace

ModelConfig ModelConfig::parse(const std::string& text) {
  ModelConfig c;
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> entries;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("model config: line " + std::to_string(lineno) +
                                  " is not of the form key = value");
    }
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  for (const auto& [key, value] : entries) {
    if (key == "family") {
      c.family = value;
      break;
    }
  }
  if (c.family.empty()) throw std::invalid_argument("model config: missing 'family' key");
  if (!family_defaults().count(c.family)) {
    throw std::invalid_argument("model config: unknown family '" + c.family + "'");
  }
  for (const auto& [key, value] : entries) {
    if (key == "family") continue;
    if (is_expression_key(c.family, key)) {
      c.expressions[key] = value;
    } else {
      double v;
      if (!parse_number(value, v)) {
        throw std::invalid_argument("model config: parameter '" + key +
                                    "' has non-numeric value '" + value + "'");
      }
      c.params[key] = v;
    }
  }
  return c;
}

ModelConfig ModelConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("model config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void ModelConfig::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("--set expects key=value, got '" + assignment + "'");
  }
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  if (key == "family") {
    if (!family_defaults().count(value)) {
      throw std::invalid_argument("model config: unknown family '" + value + "'");
    }
    family = value;
    return;
  }
  if (family.empty()) throw std::invalid_argument("--set: set family first");
  if (is_expression_key(family, key)) {
    expressions[key] = value;
  } else {
    double v;
    if (!parse_number(value, v)) {
      throw std::invalid_argument("--set: parameter '" + key + "' has non-numeric value '" +
                                  value + "'");
    }
    params[key] = v;
  }
}

std::string ModelConfig::dump() const {
  std::ostringstream out;
  out << "family = " << family << "\n";
  for (const auto& [k, v] : params) out << k << " = " << format_number(v) << "\n";
  for (const auto& [k, v] : expressions) out << k << " = " << v << "\n";
  return out.str();
}

std::unique_ptr<models::Model> ModelConfig::build(const Tolerances& tols) const {
  using namespace models;
  if (!family_defaults().count(family)) {
    throw std::invalid_argument("model config: unknown family '" + family + "'");
  }

  // reject typos: every given numeric key must be known to the family
  const auto& defs = family_defaults().at(family);
  for (const auto& [k, _] : params) {
    if (!defs.count(k) && !(family == "expfam" && k.rfind("theta", 0) == 0)) {
      throw std::invalid_argument("model config: unknown parameter '" + k + "' for family " +
                                  family);
    }
  }
  for (const auto& [k, _] : expressions) {
    if (!is_expression_key(family, k)) {
      throw std::invalid_argument("model config: unexpected expression key '" + k + "'");
    }
  }

  if (family == "ou") {
    return std::make_unique<OrnsteinUhlenbeck>(get_param(*this, "theta"), get_param(*this, "mu"));
  }
  if (family == "cir") {
    return std::make_unique<CoxIngersollRoss>(get_param(*this, "theta"), get_param(*this, "mu"));
  }
  if (family == "pearson4") {
    return std::make_unique<PearsonTypeIV>(get_param(*this, "a"), get_param(*this, "mu"),
                                           get_param(*this, "theta"));
  }
  if (family == "invgamma") {
    return std::make_unique<InverseGammaDiffusion>(get_param(*this, "a"), get_param(*this, "mu"),
                                                   get_param(*this, "theta"));
  }
  if (family == "scaledf") {
    return std::make_unique<ScaledF>(get_param(*this, "a"), get_param(*this, "mu"),
                                     get_param(*this, "theta"));
  }
  if (family == "jacobi") {
    return std::make_unique<JacobiDiffusion>(get_param(*this, "a"), get_param(*this, "mu"),
                                             get_param(*this, "theta"));
  }
  if (family == "gig") {
    return std::make_unique<GeneralizedInverseGaussian>(
        get_param(*this, "gamma"), get_param(*this, "lambda"), get_param(*this, "theta1"),
        get_param(*this, "theta2"), get_param(*this, "theta3"));
  }
  if (family == "hyperbolic") {
    return std::make_unique<HyperbolicDiffusion>(get_param(*this, "gamma"),
                                                 get_param(*this, "beta"),
                                                 get_param(*this, "delta"),
                                                 get_param(*this, "mu"),
                                                 get_param(*this, "sigma"));
  }
  if (family == "skewt") {
    return std::make_unique<SkewStudentT>(get_param(*this, "gamma"), get_param(*this, "beta"),
                                          get_param(*this, "sigma"));
  }
  if (family == "custom") {
    Interval dom{get_param(*this, "lower"), get_param(*this, "upper")};
    auto drift_it = expressions.find("drift");
    auto diff_it = expressions.find("diffusion2");
    if (drift_it == expressions.end() || diff_it == expressions.end()) {
      throw std::invalid_argument("model config: custom family needs drift and diffusion2");
    }
    Expression drift = parse_probed_expression("drift", drift_it->second, dom);
    Expression diff2 = parse_probed_expression("diffusion2", diff_it->second, dom);
    DiffusionSpec spec;
    spec.drift = [drift](double x) { return drift(x); };
    spec.squared_diffusion = [diff2](double x) { return diff2(x); };
    spec.state_space = dom;
    spec.reference_point = get_param(*this, "xtilde");
    if (!dom.contains(spec.reference_point)) {
      throw std::invalid_argument("model config: xtilde must be inside (lower, upper)");
    }
    for (int i = 1; i < 33; ++i) {  // sigma^2 must be positive on the probe grid
      const double t = i / 33.0;
      double x = dom.bounded() ? dom.lower + t * (dom.upper - dom.lower)
                               : spec.reference_point + std::tan(3.0 * (t - 0.5));
      if (dom.contains(x) && !(spec.squared_diffusion(x) > 0.0)) {
        throw std::invalid_argument("model config: diffusion2 must be positive on the domain");
      }
    }
    return std::make_unique<CustomDiffusion>(std::move(spec), tols);
  }
  if (family == "expfam") {
    const int p = static_cast<int>(get_param(*this, "p"));
    if (p < 1 || p > 16) throw std::invalid_argument("model config: expfam needs 1 <= p <= 16");
    Interval dom{get_param(*this, "lower"), get_param(*this, "upper")};
    ExpFamSpec spec;
    spec.state_space = dom;
    spec.x0 = get_param(*this, "x0");
    spec.lambda = get_param(*this, "lambda");
    auto sig_it = expressions.find("sigma");
    if (sig_it == expressions.end()) {
      throw std::invalid_argument("model config: expfam needs a sigma expression");
    }
    Expression sigma = parse_probed_expression("sigma", sig_it->second, dom);
    spec.sigma = [sigma](double x) { return sigma(x); };
    for (int i = 1; i <= p; ++i) {
      const std::string bkey = "b" + std::to_string(i);
      const std::string tkey = "theta" + std::to_string(i);
      auto bit = expressions.find(bkey);
      if (bit == expressions.end()) {
        throw std::invalid_argument("model config: expfam missing basis expression " + bkey);
      }
      Expression b = parse_probed_expression(bkey, bit->second, dom);
      spec.basis.push_back([b](double x) { return b(x); });
      auto tit = params.find(tkey);
      if (tit == params.end()) {
        throw std::invalid_argument("model config: expfam missing weight " + tkey);
      }
      spec.weights.push_back(tit->second);
    }
    return std::make_unique<ExponentialFamily>(std::move(spec), tols);
  }
  throw std::invalid_argument("model config: unknown family '" + family + "'");
}

}  // namespace diffent
