#include "wpoly/config.hpp"

#include <fstream>
#include <sstream>

namespace wpoly {

void RunConfig::require_numeric() const {
  if (!params.numeric_positive())
    throw ConfigError("numeric suites need a,b,c,d,t > 0; got " + params.str());
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  auto as_rat = [&](const char* what) {
    try {
      return parse_rat(value);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("key ") + what + ": " + e.what());
    }
  };
  auto as_int = [&](const char* what) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
      return v;
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad integer for key ") + what + ": " + value);
    }
  };
  if (key == "n") {
    int n = as_int("n");
    if (n < 2) throw ConfigError("rank n must be >= 2");
    cfg.params.n = n;
  } else if (key == "t0")
    cfg.params.t0 = as_rat("t0");
  else if (key == "u0")
    cfg.params.u0 = as_rat("u0");
  else if (key == "t")
    cfg.params.t = as_rat("t");
  else if (key == "tn")
    cfg.params.tn = as_rat("tn");
  else if (key == "un")
    cfg.params.un = as_rat("un");
  else if (key == "degree")
    cfg.degree = as_int("degree");
  else if (key == "lambda_sum")
    cfg.lambda_sum = as_int("lambda_sum");
  else if (key == "truncation")
    cfg.quad.truncation = as_int("truncation");
  else if (key == "panels")
    cfg.quad.panels = as_int("panels");
  else if (key == "nodes")
    cfg.quad.nodes_per_panel = as_int("nodes");
  else if (key == "tol_scale") {
    try {
      std::size_t pos = 0;
      cfg.tol_scale = std::stod(value, &pos);
      if (pos != value.size() || cfg.tol_scale <= 0) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ConfigError("bad tol_scale: " + value);
    }
  } else if (key == "output")
    cfg.output = value;
  else
    throw ConfigError("unknown config key: " + key);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  bool saw[5] = {false, false, false, false, false};
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto strip = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    apply_config_entry(cfg, key, value);
    const char* names[5] = {"t0", "u0", "t", "tn", "un"};
    for (int i = 0; i < 5; ++i)
      if (key == names[i]) saw[i] = true;
  }
  const char* names[5] = {"t0", "u0", "t", "tn", "un"};
  for (int i = 0; i < 5; ++i)
    if (!saw[i]) throw ConfigError(std::string("missing key: ") + names[i]);
  return cfg;
}

}  // namespace wpoly
