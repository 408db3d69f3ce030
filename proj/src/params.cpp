#include "cyclescrub/params.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "cyclescrub/graph.hpp"

namespace cyclescrub {

namespace {

std::uint64_t ceil_count(double x) {
  if (!(x > 1.0)) return 1;
  return static_cast<std::uint64_t>(std::ceil(x));
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty() || value[0] == '-') {
    throw std::invalid_argument("config key '" + key + "' expects a count, got '" + value + "'");
  }
  return v;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw std::invalid_argument("config key '" + key + "' expects a number, got '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("config key '" + key + "' expects true/false, got '" + value + "'");
}

}  // namespace

DensePieceParams derive_params(const DensePieceConfig& config, std::size_t n) {
  if (config.k < 3) throw std::invalid_argument("k must be at least 3");
  if (config.omega < 2.0 || config.omega >= 3.0) {
    throw std::invalid_argument("omega must lie in [2, 3)");
  }
  DensePieceParams p;
  p.n = n;
  p.k = config.k;
  p.omega = config.omega;
  p.epsilon = config.epsilon.value_or((3.0 - config.omega) / 8.0);
  if (p.epsilon <= 0.0 || p.epsilon >= (3.0 - config.omega) / 4.0) {
    throw std::invalid_argument("epsilon must lie in (0, (3 - omega) / 4)");
  }
  p.gamma = config.gamma.value_or((config.omega - 1.0) / 4.0 + p.epsilon);
  if (p.gamma < 0.0 || p.gamma >= 0.5) throw std::invalid_argument("gamma must lie in [0, 1/2)");
  p.beta = (3.0 - config.omega) / 4.0;

  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  const double lg = std::log2(nn);
  const double shrink = std::pow(nn, 0.5 - p.gamma);
  p.path_samples = config.path_samples.value_or(ceil_count(100.0 * shrink * lg));
  p.pair_samples = config.pair_samples.value_or(ceil_count(200.0 * shrink * lg));
  p.hit_threshold = config.hit_threshold.value_or(ceil_count(50.0 * lg));
  p.density_floor = config.density_floor.value_or(ceil_count(std::pow(nn, 0.5 + p.gamma) / 200.0));
  p.iteration_cap = config.iteration_cap.value_or(ceil_count(200.0 * std::pow(nn, 1.0 - p.gamma)));
  p.exact_fallback = config.exact_fallback;
  p.degree_bound = isqrt(n);
  if (p.path_samples == 0 || p.pair_samples == 0 || p.hit_threshold == 0 || p.iteration_cap == 0) {
    throw std::invalid_argument("sample counts, hit threshold and iteration cap must be positive");
  }
  return p;
}

DensePieceConfig parse_config(std::istream& in) {
  DensePieceConfig c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "k") c.k = static_cast<int>(parse_count(key, value));
    else if (key == "omega") c.omega = parse_real(key, value);
    else if (key == "epsilon") c.epsilon = parse_real(key, value);
    else if (key == "gamma") c.gamma = parse_real(key, value);
    else if (key == "path_samples") c.path_samples = parse_count(key, value);
    else if (key == "pair_samples") c.pair_samples = parse_count(key, value);
    else if (key == "hit_threshold") c.hit_threshold = parse_count(key, value);
    else if (key == "density_floor") c.density_floor = parse_count(key, value);
    else if (key == "iteration_cap") c.iteration_cap = parse_count(key, value);
    else if (key == "exact_fallback") c.exact_fallback = parse_bool(key, value);
    else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

DensePieceConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string format_config(const DensePieceConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "k = " << c.k << '\n' << "omega = " << c.omega << '\n';
  if (c.epsilon) out << "epsilon = " << *c.epsilon << '\n';
  if (c.gamma) out << "gamma = " << *c.gamma << '\n';
  if (c.path_samples) out << "path_samples = " << *c.path_samples << '\n';
  if (c.pair_samples) out << "pair_samples = " << *c.pair_samples << '\n';
  if (c.hit_threshold) out << "hit_threshold = " << *c.hit_threshold << '\n';
  if (c.density_floor) out << "density_floor = " << *c.density_floor << '\n';
  if (c.iteration_cap) out << "iteration_cap = " << *c.iteration_cap << '\n';
  out << "exact_fallback = " << (c.exact_fallback ? "true" : "false") << '\n';
  return out.str();
}

nlohmann::json to_json(const DensePieceParams& p) {
  return {{"n", p.n},
          {"k", p.k},
          {"omega", p.omega},
          {"epsilon", p.epsilon},
          {"gamma", p.gamma},
          {"beta", p.beta},
          {"path_samples", p.path_samples},
          {"pair_samples", p.pair_samples},
          {"hit_threshold", p.hit_threshold},
          {"density_floor", p.density_floor},
          {"iteration_cap", p.iteration_cap},
          {"exact_fallback", p.exact_fallback},
          {"degree_bound", p.degree_bound}};
}

}  // namespace cyclescrub
