// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catlab_cli/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace catlab::cli {

namespace {

const std::set<std::string> kPhysicalKeys = {"g", "Delta", "E_drive", "E_drive_im", "t"};
const std::set<std::string> kDimensionlessKeys = {"lambda", "lambda_im", "chit"};
const std::set<std::string> kSweepableShared = {"theta", "phi", "mu", "point_re", "point_im"};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool has_any(const KeyValues& kv, const std::set<std::string>& keys) {
  return std::any_of(keys.begin(), keys.end(), [&](const auto& k) { return kv.contains(k); });
}

void erase_keys(KeyValues& kv, const std::set<std::string>& keys) {
  for (const auto& k : keys) kv.erase(k);
}

std::string get(const KeyValues& kv, const std::string& key, const std::string& fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "g",         "Delta",       "E_drive",    "E_drive_im", "t",        "lambda",
      "lambda_im", "chit",        "theta",      "phi",        "state_kind", "mu",
      "tail_tol",  "sweep_param", "sweep_start", "sweep_stop", "sweep_count", "l",
      "l_max",     "kind",        "convention", "re_min",     "re_max",   "im_min",
      "im_max",    "re_count",    "im_count",   "point_re",   "point_im", "level"};
  return keys;
}

double parse_number(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  if (s == "pi") return std::numbers::pi;
  if (s == "-pi") return -std::numbers::pi;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a finite number, got '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || v < -1'000'000'000 ||
      v > 1'000'000'000) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  }
  return static_cast<int>(v);
}

KeyValues parse_config_text(std::string_view text, std::string_view origin) {
  KeyValues out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  const auto& keys = known_keys();
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;

    const auto split = body.find_first_of("= \t");
    const std::string where = std::string(origin) + ":" + std::to_string(number);
    if (split == std::string::npos) throw ConfigError(where + ": missing value for '" + body + "'");
    std::string key = trim(body.substr(0, split));
    std::string value = trim(body.substr(split + 1));
    if (!value.empty() && value.front() == '=') value = trim(value.substr(1));
    if (value.empty()) throw ConfigError(where + ": missing value for '" + key + "'");
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
    if (!out.emplace(key, value).second) {
      throw ConfigError(where + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) out[i] = start + step * i;
  out.back() = stop;
  return out;
}

std::string_view to_string(StateSelection s) {
  switch (s) {
    case StateSelection::mixed: return "mixed";
    case StateSelection::cat: return "cat";
    case StateSelection::both: return "both";
  }
  return "both";
}

double RunConfig::number(const std::string& key, double fallback, const KeyValues& overrides) const {
  if (const auto it = overrides.find(key); it != overrides.end()) return parse_number(key, it->second);
  if (const auto it = raw.find(key); it != raw.end()) return parse_number(key, it->second);
  return fallback;
}

model::ModelParams RunConfig::params(const KeyValues& overrides) const {
  const double theta = number("theta", std::numbers::pi / 4, overrides);
  const double phi = number("phi", 0.0, overrides);
  try {
    if (physical) {
      return model::ModelParams::physical(
          number("g", 0.0, overrides), number("Delta", 0.0, overrides),
          Complex(number("E_drive", 0.0, overrides), number("E_drive_im", 0.0, overrides)),
          number("t", 0.0, overrides), theta, phi);
    }
    return model::ModelParams::dimensionless(
        Complex(number("lambda", 0.0, overrides), number("lambda_im", 0.0, overrides)),
        number("chit", 0.0, overrides), theta, phi);
  } catch (const InvalidArgumentError& e) {
    throw ConfigError(std::string("model parameters: ") + e.what());
  }
}

RunConfig resolve(const std::string& preset_name, const KeyValues& preset, const KeyValues& file,
                  const KeyValues& flags) {
  KeyValues user = file;
  for (const auto& [k, v] : flags) user[k] = v;
  const bool user_physical = has_any(user, kPhysicalKeys);
  const bool user_dimensionless = has_any(user, kDimensionlessKeys);
  if (user_physical && user_dimensionless) {
    throw ConfigError(
        "model parameters: supply either g, Delta, E_drive, t or lambda, chit, not both");
  }

  RunConfig cfg;
  cfg.preset = preset_name;
  cfg.raw = preset;
  if (user_physical) erase_keys(cfg.raw, kDimensionlessKeys);
  if (user_dimensionless) erase_keys(cfg.raw, kPhysicalKeys);
  for (const auto& [k, v] : user) cfg.raw[k] = v;
  const KeyValues& kv = cfg.raw;

  cfg.physical = has_any(kv, kPhysicalKeys);
  const std::string sweep_param = get(kv, "sweep_param", "");
  const std::vector<std::string> required =
      cfg.physical ? std::vector<std::string>{"g", "Delta", "E_drive", "t"}
                   : std::vector<std::string>{"lambda", "chit"};
  for (const auto& key : required) {
    if (!kv.contains(key) && key != sweep_param) {
      throw ConfigError(key + ": required model parameter is missing");
    }
  }

  const std::string states = get(kv, "state_kind", "cat");
  if (states == "mixed") cfg.states = StateSelection::mixed;
  else if (states == "cat") cfg.states = StateSelection::cat;
  else if (states == "both") cfg.states = StateSelection::both;
  else throw ConfigError("state_kind: expected mixed, cat or both, got '" + states + "'");

  cfg.mu = cfg.number("mu", 0.0);
  cfg.tail_tol = cfg.number("tail_tol", 1e-12);
  if (!(cfg.tail_tol > 0.0 && cfg.tail_tol <= 0.5)) {
    throw ConfigError("tail_tol: must lie in (0, 0.5]");
  }

  const bool any_sweep = kv.contains("sweep_param") || kv.contains("sweep_start") ||
                         kv.contains("sweep_stop") || kv.contains("sweep_count");
  if (any_sweep) {
    for (const char* key : {"sweep_param", "sweep_start", "sweep_stop", "sweep_count"}) {
      if (!kv.contains(key)) throw ConfigError(std::string(key) + ": required for a sweep");
    }
    SweepAxis axis;
    axis.param = sweep_param;
    axis.start = parse_number("sweep_start", kv.at("sweep_start"));
    axis.stop = parse_number("sweep_stop", kv.at("sweep_stop"));
    axis.count = parse_int("sweep_count", kv.at("sweep_count"));
    const auto& group = cfg.physical ? kPhysicalKeys : kDimensionlessKeys;
    if (!group.contains(axis.param) && !kSweepableShared.contains(axis.param)) {
      throw ConfigError("sweep_param: '" + axis.param + "' cannot be swept with " +
                        (cfg.physical ? "physical" : "dimensionless") + " parameters");
    }
    if (axis.count < 2) throw ConfigError("sweep_count: must be at least 2");
    if (!(axis.start < axis.stop)) throw ConfigError("sweep_start: must be below sweep_stop");
    cfg.sweep = axis;
  }

  cfg.l = parse_int("l", get(kv, "l", "2"));
  cfg.l_max = parse_int("l_max", get(kv, "l_max", "10"));
  if (cfg.l < 0) throw ConfigError("l: must be non-negative");
  if (cfg.l_max < 0) throw ConfigError("l_max: must be non-negative");

  const std::string kind = get(kv, "kind", "wigner");
  if (kind == "wigner") cfg.kind = phase::Distribution::wigner;
  else if (kind == "husimi") cfg.kind = phase::Distribution::husimi;
  else throw ConfigError("kind: expected wigner or husimi, got '" + kind + "'");

  const std::string convention = get(kv, "convention", "normalized");
  if (convention == "unscaled") cfg.convention = phase::HusimiConvention::unscaled;
  else if (convention == "normalized") cfg.convention = phase::HusimiConvention::normalized;
  else throw ConfigError("convention: expected unscaled or normalized, got '" + convention + "'");

  cfg.grid.re_min = cfg.number("re_min", -3.0);
  cfg.grid.re_max = cfg.number("re_max", 3.0);
  cfg.grid.im_min = cfg.number("im_min", -3.0);
  cfg.grid.im_max = cfg.number("im_max", 3.0);
  cfg.grid.re_count = parse_int("re_count", get(kv, "re_count", "61"));
  cfg.grid.im_count = parse_int("im_count", get(kv, "im_count", "61"));
  if (cfg.grid.re_count < 2) throw ConfigError("re_count: must be at least 2");
  if (cfg.grid.im_count < 2) throw ConfigError("im_count: must be at least 2");
  if (cfg.grid.re_count > 4001 || cfg.grid.im_count > 4001) {
    throw ConfigError("re_count/im_count: at most 4001 points per axis");
  }
  if (!(cfg.grid.re_min < cfg.grid.re_max)) throw ConfigError("re_min: must be below re_max");
  if (!(cfg.grid.im_min < cfg.grid.im_max)) throw ConfigError("im_min: must be below im_max");
  cfg.point = Complex(cfg.number("point_re", 0.0), cfg.number("point_im", 0.0));

  cfg.level = get(kv, "level", "quick");
  if (cfg.level != "quick" && cfg.level != "full") {
    throw ConfigError("level: expected quick or full, got '" + cfg.level + "'");
  }
  if (cfg.sweep && cfg.sweep->count > 100'000) throw ConfigError("sweep_count: at most 100000");

  // Surfaces invalid fixed parameters before any computation.
  if (!cfg.sweep) cfg.params();
  return cfg;
}

}  // namespace catlab::cli
