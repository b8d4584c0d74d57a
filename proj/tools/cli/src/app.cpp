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

#include "catlab_cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "catlab/errors.hpp"
#include "catlab/version.hpp"
#include "catlab_cli/commands.hpp"
#include "catlab_cli/config.hpp"
#include "catlab_cli/presets.hpp"
#include "catlab_cli/validate.hpp"

namespace catlab::cli {

namespace {

std::string key_help(const std::string& key) {
  static const std::map<std::string, std::string> help = {
      {"g", "Coupling rate (physical group)"},
      {"Delta", "Detuning (physical group)"},
      {"E_drive", "Drive amplitude, real part (physical group)"},
      {"E_drive_im", "Drive amplitude, imaginary part"},
      {"t", "Interaction time (physical group)"},
      {"lambda", "Drive ratio E/g, real part (dimensionless group)"},
      {"lambda_im", "Drive ratio, imaginary part"},
      {"chit", "Dispersive phase chi*t (dimensionless group)"},
      {"theta", "Atomic superposition angle (default pi/4)"},
      {"phi", "Atomic superposition phase (default 0)"},
      {"state_kind", "mixed, cat or both"},
      {"mu", "Atomic measurement phase for the cat state"},
      {"tail_tol", "Poisson tail tolerance for the Fock cutoff"},
      {"sweep_param", "Swept key (lambda, chit, point_re, ...)"},
      {"sweep_start", "First sweep value"},
      {"sweep_stop", "Last sweep value"},
      {"sweep_count", "Number of sweep points"},
      {"l", "Photon number for a P(l) sweep"},
      {"l_max", "Largest photon number for a full distribution"},
      {"kind", "wigner or husimi"},
      {"convention", "Husimi scale: unscaled or normalized"},
      {"re_min", "Grid lower bound, real axis"},
      {"re_max", "Grid upper bound, real axis"},
      {"im_min", "Grid lower bound, imaginary axis"},
      {"im_max", "Grid upper bound, imaginary axis"},
      {"re_count", "Grid points, real axis"},
      {"im_count", "Grid points, imaginary axis"},
      {"point_re", "Phase-space point, real part"},
      {"point_im", "Phase-space point, imaginary part"},
      {"level", "validate level: quick or full"},
  };
  const auto it = help.find(key);
  return it == help.end() ? std::string() : it->second;
}

struct Common {
  std::string preset;
  std::string config;
  std::string out;
  std::string format = "csv";
  std::string threads;
  std::map<std::string, std::string> keys;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--preset", c.preset, "Figure preset (fig2a ... fig9b)");
  sub->add_option("--config", c.config, "Config file with key = value lines");
  sub->add_option("--out", c.out, "Output path (default: stdout)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--threads", c.threads, "Worker threads (default: CATLAB_THREADS or 1)");
  for (const auto& key : known_keys()) sub->add_option("--" + key, c.keys[key], key_help(key));
}

int thread_count(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    const char* env = std::getenv("CATLAB_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    text = env;
  }
  const int n = parse_int("threads", text);
  if (n < 1 || n > 256) throw ConfigError("threads: must lie in [1, 256]");
  return n;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("out: cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw Error("out: write to '" + path + "' failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const special::LaguerreSequenceFn& laguerre) {
  CLI::App app{"Driven dispersive cavity field: witnesses, photon statistics and phase space",
               "catlab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  struct Sub {
    Command command;
    CLI::App* app;
  };
  const std::vector<Sub> subs = {
      {Command::witness, app.add_subcommand("witness", "Witness table over a sweep")},
      {Command::photon_dist, app.add_subcommand("photon-dist", "Photon number distribution")},
      {Command::phase_space, app.add_subcommand("phase-space", "Wigner or Husimi values")},
      {Command::validate, app.add_subcommand("validate", "Run the differential checks")},
  };
  for (const auto& s : subs) add_common(s.app, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "catlab: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    Command command = Command::witness;
    for (const auto& s : subs) {
      if (s.app->parsed()) {
        command = s.command;
        for (const auto& key : known_keys()) {
          if (s.app->count("--" + key) == 0) common.keys.erase(key);
        }
      }
    }
    const Format format = common.format == "json" ? Format::json : Format::csv;
    const int threads = thread_count(common.threads);
    const KeyValues file = common.config.empty() ? KeyValues{} : read_config_file(common.config);
    const KeyValues flags(common.keys.begin(), common.keys.end());

    if (command == Command::validate) {
      KeyValues merged = file;
      for (const auto& [k, v] : flags) merged[k] = v;
      ValidateOptions opt;
      opt.level = merged.contains("level") ? merged.at("level") : "quick";
      if (opt.level != "quick" && opt.level != "full") {
        throw ConfigError("level: expected quick or full, got '" + opt.level + "'");
      }
      opt.threads = threads;
      opt.laguerre = laguerre;
      const ValidateReport report = run_validate(opt);
      emit(render(validate_output(report), format), common.out, out);
      return report.passed() ? kExitOk : kExitValidationFailure;
    }

    KeyValues preset_values;
    if (!common.preset.empty()) {
      const FigurePreset& p = find_preset(common.preset);
      if (p.command != command) {
        throw ConfigError("preset: " + p.name + " belongs to '" + std::string(to_string(p.command)) +
                          "'");
      }
      preset_values = p.values;
    }
    const RunConfig cfg = resolve(common.preset, preset_values, file, flags);
    Output result;
    switch (command) {
      case Command::witness: result = cmd_witness(cfg, threads); break;
      case Command::photon_dist: result = cmd_photon_dist(cfg, threads); break;
      case Command::phase_space: result = cmd_phase_space(cfg, threads); break;
      case Command::validate: break;
    }
    emit(render(result, format), common.out, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "catlab: config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const RangeError& e) {
    err << "catlab: config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const InvalidArgumentError& e) {
    err << "catlab: config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "catlab: error: " << e.what() << '\n';
    return kExitValidationFailure;
  }
}

}  // namespace catlab::cli
