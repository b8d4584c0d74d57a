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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "catlab_cli/app.hpp"
#include "catlab_cli/config.hpp"
#include "catlab_cli/format.hpp"
#include "catlab_cli/presets.hpp"

namespace {

using namespace catlab::cli;
namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args,
               const catlab::special::LaguerreSequenceFn& laguerre = catlab::special::laguerre_assoc_sequence) {
  std::ostringstream out, err;
  const int code = run(args, out, err, laguerre);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::string meta_value(const std::string& csv, const std::string& key) {
  const std::string tag = "# " + key + ": ";
  const auto pos = csv.find(tag);
  if (pos == std::string::npos) return {};
  const auto end = csv.find('\n', pos);
  return csv.substr(pos + tag.size(), end - pos - tag.size());
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "catlab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(FormatNumber, FixedRules) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(-2.0), "-2");
  EXPECT_EQ(format_number(123456.789), "123456.789");
  EXPECT_EQ(format_number(1e6), "1.00000000000e+06");
  EXPECT_EQ(format_number(5e-5), "5.00000000000e-05");
  EXPECT_EQ(format_number(1e-4), "0.0001");
  EXPECT_EQ(format_number(std::numbers::pi), "3.14159265359");
}

TEST(ConfigText, GrammarAndErrors) {
  const auto kv = parse_config_text("# comment\nlambda = 1.5\n chit 2 # trailing\n\ntheta=pi\n", "cfg");
  EXPECT_EQ(kv.at("lambda"), "1.5");
  EXPECT_EQ(kv.at("chit"), "2");
  EXPECT_EQ(kv.at("theta"), "pi");
  EXPECT_THROW(parse_config_text("bogus = 1\n", "cfg"), ConfigError);
  EXPECT_THROW(parse_config_text("lambda = 1\nlambda = 2\n", "cfg"), ConfigError);
  EXPECT_THROW(parse_config_text("lambda =\n", "cfg"), ConfigError);
  try {
    parse_config_text("chit 1\nwhat 2\n", "my.cfg");
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("my.cfg:2"), std::string::npos);
  }
}

TEST(Resolve, PrecedenceAndGroups) {
  const KeyValues preset = {{"lambda", "1"}, {"chit", "2"}, {"mu", "0.5"}};
  const KeyValues file = {{"chit", "3"}, {"mu", "0.25"}};
  const KeyValues flags = {{"mu", "0.125"}};
  const RunConfig cfg = resolve("x", preset, file, flags);
  EXPECT_DOUBLE_EQ(cfg.params().chit(), 3.0);
  EXPECT_DOUBLE_EQ(cfg.mu, 0.125);

  EXPECT_THROW(resolve("", {}, {{"lambda", "1"}}, {{"g", "1"}}), ConfigError);
  const RunConfig phys =
      resolve("x", preset, {}, {{"g", "1"}, {"Delta", "50"}, {"E_drive", "1"}, {"t", "50"}});
  EXPECT_TRUE(phys.physical);
  EXPECT_NEAR(phys.params().chit(), 1.0, 1e-15);
  EXPECT_THROW(resolve("", {}, {}, {{"lambda", "1"}}), ConfigError);
}

TEST(Resolve, SweepValidation) {
  const KeyValues base = {{"chit", "1"}, {"sweep_param", "lambda"}, {"sweep_start", "0"},
                          {"sweep_stop", "1"}, {"sweep_count", "5"}};
  const RunConfig cfg = resolve("", {}, base, {});
  ASSERT_TRUE(cfg.sweep.has_value());
  EXPECT_EQ(cfg.sweep->values().size(), 5u);
  EXPECT_DOUBLE_EQ(cfg.sweep->values()[2], 0.5);
  EXPECT_THROW(resolve("", {}, base, {{"sweep_count", "1"}}), ConfigError);
  EXPECT_THROW(resolve("", {}, base, {{"sweep_start", "2"}}), ConfigError);
  EXPECT_THROW(resolve("", {}, base, {{"sweep_param", "g"}}), ConfigError);
  KeyValues partial = base;
  partial.erase("sweep_stop");
  EXPECT_THROW(resolve("", {}, partial, {}), ConfigError);
}

TEST(Presets, CaptionsAreEncoded) {
  const auto& a = find_preset("fig3b");
  EXPECT_EQ(a.command, Command::witness);
  EXPECT_EQ(a.values.at("lambda"), "0.35");
  EXPECT_EQ(a.values.at("sweep_param"), "chit");
  const auto& b = find_preset("fig4a");
  EXPECT_EQ(b.values.at("chit"), "1");
  EXPECT_EQ(b.values.at("sweep_param"), "lambda");
  EXPECT_EQ(find_preset("fig7a").values.at("convention"), "unscaled");
  EXPECT_THROW(find_preset("fig99"), ConfigError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"witness", "--lambda", "1", "--g", "1", "--chit", "1"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"witness", "--preset", "nope"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"witness", "--preset", "fig2a"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"witness", "--lambda", "abc", "--chit", "1"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"witness", "--lambda", "1", "--chit", "1", "--threads", "0"}).code, kExitConfigError);
  const Result ok = run_cli({"witness", "--lambda", "1", "--chit", "1"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, ErrorNamesField) {
  const Result r = run_cli({"witness", "--lambda", "1", "--chit", "1", "--sweep_param", "lambda",
                            "--sweep_start", "1", "--sweep_stop", "0", "--sweep_count", "3"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("sweep_start"), std::string::npos);
}

TEST(Cli, PhotonDistRangeErrorBeforeCompute) {
  const Result r = run_cli({"photon-dist", "--lambda", "1", "--chit", "1", "--l_max", "40"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("l_max"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, VacuumSweepLeavesRatiosEmpty) {
  const Result r = run_cli({"witness", "--lambda", "0", "--sweep_param", "chit", "--sweep_start", "0",
                            "--sweep_stop", "3", "--sweep_count", "4", "--state_kind", "mixed"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "chit,state_kind,mean_n,Q_M,S_x,S_p,g2,d1,cutoff,warnings");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i]);
    ASSERT_EQ(cells.size(), 10u);
    EXPECT_EQ(cells[3], "");
    EXPECT_EQ(cells[6], "");
    EXPECT_EQ(cells[7], "0");
  }
}

TEST(Cli, Fig2cIsPoisson) {
  const Result r = run_cli({"photon-dist", "--preset", "fig2c"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const double mean = 2 - 2 * std::cos(4.0);
  int checked = 0;
  for (const auto& line : data_lines(r.out)) {
    const auto cells = split(line);
    if (cells[1] != "mixed") continue;
    const int l = std::stoi(cells[0]);
    EXPECT_NEAR(std::stod(cells[2]), std::exp(-mean + l * std::log(mean) - std::lgamma(l + 1.0)), 1e-11);
    ++checked;
  }
  EXPECT_EQ(checked, 11);
  EXPECT_NE(r.out.find("# discrepancy mixed.peak_P_l_vs_l"), std::string::npos);
}

TEST(Cli, Fig2aReportsPeakAgainstText) {
  const Result r = run_cli({"photon-dist", "--preset", "fig2a", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["discrepancies"][0]["name"], "mixed.peak_P_2_vs_lambda");
  EXPECT_FALSE(doc["discrepancies"][0]["reproduced"].get<bool>());
  // Grid point lambda = 0.84 sits next to the exact peak exp(-2) * 2.
  const auto& summary = doc["metadata"]["summary"];
  EXPECT_EQ(summary["mixed.peak_P_l_at"].get<double>(), 0.84);
  EXPECT_NEAR(summary["mixed.peak_P_l"].get<double>(), 2 * std::exp(-2.0), 2e-7);
  // Numbers carry exactly the digits of the CSV rendering.
  const double peak = summary["mixed.peak_P_l"].get<double>();
  EXPECT_EQ(peak, std::strtod(catlab::cli::format_number(peak).c_str(), nullptr));
}

TEST(Cli, Fig3bLogsSignChanges) {
  const Result r = run_cli({"witness", "--preset", "fig3b"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(meta_value(r.out, "summary cat.Q_M_sign_changes"), "");
  EXPECT_EQ(meta_value(r.out, "summary mixed.Q_M_sign_changes"), "0");
  EXPECT_NE(r.out.find("# discrepancy mixed_state_mandel_q"), std::string::npos);
}

TEST(Cli, VacuumWignerNormalization) {
  const Result r = run_cli({"phase-space", "--lambda", "0", "--chit", "1", "--re_min", "-4", "--re_max", "4",
                            "--im_min", "-4", "--im_max", "4", "--re_count", "81", "--im_count", "81"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(std::stod(meta_value(r.out, "normalization_check")), 1.0, 1e-3);
  EXPECT_EQ(meta_value(r.out, "accuracy_warnings"), "0");
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 82u);
  EXPECT_EQ(split(lines[0]).size(), 82u);
  EXPECT_EQ(split(lines[0])[1], "-4");
  EXPECT_EQ(split(lines[1])[0], "-4");
}

TEST(Cli, GridRejectsBothKinds) {
  EXPECT_EQ(run_cli({"phase-space", "--lambda", "1", "--chit", "1", "--state_kind", "both"}).code,
            kExitConfigError);
}

TEST(Cli, Fig6bHasNegativeCatEntries) {
  const Result r = run_cli({"phase-space", "--preset", "fig6b"});
  ASSERT_EQ(r.code, kExitOk);
  int negative = 0;
  for (const auto& line : data_lines(r.out)) {
    const auto cells = split(line);
    if (cells[1] == "cat" && std::stod(cells[4]) < 0) ++negative;
  }
  EXPECT_GT(negative, 0);
}

TEST(Cli, Fig7aUsesUnscaledConvention) {
  const Result r = run_cli({"phase-space", "--preset", "fig7a"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(meta_value(r.out, "convention"), "unscaled");
  EXPECT_EQ(meta_value(r.out, "kind"), "husimi");
  EXPECT_NE(meta_value(r.out, "summary cat.near_zero_count"), "");
}

TEST(Cli, JsonShape) {
  const Result r = run_cli({"witness", "--preset", "fig8a", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  for (const char* key : {"\"metadata\"", "\"axes\"", "\"rows\"", "\"discrepancies\"", "\"warnings\""}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  }
  const Result g = run_cli({"phase-space", "--lambda", "1", "--chit", "1", "--re_count", "3", "--im_count", "3",
                            "--format", "json"});
  ASSERT_EQ(g.code, kExitOk);
  EXPECT_NE(g.out.find("\"values\""), std::string::npos);
}

TEST(Cli, DegenerateCatPointsBecomeWarnings) {
  const Result r = run_cli({"witness", "--lambda", "1", "--sweep_param", "chit", "--sweep_start", "0",
                            "--sweep_stop", "6.283185307179586", "--sweep_count", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("# warning: chit=3.14159265359 cat"), std::string::npos);
}

TEST(Cli, ConfigFileAndFlagOverride) {
  const fs::path cfg = temp_file("run.cfg");
  std::ofstream(cfg) << "lambda = 2\nchit = 1\nstate_kind = mixed\n";
  const Result a = run_cli({"witness", "--config", cfg.string()});
  const Result b = run_cli({"witness", "--config", cfg.string(), "--lambda", "1"});
  ASSERT_EQ(a.code, kExitOk);
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_EQ(meta_value(a.out, "param.lambda"), "2");
  EXPECT_EQ(meta_value(b.out, "param.lambda"), "1");
  EXPECT_EQ(run_cli({"witness", "--config", (cfg.parent_path() / "missing.cfg").string()}).code,
            kExitConfigError);
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  for (const char* preset : {"fig3a", "fig6c", "fig7b"}) {
    const auto& p = find_preset(preset);
    const std::string cmd(to_string(p.command));
    const fs::path f1 = temp_file(std::string(preset) + "_1.csv");
    const fs::path f2 = temp_file(std::string(preset) + "_2.csv");
    const fs::path f3 = temp_file(std::string(preset) + "_3.csv");
    ASSERT_EQ(run_cli({cmd, "--preset", preset, "--out", f1.string()}).code, kExitOk);
    ASSERT_EQ(run_cli({cmd, "--preset", preset, "--out", f2.string()}).code, kExitOk);
    ASSERT_EQ(run_cli({cmd, "--preset", preset, "--out", f3.string(), "--threads", "4"}).code, kExitOk);
    const std::string a = slurp(f1);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(f2)) << preset;
    EXPECT_EQ(a, slurp(f3)) << preset;
  }
}

TEST(Cli, ValidateQuickPasses) {
  const Result r = run_cli({"validate", "--level", "quick"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL,"), std::string::npos);
  EXPECT_NE(r.out.find("wigner_series_vs_parity,PASS"), std::string::npos);
}

TEST(Cli, ValidateCatchesCorruptedLaguerre) {
  auto broken = [](int k_max, int m, double x) {
    auto v = catlab::special::laguerre_assoc_sequence(k_max, m, x);
    for (std::size_t k = 3; k < v.size(); ++k) v[k] += 1e-6 * v[k - 1];
    return v;
  };
  const Result r = run_cli({"validate", "--level", "quick"}, broken);
  EXPECT_EQ(r.code, kExitValidationFailure);
  EXPECT_NE(r.out.find("wigner_series_vs_parity,FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("moment_equivalence,PASS"), std::string::npos);
}

TEST(Cli, AllPresetsRun) {
  for (const auto& p : presets()) {
    const Result r = run_cli({std::string(to_string(p.command)), "--preset", p.name});
    EXPECT_EQ(r.code, kExitOk) << p.name << ": " << r.err;
    EXPECT_NE(r.out.find("# preset: " + p.name), std::string::npos);
  }
}

}  // namespace

TEST(Cli, MixedWignerStaysNonNegativeAtLargeAmplitude) {
  const Result r = run_cli({"phase-space", "--lambda", "3.5", "--chit", "3.14159", "--state_kind", "mixed",
                            "--re_count", "21", "--im_count", "21", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_GE(doc["metadata"]["summary"]["min_value"].get<double>(), -1e-10);
}
