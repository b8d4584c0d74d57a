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

#include "catlab_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "catlab/errors.hpp"
#include "catlab/model.hpp"
#include "catlab/parallel.hpp"
#include "catlab/phase_space.hpp"
#include "catlab/version.hpp"
#include "catlab/witnesses.hpp"
#include "catlab_cli/presets.hpp"

namespace catlab::cli {

namespace {

using witness::StateKind;

struct Point {
  KeyValues overrides;
  double value = 0.0;
};

/// Field state of one kind at one sweep point.
struct Field {
  StateKind kind = StateKind::mixed;
  int cutoff = 0;
  std::optional<fock::DensityMatrix> mixed;
  std::optional<fock::FockVector> cat;
  std::vector<std::string> warnings;

  bool ok() const { return mixed || cat; }
};

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view kind_name(StateKind k) { return k == StateKind::mixed ? "mixed" : "cat"; }

std::vector<Point> sweep_points(const RunConfig& cfg) {
  if (!cfg.sweep) return {Point{}};
  std::vector<Point> out;
  for (double v : cfg.sweep->values()) out.push_back(Point{{{cfg.sweep->param, exact(v)}}, v});
  return out;
}

std::vector<StateKind> kinds(const RunConfig& cfg) {
  switch (cfg.states) {
    case StateSelection::mixed: return {StateKind::mixed};
    case StateSelection::cat: return {StateKind::cat};
    case StateSelection::both: return {StateKind::mixed, StateKind::cat};
  }
  return {};
}

// Truncation at 1e-12 leaves Wigner errors near 1e-9 for large amplitudes.
constexpr double kPhaseSpaceTailTol = 1e-16;

std::string first_column(const RunConfig& cfg) { return cfg.sweep ? cfg.sweep->param : "point"; }

Field field_at(const RunConfig& cfg, const KeyValues& overrides, StateKind kind) {
  Field f;
  f.kind = kind;
  const model::ModelParams params = cfg.params(overrides);
  f.cutoff = model::model_cutoff(params, cfg.tail_tol);
  if (params.dispersive_warning()) f.warnings.push_back("dispersive ratio g/Delta above 0.1");
  const model::JointState joint = model::joint_state(params, f.cutoff);
  if (kind == StateKind::mixed) {
    f.mixed = model::field_mixed(joint);
  } else {
    try {
      f.cat = model::field_cat(joint, cfg.number("mu", 0.0, overrides)).state;
    } catch (const DegenerateOutcomeError& e) {
      f.warnings.push_back(e.what());
    }
  }
  return f;
}

template <class Fn>
auto visit_field(const Field& f, Fn&& fn) {
  return f.mixed ? fn(*f.mixed) : fn(*f.cat);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

void common_metadata(Output& out, const RunConfig& cfg, Command command) {
  out.meta("command", std::string(to_string(command)));
  out.meta("artifact_version", std::string(kVersion));
  out.meta("preset", cfg.preset.empty() ? std::string("none") : cfg.preset);
  if (!cfg.preset.empty()) out.meta("caption", find_preset(cfg.preset).caption);
  out.meta("parameters", std::string(cfg.physical ? "physical" : "dimensionless"));
  for (const auto& [k, v] : cfg.raw) out.meta("param." + k, v);
  out.meta("state_kind", std::string(to_string(cfg.states)));
  out.meta("tail_tol", cfg.tail_tol);
}

/// Minimum of a column over rows of one kind; returns (value, location).
struct Extremum {
  double value = std::numeric_limits<double>::infinity();
  double at = 0.0;
  bool found = false;
};

void track_min(Extremum& e, std::optional<double> v, double at) {
  if (v && *v < e.value) e = {*v, at, true};
}

void track_max(Extremum& e, std::optional<double> v, double at) {
  if (v && (!e.found || *v > e.value)) e = {*v, at, true};
}

void report(Output& out, const std::string& key, const Extremum& e) {
  out.note(key, e.found ? Cell(e.value) : Cell());
  out.note(key + "_at", e.found ? Cell(e.at) : Cell());
}

// Sign changes ignore values within the noise floor of exact zeros.
std::vector<double> sign_changes(const std::vector<std::pair<double, std::optional<double>>>& series) {
  std::vector<double> out;
  int last = 0;
  for (const auto& [x, v] : series) {
    if (!v || std::abs(*v) <= 1e-9) continue;
    const int s = *v > 0 ? 1 : -1;
    if (last != 0 && s != last) out.push_back(x);
    last = s;
  }
  return out;
}

std::string list(const std::vector<double>& xs) {
  std::string out;
  for (double x : xs) out += (out.empty() ? "" : " ") + format_number(x);
  return out;
}

void collect_warnings(Output& out, const std::vector<Point>& points,
                      const std::vector<StateKind>& ks, const std::vector<Field>& fields,
                      const std::string& param) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (const auto& w : fields[i].warnings) {
      out.warnings.push_back(param + "=" + format_number(points[i / ks.size()].value) + " " +
                             std::string(kind_name(fields[i].kind)) + ": " + w);
    }
  }
}

std::vector<Field> all_fields(const RunConfig& cfg, const std::vector<Point>& points,
                              const std::vector<StateKind>& ks, int threads) {
  std::vector<Field> fields(points.size() * ks.size());
  parallel_for(fields.size(), threads, [&](std::size_t idx) {
    fields[idx] = field_at(cfg, points[idx / ks.size()].overrides, ks[idx % ks.size()]);
  });
  return fields;
}

}  // namespace

Output cmd_witness(const RunConfig& cfg, int threads) {
  Output out;
  common_metadata(out, cfg, Command::witness);
  const auto points = sweep_points(cfg);
  const auto ks = kinds(cfg);
  const std::string param = first_column(cfg);
  out.columns = {param, "state_kind", "mean_n", "Q_M", "S_x", "S_p", "g2", "d1", "cutoff",
                 "warnings"};

  const std::size_t jobs = points.size() * ks.size();
  std::vector<Field> fields(jobs);
  std::vector<std::optional<witness::WitnessReport>> reports(jobs);
  parallel_for(jobs, threads, [&](std::size_t idx) {
    fields[idx] = field_at(cfg, points[idx / ks.size()].overrides, ks[idx % ks.size()]);
    if (fields[idx].ok()) {
      reports[idx] = visit_field(fields[idx], [](const auto& s) { return witness::witness_report(s, 0); });
      fields[idx].mixed.reset();
      fields[idx].cat.reset();
    }
  });

  int max_cutoff = 0;
  for (std::size_t k = 0; k < ks.size(); ++k) {
    Extremum q, sx, sp, g2, d1;
    std::vector<std::pair<double, std::optional<double>>> q_series;
    double max_abs_q = 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto& r = reports[p * ks.size() + k];
      if (!r) continue;
      const double x = points[p].value;
      track_min(q, r->mandel_q, x);
      track_min(sx, r->s_x, x);
      track_min(sp, r->s_p, x);
      track_min(g2, r->g2, x);
      track_min(d1, r->d1, x);
      q_series.emplace_back(x, r->mandel_q);
      if (r->mandel_q) max_abs_q = std::max(max_abs_q, std::abs(*r->mandel_q));
    }
    const std::string prefix = std::string(kind_name(ks[k])) + ".";
    report(out, prefix + "min_Q_M", q);
    report(out, prefix + "min_S_x", sx);
    report(out, prefix + "min_S_p", sp);
    report(out, prefix + "min_g2", g2);
    report(out, prefix + "min_d1", d1);
    const auto changes = sign_changes(q_series);
    out.note(prefix + "Q_M_sign_changes", static_cast<double>(changes.size()));
    out.note(prefix + "Q_M_sign_change_at", list(changes));
    if (ks[k] == StateKind::mixed && (cfg.preset == "fig3a" || cfg.preset == "fig3b")) {
      out.discrepancies.push_back(
          {"mixed_state_mandel_q", "Q_M < 0 (sub-Poissonian) in parts of the sweep",
           "max |Q_M| = " + format_number(max_abs_q) + " (Poissonian)",
           q.found && q.value < -1e-9});
    }
  }

  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t k = 0; k < ks.size(); ++k) {
      const std::size_t idx = p * ks.size() + k;
      const Field& f = fields[idx];
      max_cutoff = std::max(max_cutoff, f.cutoff);
      std::vector<Cell> row = {points[p].value, std::string(kind_name(ks[k]))};
      if (const auto& r = reports[idx]) {
        row.insert(row.end(), {r->mean_n, cell(r->mandel_q), r->s_x, r->s_p, cell(r->g2), r->d1});
      } else {
        row.insert(row.end(), 6, Cell());
      }
      row.push_back(static_cast<double>(f.cutoff));
      row.push_back(join(f.warnings));
      out.rows.push_back(std::move(row));
    }
  }
  out.meta("cutoff_max", static_cast<double>(max_cutoff));
  collect_warnings(out, points, ks, fields, param);
  return out;
}

Output cmd_photon_dist(const RunConfig& cfg, int threads) {
  Output out;
  common_metadata(out, cfg, Command::photon_dist);
  const auto points = sweep_points(cfg);
  const auto ks = kinds(cfg);
  const int needed = cfg.sweep ? cfg.l : cfg.l_max;
  const char* needed_key = cfg.sweep ? "l" : "l_max";
  int max_cutoff = 0;
  for (const auto& p : points) {
    const int cutoff = model::model_cutoff(cfg.params(p.overrides), cfg.tail_tol);
    if (needed >= cutoff) {
      throw RangeError(std::string(needed_key) + ": " + std::to_string(needed) +
                       " is not below the cutoff " + std::to_string(cutoff));
    }
    max_cutoff = std::max(max_cutoff, cutoff);
  }
  out.meta("cutoff_max", static_cast<double>(max_cutoff));

  const auto fields = all_fields(cfg, points, ks, threads);
  auto distribution = [&](const Field& f, int l_max) {
    return visit_field(f, [&](const auto& s) { return witness::photon_distribution(s, l_max); });
  };

  if (cfg.sweep) {
    const std::string param = first_column(cfg);
    out.columns = {param, "state_kind", "l", "P_l", "cutoff", "warnings"};
    std::vector<Extremum> peaks(ks.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
      for (std::size_t k = 0; k < ks.size(); ++k) {
        const Field& f = fields[p * ks.size() + k];
        std::optional<double> value;
        if (f.ok()) value = distribution(f, cfg.l)[cfg.l];
        track_max(peaks[k], value, points[p].value);
        out.rows.push_back({points[p].value, std::string(kind_name(ks[k])),
                            static_cast<double>(cfg.l), cell(value),
                            static_cast<double>(f.cutoff), join(f.warnings)});
      }
    }
    for (std::size_t k = 0; k < ks.size(); ++k) {
      const std::string name(kind_name(ks[k]));
      report(out, name + ".peak_P_l", peaks[k]);
      if (!peaks[k].found) continue;
      const std::string computed = "peak " + format_number(peaks[k].value) + " at " + param +
                                   " = " + format_number(peaks[k].at);
      if (cfg.preset == "fig2a") {
        out.discrepancies.push_back({name + ".peak_P_2_vs_lambda", "maximum value 0.5", computed,
                                     std::abs(peaks[k].value - 0.5) <= 0.01});
      } else if (cfg.preset == "fig2b") {
        out.discrepancies.push_back({name + ".peak_P_2_vs_chit", "1.08", computed,
                                     std::abs(peaks[k].value - 1.08) <= 0.01 ||
                                         std::abs(peaks[k].at - 1.08) <= 0.05});
      }
    }
    collect_warnings(out, points, ks, fields, param);
    return out;
  }

  out.columns = {"l", "state_kind", "P_l", "cutoff", "warnings"};
  for (std::size_t k = 0; k < ks.size(); ++k) {
    const Field& f = fields[k];
    Extremum peak;
    std::vector<double> pn;
    if (f.ok()) pn = distribution(f, cfg.l_max);
    for (int l = 0; l <= cfg.l_max; ++l) {
      std::optional<double> value;
      if (f.ok()) value = pn[l];
      track_max(peak, value, l);
      out.rows.push_back({static_cast<double>(l), std::string(kind_name(ks[k])), cell(value),
                          static_cast<double>(f.cutoff), join(f.warnings)});
    }
    const std::string name(kind_name(ks[k]));
    report(out, name + ".peak_P_l", peak);
    if (cfg.preset == "fig2c" && peak.found) {
      out.discrepancies.push_back(
          {name + ".peak_P_l_vs_l", "highest value 0.83 at l = 2",
           "peak " + format_number(peak.value) + " at l = " + format_number(peak.at),
           std::abs(peak.value - 0.83) <= 0.01 && peak.at == 2.0});
    }
  }
  collect_warnings(out, points, ks, fields, "point");
  return out;
}

Output cmd_phase_space(const RunConfig& given, int threads) {
  RunConfig cfg = given;
  if (!cfg.raw.contains("tail_tol")) cfg.tail_tol = kPhaseSpaceTailTol;
  Output out;
  common_metadata(out, cfg, Command::phase_space);
  out.meta("kind", std::string(phase::to_string(cfg.kind)));
  out.meta("convention", std::string(phase::to_string(cfg.convention)));
  const bool wigner = cfg.kind == phase::Distribution::wigner;

  if (!cfg.sweep) {
    if (cfg.states == StateSelection::both) {
      throw ConfigError("state_kind: grid output needs mixed or cat, not both");
    }
    const Field f = field_at(cfg, {}, kinds(cfg).front());
    if (!f.ok()) throw ConfigError("state: " + join(f.warnings));
    const phase::PhaseSpaceGrid grid = visit_field(f, [&](const auto& s) {
      return phase::grid_eval(s, cfg.grid, cfg.kind, cfg.convention, threads);
    });
    out.meta("cutoff", static_cast<double>(f.cutoff));
    out.meta("accuracy_warnings", static_cast<double>(grid.warnings.size()));
    out.meta("oracle_checks", static_cast<double>(grid.oracle_checks));
    out.meta("normalization_check", grid.riemann_sum());
    out.re_axis = grid.re_axis;
    out.im_axis = grid.im_axis;
    out.grid = grid.values;

    Eigen::Index r = 0, c = 0;
    const double min = grid.values.minCoeff(&r, &c);
    out.note("min_value", min);
    out.note("min_at_re", grid.re_axis[c]);
    out.note("min_at_im", grid.im_axis[r]);
    for (const auto& w : f.warnings) out.warnings.push_back(w);
    for (const auto& w : grid.warnings) out.warnings.push_back(w.message);
    return out;
  }

  const auto points = sweep_points(cfg);
  const auto ks = kinds(cfg);
  const std::string param = first_column(cfg);
  out.columns = {param, "state_kind", "point_re", "point_im", wigner ? "W" : "Q_f", "cutoff",
                 "warnings"};
  const std::size_t jobs = points.size() * ks.size();
  std::vector<Field> fields(jobs);
  std::vector<std::optional<double>> values(jobs);
  std::vector<Complex> where(jobs);
  parallel_for(jobs, threads, [&](std::size_t idx) {
    const auto& ov = points[idx / ks.size()].overrides;
    Field& f = fields[idx];
    f = field_at(cfg, ov, ks[idx % ks.size()]);
    where[idx] = Complex(cfg.number("point_re", 0.0, ov), cfg.number("point_im", 0.0, ov));
    if (!f.ok()) return;
    if (wigner) {
      const phase::WignerValue w =
          visit_field(f, [&](const auto& s) { return phase::wigner_series(s, where[idx]); });
      values[idx] = w.value;
      if (!w.converged) f.warnings.push_back("Wigner series not converged");
    } else {
      values[idx] =
          visit_field(f, [&](const auto& s) { return phase::husimi(s, where[idx], cfg.convention); });
    }
    f.mixed.reset();
    f.cat.reset();
  });

  int max_cutoff = 0;
  for (std::size_t k = 0; k < ks.size(); ++k) {
    Extremum lo, hi;
    for (std::size_t p = 0; p < points.size(); ++p) {
      track_min(lo, values[p * ks.size() + k], points[p].value);
      track_max(hi, values[p * ks.size() + k], points[p].value);
    }
    const std::string name(kind_name(ks[k]));
    report(out, name + ".min_value", lo);
    report(out, name + ".max_value", hi);
    if (!wigner && hi.found) {
      // Points where Q_f nearly vanishes relative to the sweep's peak.
      std::vector<double> near_zero;
      for (std::size_t p = 0; p < points.size(); ++p) {
        const auto& v = values[p * ks.size() + k];
        if (v && *v <= 1e-3 * hi.value) near_zero.push_back(points[p].value);
      }
      out.note(name + ".near_zero_count", static_cast<double>(near_zero.size()));
      out.note(name + ".near_zero_first", near_zero.empty() ? Cell() : Cell(near_zero.front()));
      out.note(name + ".near_zero_last", near_zero.empty() ? Cell() : Cell(near_zero.back()));
    }
  }
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t k = 0; k < ks.size(); ++k) {
      const std::size_t idx = p * ks.size() + k;
      max_cutoff = std::max(max_cutoff, fields[idx].cutoff);
      out.rows.push_back({points[p].value, std::string(kind_name(ks[k])), where[idx].real(),
                          where[idx].imag(), cell(values[idx]),
                          static_cast<double>(fields[idx].cutoff), join(fields[idx].warnings)});
    }
  }
  out.meta("cutoff_max", static_cast<double>(max_cutoff));
  collect_warnings(out, points, ks, fields, param);
  return out;
}

}  // namespace catlab::cli
