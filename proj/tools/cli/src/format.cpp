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

#include "catlab_cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

namespace catlab::cli {

namespace {

using nlohmann::ordered_json;

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* s = std::get_if<std::string>(&c)) return csv_text(*s);
  return {};
}

// Round trip through the fixed text form so JSON and CSV agree digit for digit.
ordered_json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_number(x).c_str(), nullptr);
}

ordered_json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return json_number(*d);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

ordered_json json_pairs(const std::vector<std::pair<std::string, Cell>>& pairs) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : pairs) obj[k] = json_cell(v);
  return obj;
}

ordered_json json_axis(const std::vector<double>& axis) {
  ordered_json arr = ordered_json::array();
  for (double x : axis) arr.push_back(json_number(x));
  return arr;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const double a = std::abs(x);
  if (a >= 1e6 || a < 1e-4) {
    std::snprintf(buf, sizeof buf, "%.11e", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g", x);
  }
  return buf;
}

std::string render_csv(const Output& out) {
  std::ostringstream s;
  for (const auto& [k, v] : out.metadata) s << "# " << k << ": " << csv_cell(v) << '\n';
  if (out.grid) {
    s << "im\\re";
    for (double x : out.re_axis) s << ',' << format_number(x);
    s << '\n';
    for (Eigen::Index i = 0; i < out.grid->rows(); ++i) {
      s << format_number(out.im_axis[i]);
      for (Eigen::Index j = 0; j < out.grid->cols(); ++j) s << ',' << format_number((*out.grid)(i, j));
      s << '\n';
    }
  } else {
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
      s << (i ? "," : "") << out.columns[i];
    }
    s << '\n';
    for (const auto& row : out.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << csv_cell(row[i]);
      s << '\n';
    }
  }
  for (const auto& [k, v] : out.summary) s << "# summary " << k << ": " << csv_cell(v) << '\n';
  for (const auto& d : out.discrepancies) {
    s << "# discrepancy " << d.name << ": claim " << d.claim << "; computed " << d.computed
      << "; reproduced " << (d.reproduced ? "yes" : "no") << '\n';
  }
  for (const auto& w : out.warnings) s << "# warning: " << w << '\n';
  return s.str();
}

std::string render_json(const Output& out) {
  ordered_json doc = ordered_json::object();
  ordered_json meta = json_pairs(out.metadata);
  meta["summary"] = json_pairs(out.summary);
  doc["metadata"] = meta;

  if (out.grid) {
    doc["axes"] = {{"re", json_axis(out.re_axis)}, {"im", json_axis(out.im_axis)}};
    ordered_json values = ordered_json::array();
    for (Eigen::Index i = 0; i < out.grid->rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index j = 0; j < out.grid->cols(); ++j) row.push_back(json_number((*out.grid)(i, j)));
      values.push_back(row);
    }
    doc["values"] = values;
  } else {
    ordered_json columns = ordered_json::array();
    for (const auto& c : out.columns) columns.push_back(c);
    doc["axes"] = {{"columns", columns}};
    ordered_json rows = ordered_json::array();
    for (const auto& row : out.rows) {
      ordered_json r = ordered_json::object();
      for (std::size_t i = 0; i < row.size() && i < out.columns.size(); ++i) {
        r[out.columns[i]] = json_cell(row[i]);
      }
      rows.push_back(r);
    }
    doc["rows"] = rows;
  }

  ordered_json disc = ordered_json::array();
  for (const auto& d : out.discrepancies) {
    disc.push_back({{"name", d.name},
                    {"claim", d.claim},
                    {"computed", d.computed},
                    {"reproduced", d.reproduced}});
  }
  doc["discrepancies"] = disc;
  ordered_json warn = ordered_json::array();
  for (const auto& w : out.warnings) warn.push_back(w);
  doc["warnings"] = warn;
  return doc.dump(2) + "\n";
}

std::string render(const Output& out, Format format) {
  return format == Format::json ? render_json(out) : render_csv(out);
}

}  // namespace catlab::cli
