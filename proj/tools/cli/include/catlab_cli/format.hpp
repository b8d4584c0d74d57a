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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "catlab_cli/config.hpp"

namespace catlab::cli {

/// Empty (undefined), number or text.
using Cell = std::variant<std::monostate, double, std::string>;

inline Cell cell(std::optional<double> v) { return v ? Cell(*v) : Cell(); }

struct Discrepancy {
  std::string name;
  std::string claim;
  std::string computed;
  bool reproduced = false;
};

/// Everything a command emits. Either rows (tabular) or a grid.
struct Output {
  std::vector<std::pair<std::string, Cell>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::vector<double> re_axis;
  std::vector<double> im_axis;
  std::optional<Eigen::MatrixXd> grid;

  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> warnings;

  void meta(std::string key, Cell value) { metadata.emplace_back(std::move(key), std::move(value)); }
  void note(std::string key, Cell value) { summary.emplace_back(std::move(key), std::move(value)); }
};

/// 12 significant digits; scientific when |x| >= 1e6 or 0 < |x| < 1e-4;
/// negative zero prints as 0.
std::string format_number(double x);

std::string render_csv(const Output& out);
std::string render_json(const Output& out);
std::string render(const Output& out, Format format);

}  // namespace catlab::cli
