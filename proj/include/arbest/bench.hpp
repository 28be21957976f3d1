// Copyright 2026 The arbest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Experiment runner. A config is a JSON document
//
//   {"timing": false,
//    "cells": [{"family": "forest", "n": 1000, "graph_seed": 1,
//               "algo": "fortified", "mode": "estimate",
//               "seeds": [1, 2, 3]}, ...]}
//
// and every (cell, threshold, seed) combination yields one ResultRow.

namespace arbest {

struct ResultRow {
  std::string graph_id;
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::optional<std::uint32_t> lambda_true;
  std::uint32_t lambda_lower = 0;
  std::uint32_t lambda_upper = 0;
  std::string algo;
  std::string schedule;
  std::optional<double> threshold;   // compare rows
  std::string verdict;               // YES / NO; final threshold for estimate rows
  std::optional<double> lambda_hat;  // estimate rows
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
  std::uint64_t steps = 0;
  double wall_ms = 0;  // 0 unless timing is enabled
  std::uint64_t seed = 0;
  std::string error;  // non-empty for a failed cell
};

/// Throws std::invalid_argument when the document is not a valid config.
/// Problems inside a single cell become error rows instead.
std::vector<ResultRow> run_benchmark(std::string_view config_json,
                                     std::optional<bool> timing = std::nullopt);

std::string csv_header();
std::string to_csv(const std::vector<ResultRow>& rows);
std::string to_json(const std::vector<ResultRow>& rows);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace arbest
