// Copyright 2026 The stabtool Authors
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

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stab::bench {

struct Row {
  std::string task;
  size_t n = 0;
  double fast_seconds = 0.0;
  std::optional<double> brute_seconds;    // present within oracle limits
  std::optional<double> speedup;          // brute / fast
  std::optional<double> doubling_ratio;   // fast(n) / fast(n-1) within the run
};

const std::vector<std::string>& task_names();
bool is_valid_task(const std::string& task);

/// Runs one task over the inclusive qubit range. Timings are medians of
/// `repeats` samples after a discarded warm-up, measured on one thread so
/// runs stay comparable. Inputs are seeded and built outside the timed region.
std::vector<Row> run(const std::string& task, size_t n_lo, size_t n_hi, size_t repeats = 5);

std::string format_table(const std::vector<Row>& rows);
/// One line per row: bench,<task>,<n>,<fast_s>,<brute_s|na>,<speedup|na>,<doubling|na>
std::string format_machine_rows(const std::vector<Row>& rows);

/// Median of `repeats` timed samples; each sample batches enough calls to be
/// measurable. One discarded warm-up call.
double time_median_seconds(const std::function<void()>& fn, size_t repeats);

}  // namespace stab::bench
