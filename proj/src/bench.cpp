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

#include "stab/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "stab/clifford.hpp"
#include "stab/oracle.hpp"
#include "stab/parallel.hpp"
#include "stab/random.hpp"
#include "stab/stabiliser.hpp"

namespace stab::bench {

namespace {

std::atomic<uint64_t> g_sink{0};

void sink(uint64_t value) { g_sink.fetch_add(value, std::memory_order_relaxed); }

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

/// Greedy independent generator extraction from a brute-forced group; part of
/// the brute-force baseline for the amplitudes -> check matrix conversion.
void brute_group_to_generators(const AmplitudeVector& v) {
  std::vector<PauliOperator> group = oracle::brute_stabiliser_group(v);
  std::vector<f2::BitVector> picked_rows;
  std::vector<PauliOperator> generators;
  for (const PauliOperator& p : group) {
    if (generators.size() == v.n) break;
    std::vector<f2::BitVector> trial = picked_rows;
    trial.push_back(p.x.concat(p.z));
    if (f2::rank(f2::BitMatrix::from_rows(trial, 2 * v.n)) == trial.size()) {
      picked_rows = std::move(trial);
      generators.push_back(p);
    }
  }
  sink(generators.size());
}

uint64_t task_seed(const std::string& task, size_t n) {
  uint64_t h = 1469598103934665603ull;
  for (char c : task) h = (h ^ static_cast<uint64_t>(c)) * 1099511628211ull;
  return h ^ (0x100000001b3ull * n);
}

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {
      "verify_state",      "state_to_check", "check_to_state",
      "matrix_to_tableau", "verify_gate",    "tableau_to_matrix",
  };
  return names;
}

bool is_valid_task(const std::string& task) {
  const auto& names = task_names();
  return std::find(names.begin(), names.end(), task) != names.end();
}

double time_median_seconds(const std::function<void()>& fn, size_t repeats) {
  fn();  // warm-up, discarded
  double estimate_start = now_seconds();
  fn();
  double estimate = std::max(now_seconds() - estimate_start, 1e-9);
  size_t batch = estimate >= 1e-4 ? 1 : static_cast<size_t>(std::ceil(1e-4 / estimate));
  std::vector<double> samples;
  samples.reserve(repeats);
  for (size_t r = 0; r < repeats; ++r) {
    double start = now_seconds();
    for (size_t b = 0; b < batch; ++b) fn();
    samples.push_back((now_seconds() - start) / static_cast<double>(batch));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

std::vector<Row> run(const std::string& task, size_t n_lo, size_t n_hi, size_t repeats) {
  if (!is_valid_task(task)) throw std::invalid_argument("unknown bench task: " + task);
  if (n_lo == 0 || n_hi < n_lo) throw std::invalid_argument("bad qubit range");
  if (repeats == 0) repeats = 1;
  ScopedSerialMode serial_guard;  // one thread keeps timings comparable

  std::vector<Row> rows;
  for (size_t n = n_lo; n <= n_hi; ++n) {
    uint64_t seed = task_seed(task, n);
    Row row;
    row.task = task;
    row.n = n;

    std::function<void()> fast;
    std::function<void()> brute;

    if (task == "verify_state" || task == "state_to_check") {
      AmplitudeVector state = check_to_amplitudes(random_check_matrix(n, seed));
      if (task == "verify_state") {
        fast = [state] { sink(verify_stabiliser_vector(state).accepted); };
        if (n <= oracle::kStateOracleQubitLimit) {
          brute = [state] { sink(oracle::brute_is_stabiliser(state)); };
        }
      } else {
        fast = [state] { sink(amplitudes_to_check(state).qubits()); };
        if (n <= oracle::kStateOracleQubitLimit) {
          brute = [state] { brute_group_to_generators(state); };
        }
      }
    } else if (task == "check_to_state") {
      CheckMatrix check = random_check_matrix(n, seed);
      fast = [check] { sink(check_to_amplitudes(check).dim()); };
      if (n <= oracle::kStateOracleQubitLimit) {
        brute = [check] { sink(oracle::brute_check_to_amplitudes(check).dim()); };
      }
    } else if (task == "matrix_to_tableau" || task == "verify_gate") {
      if (n > 12) throw std::invalid_argument("dense gate tasks are limited to n <= 12");
      CliffordMatrix matrix = tableau_to_matrix(random_tableau(n, seed));
      if (task == "matrix_to_tableau") {
        fast = [matrix] { sink(matrix_to_tableau(matrix).n); };
      } else {
        fast = [matrix] { sink(verify_clifford_matrix(matrix).accepted); };
      }
      if (n <= oracle::kGateOracleQubitLimit) {
        brute = [matrix] { sink(oracle::brute_is_clifford(matrix)); };
      }
    } else {  // tableau_to_matrix
      if (n > 12) throw std::invalid_argument("dense gate tasks are limited to n <= 12");
      Tableau tab = random_tableau(n, seed);
      fast = [tab] { sink(tableau_to_matrix(tab).dim()); };
      if (n <= oracle::kStateOracleQubitLimit) {
        brute = [tab] { sink(oracle::brute_tableau_to_matrix(tab).dim()); };
      }
    }

    row.fast_seconds = time_median_seconds(fast, repeats);
    if (brute) {
      row.brute_seconds = time_median_seconds(brute, repeats);
      if (row.fast_seconds > 0.0) row.speedup = *row.brute_seconds / row.fast_seconds;
    }
    if (!rows.empty() && rows.back().fast_seconds > 0.0) {
      row.doubling_ratio = row.fast_seconds / rows.back().fast_seconds;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string format_seconds(std::optional<double> s) {
  if (!s) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", *s);
  return buf;
}

std::string format_ratio(std::optional<double> r) {
  if (!r) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *r);
  return buf;
}

}  // namespace

std::string format_table(const std::vector<Row>& rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-20s %4s %12s %12s %10s %10s\n", "task", "n", "fast[s]",
                "brute[s]", "speedup", "doubling");
  out += line;
  for (const Row& r : rows) {
    std::snprintf(line, sizeof(line), "%-20s %4zu %12s %12s %10s %10s\n", r.task.c_str(), r.n,
                  format_seconds(r.fast_seconds).c_str(), format_seconds(r.brute_seconds).c_str(),
                  format_ratio(r.speedup).c_str(), format_ratio(r.doubling_ratio).c_str());
    out += line;
  }
  return out;
}

std::string format_machine_rows(const std::vector<Row>& rows) {
  std::string out;
  for (const Row& r : rows) {
    char line[200];
    std::snprintf(line, sizeof(line), "bench,%s,%zu,%.9e,%s,%s,%s\n", r.task.c_str(), r.n,
                  r.fast_seconds, r.brute_seconds ? format_seconds(r.brute_seconds).c_str() : "na",
                  r.speedup ? format_ratio(r.speedup).c_str() : "na",
                  r.doubling_ratio ? format_ratio(r.doubling_ratio).c_str() : "na");
    out += line;
  }
  return out;
}

}  // namespace stab::bench
