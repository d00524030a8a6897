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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stab/bench.hpp"
#include "stab/clifford.hpp"
#include "stab/document.hpp"
#include "stab/oracle.hpp"
#include "stab/random.hpp"
#include "stab/stabiliser.hpp"

namespace {

using namespace stab;

constexpr int kExitOk = 0;
constexpr int kExitBadDocument = 2;
constexpr int kExitRejected = 3;
constexpr int kExitOracleDisagreement = 4;

constexpr size_t kDenseEmissionLimit = 10;   // qubits, for matrix payloads
constexpr size_t kAmplitudeEmissionLimit = 20;

struct CliError {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw CliError{kExitBadDocument, "cannot open input file '" + path + "'"};
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

io::Document parse_or_fail(const std::string& text) {
  try {
    return io::parse_document(text);
  } catch (const DocumentError& e) {
    throw CliError{kExitBadDocument, e.what()};
  } catch (const StabError& e) {
    // Well-formed document whose payload violates a semantic invariant.
    throw CliError{kExitRejected, e.what()};
  }
}

void emit(const io::Document& d) { std::cout << io::serialise_document(d); }

bool is_state_kind(io::Kind kind) {
  return kind == io::Kind::Amplitudes || kind == io::Kind::Triple ||
         kind == io::Kind::CheckMatrixRows;
}

nlohmann::json complex_json(cplx value) {
  return nlohmann::json::array({value.real(), value.imag()});
}

/// Conversion entry point; routes through the library's conversion graph and
/// records stripped global factors/phases in the output metadata.
int cmd_convert(const std::string& input_path, const std::string& target_name) {
  std::optional<io::Kind> target = io::kind_from_name(target_name);
  if (!target) throw CliError{kExitBadDocument, "unknown target kind '" + target_name + "'"};
  io::Document doc = parse_or_fail(read_input(input_path));
  nlohmann::json metadata = doc.metadata;

  if (doc.kind == *target) {
    emit(doc);
    return kExitOk;
  }
  if (is_state_kind(doc.kind) != is_state_kind(*target)) {
    throw CliError{kExitBadDocument, "no conversion path from " + io::kind_name(doc.kind) +
                                         " to " + io::kind_name(*target)};
  }

  try {
    io::Document out;
    if (doc.kind == io::Kind::Amplitudes) {
      StabiliserDiagnosis diagnosis = verify_stabiliser_vector(*doc.amplitudes);
      if (!diagnosis.accepted) {
        std::cerr << "rejected: " << to_string(*diagnosis.failure_reason)
                  << (diagnosis.detail.empty() ? "" : " (" + diagnosis.detail + ")") << "\n";
        return kExitRejected;
      }
      metadata["global_factor"] = complex_json(*diagnosis.global_factor);
      if (*target == io::Kind::Triple) {
        out = io::Document::from_triple(std::move(*diagnosis.triple));
      } else {
        out = io::Document::from_check_matrix(triple_to_check(*diagnosis.triple));
      }
    } else if (doc.kind == io::Kind::Triple) {
      if (*target == io::Kind::CheckMatrixRows) {
        out = io::Document::from_check_matrix(triple_to_check(*doc.triple));
      } else {
        if (doc.n > kAmplitudeEmissionLimit) {
          throw CliError{kExitBadDocument, "amplitude emission is limited to n <= 20"};
        }
        out = io::Document::from_amplitudes(triple_to_amplitudes(*doc.triple));
      }
    } else if (doc.kind == io::Kind::CheckMatrixRows) {
      if (*target == io::Kind::Triple) {
        out = io::Document::from_triple(check_to_triple(*doc.check_matrix));
      } else {
        if (doc.n > kAmplitudeEmissionLimit) {
          throw CliError{kExitBadDocument, "amplitude emission is limited to n <= 20"};
        }
        out = io::Document::from_amplitudes(check_to_amplitudes(*doc.check_matrix));
      }
    } else if (doc.kind == io::Kind::Matrix) {
      CliffordDiagnosis diagnosis = verify_clifford_matrix(*doc.matrix);
      if (!diagnosis.accepted) {
        std::cerr << "rejected: " << to_string(*diagnosis.failure_reason)
                  << (diagnosis.detail.empty() ? "" : " (" + diagnosis.detail + ")") << "\n";
        return kExitRejected;
      }
      // The tableau determines the matrix up to phase; keep the stripped one.
      const DenseMatrix& m = doc.matrix->mat;
      for (size_t i = 0; i < m.dim; ++i) {
        double mag = std::abs(m.at(i, 0));
        if (mag > kRelativeZeroTolerance * m.max_abs()) {
          metadata["global_phase"] = complex_json(m.at(i, 0) / mag);
          break;
        }
      }
      out = io::Document::from_tableau(std::move(*diagnosis.tableau));
    } else {  // tableau
      if (doc.n > kDenseEmissionLimit) {
        throw CliError{kExitBadDocument, "dense emission is limited to n <= 10"};
      }
      out = io::Document::from_matrix(tableau_to_matrix(*doc.tableau));
    }
    out.metadata = std::move(metadata);
    emit(out);
    return kExitOk;
  } catch (const StabError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitRejected;
  }
}

int cmd_verify(const std::string& input_path, bool use_oracle) {
  io::Document doc = parse_or_fail(read_input(input_path));
  bool accepted = false;
  std::optional<bool> oracle_verdict;

  if (doc.kind == io::Kind::Amplitudes) {
    StabiliserDiagnosis d = verify_stabiliser_vector(*doc.amplitudes);
    accepted = d.accepted;
    std::cout << "kind: stabiliser state vector\n";
    std::cout << "verdict: " << (accepted ? "accepted" : "rejected") << "\n";
    if (!accepted) {
      std::cout << "reason: " << to_string(*d.failure_reason) << "\n";
      if (d.witness) std::cout << "witness: basis label " << *d.witness << "\n";
      if (!d.detail.empty()) std::cout << "detail: " << d.detail << "\n";
    } else {
      std::cout << "support dimension: " << d.triple->dimension() << "\n";
    }
    if (use_oracle) {
      if (doc.n <= oracle::kStateOracleQubitLimit) {
        oracle_verdict = oracle::brute_is_stabiliser(*doc.amplitudes);
      } else {
        std::cerr << "oracle skipped: n above the state oracle limit\n";
      }
    }
  } else if (doc.kind == io::Kind::Matrix) {
    CliffordDiagnosis d = verify_clifford_matrix(*doc.matrix);
    accepted = d.accepted;
    std::cout << "kind: Clifford gate matrix\n";
    std::cout << "verdict: " << (accepted ? "accepted" : "rejected") << "\n";
    if (!accepted) {
      std::cout << "reason: " << to_string(*d.failure_reason) << "\n";
      if (d.witness_column) std::cout << "witness: column " << *d.witness_column << "\n";
      if (!d.detail.empty()) std::cout << "detail: " << d.detail << "\n";
    }
    if (use_oracle) {
      if (doc.n <= oracle::kGateOracleQubitLimit) {
        oracle_verdict = oracle::brute_is_clifford(*doc.matrix);
      } else {
        std::cerr << "oracle skipped: n above the gate oracle limit\n";
      }
    }
  } else {
    throw CliError{kExitBadDocument, "verify expects an amplitudes or matrix document"};
  }

  if (oracle_verdict) {
    bool agree = *oracle_verdict == accepted;
    std::cout << "oracle: " << (*oracle_verdict ? "accepted" : "rejected")
              << (agree ? " (agreement)" : " (DISAGREEMENT)") << "\n";
    if (!agree) {
      std::cerr << "oracle disagreement: library bug signal\n";
      return kExitOracleDisagreement;
    }
  }
  return accepted ? kExitOk : kExitRejected;
}

int cmd_random(const std::string& kind, size_t n, uint64_t seed, size_t depth,
               std::string emit_name) {
  if (n == 0) throw CliError{kExitBadDocument, "n must be positive"};
  nlohmann::json metadata{{"seed", seed},
                          {"generator", "random_" + kind + "(n=" + std::to_string(n) +
                                            ", depth=" + std::to_string(depth ? depth : 10 * n) +
                                            ")"}};
  io::Document out;
  if (kind == "state") {
    if (emit_name.empty()) emit_name = "check_matrix";
    CheckMatrix check = random_check_matrix(n, seed, depth);
    if (emit_name == "check_matrix") {
      out = io::Document::from_check_matrix(std::move(check));
    } else if (emit_name == "triple") {
      out = io::Document::from_triple(check_to_triple(check));
    } else if (emit_name == "amplitudes") {
      if (n > kAmplitudeEmissionLimit) {
        throw CliError{kExitBadDocument, "amplitude emission is limited to n <= 20"};
      }
      out = io::Document::from_amplitudes(check_to_amplitudes(check));
    } else {
      throw CliError{kExitBadDocument, "state emission kinds: check_matrix, triple, amplitudes"};
    }
  } else {  // gate
    if (emit_name.empty()) emit_name = "tableau";
    Tableau tab = random_tableau(n, seed, depth);
    if (emit_name == "tableau") {
      out = io::Document::from_tableau(std::move(tab));
    } else if (emit_name == "matrix") {
      if (n > kDenseEmissionLimit) {
        throw CliError{kExitBadDocument, "dense emission is limited to n <= 10"};
      }
      out = io::Document::from_matrix(tableau_to_matrix(tab));
    } else {
      throw CliError{kExitBadDocument, "gate emission kinds: tableau, matrix"};
    }
  }
  out.metadata = std::move(metadata);
  emit(out);
  return kExitOk;
}

int cmd_bench(const std::string& task, const std::string& range, size_t repeats) {
  if (!bench::is_valid_task(task)) {
    std::string names;
    for (const std::string& t : bench::task_names()) names += (names.empty() ? "" : ", ") + t;
    throw CliError{kExitBadDocument, "unknown task '" + task + "' (tasks: " + names + ")"};
  }
  size_t lo = 0;
  size_t hi = 0;
  size_t dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoul(range);
    } else {
      lo = std::stoul(range.substr(0, dots));
      hi = std::stoul(range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CliError{kExitBadDocument, "bad range '" + range + "' (expected lo..hi)"};
  }
  if (lo == 0 || hi < lo) throw CliError{kExitBadDocument, "bad range '" + range + "'"};
  std::vector<bench::Row> rows = bench::run(task, lo, hi, repeats);
  std::cout << bench::format_table(rows);
  std::cout << bench::format_machine_rows(rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabtool: verify and interconvert stabiliser-state and Clifford-gate "
               "representations"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string target_kind;
  CLI::App* convert = app.add_subcommand("convert", "Convert a document to another kind");
  convert->add_option("--to", target_kind, "Target kind")->required();
  convert->add_option("file", input_path, "Input document ('-' for stdin)");

  std::string verify_path = "-";
  bool use_oracle = false;
  CLI::App* verify = app.add_subcommand("verify", "Verify an amplitudes or matrix document");
  verify->add_flag("--oracle", use_oracle, "Also run the brute-force oracle and compare");
  verify->add_option("file", verify_path, "Input document ('-' for stdin)");

  std::string random_kind;
  size_t random_n = 0;
  uint64_t random_seed = 0;
  size_t random_depth = 0;
  std::string emit_kind;
  CLI::App* random = app.add_subcommand("random", "Generate a seeded random instance");
  random->add_option("--kind", random_kind, "state or gate")
      ->required()
      ->check(CLI::IsMember({"state", "gate"}));
  random->add_option("-n", random_n, "Qubit count")->required();
  random->add_option("--seed", random_seed, "RNG seed")->required();
  random->add_option("--depth", random_depth, "Circuit depth (default 10n)");
  random->add_option("--emit", emit_kind, "Output kind");

  std::string bench_task;
  std::string bench_range;
  size_t bench_repeats = 5;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time fast paths against oracle baselines");
  bench_cmd->add_option("--task", bench_task, "Task name")->required();
  bench_cmd->add_option("--n", bench_range, "Qubit range lo..hi")->required();
  bench_cmd->add_option("--repeats", bench_repeats, "Samples per timing (default 5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) return cmd_convert(input_path, target_kind);
    if (verify->parsed()) return cmd_verify(verify_path, use_oracle);
    if (random->parsed())
      return cmd_random(random_kind, random_n, random_seed, random_depth, emit_kind);
    if (bench_cmd->parsed()) return cmd_bench(bench_task, bench_range, bench_repeats);
  } catch (const CliError& e) {
    std::cerr << "stabtool: " << e.message << "\n";
    return e.code;
  } catch (const DocumentError& e) {
    std::cerr << "stabtool: " << e.what() << "\n";
    return kExitBadDocument;
  } catch (const StabError& e) {
    std::cerr << "stabtool: rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::invalid_argument& e) {
    std::cerr << "stabtool: " << e.what() << "\n";
    return kExitBadDocument;
  } catch (const std::exception& e) {
    std::cerr << "stabtool: internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
