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

#include "stab/document.hpp"

#include <utility>

namespace stab::io {

using nlohmann::json;

namespace {

constexpr size_t kMaxAmplitudeQubits = 24;
constexpr size_t kMaxMatrixQubits = 10;
constexpr size_t kMaxBitQubits = 4096;

[[noreturn]] void bad(const std::string& message) { throw DocumentError(message); }

size_t parse_qubit_count(const json& j, size_t limit) {
  if (!j.contains("n") || !j["n"].is_number_unsigned()) bad("missing or invalid field 'n'");
  size_t n = j["n"].get<size_t>();
  if (n == 0) bad("'n' must be positive");
  if (n > limit) bad("'n' exceeds the supported limit for this kind");
  return n;
}

cplx parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("complex numbers must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(cplx value) { return json::array({value.real(), value.imag()}); }

f2::BitVector parse_bits(const json& j, size_t expected, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a bitstring");
  std::string s = j.get<std::string>();
  if (s.size() != expected) bad(std::string(what) + " has the wrong length");
  for (char c : s) {
    if (c != '0' && c != '1') bad(std::string(what) + " must contain only 0/1");
  }
  return f2::BitVector::from_string(s);
}

AmplitudeVector parse_amplitudes(const json& j) {
  size_t n = parse_qubit_count(j, kMaxAmplitudeQubits);
  if (!j.contains("entries") || !j["entries"].is_array()) bad("missing 'entries' array");
  const json& entries = j["entries"];
  if (entries.size() != (size_t{1} << n)) bad("'entries' must have 2^n elements");
  std::vector<cplx> amps;
  amps.reserve(entries.size());
  for (const json& e : entries) amps.push_back(parse_complex(e));
  return AmplitudeVector(n, std::move(amps));
}

AffineSubspaceTriple parse_triple(const json& j) {
  size_t n = parse_qubit_count(j, kMaxBitQubits);
  AffineSubspaceTriple t;
  t.n = n;
  if (!j.contains("basis") || !j["basis"].is_array()) bad("missing 'basis' array");
  size_t k = j["basis"].size();
  if (k > n) bad("basis larger than the space");
  for (const json& b : j["basis"]) t.basis.push_back(parse_bits(b, n, "basis vector"));
  if (!j.contains("shift")) bad("missing 'shift'");
  t.shift = parse_bits(j["shift"], n, "shift");
  if (!j.contains("qform") || !j["qform"].is_array() || j["qform"].size() != k) {
    bad("'qform' must have one row per basis vector");
  }
  t.qform = f2::BitMatrix(k, k);
  for (size_t i = 0; i < k; ++i) {
    f2::BitVector row = parse_bits(j["qform"][i], k, "qform row");
    for (size_t c = 0; c < k; ++c) t.qform.set(i, c, row.get(c));
  }
  if (!j.contains("lmap")) bad("missing 'lmap'");
  t.lmap = parse_bits(j["lmap"], k, "lmap");
  return t;
}

CheckMatrix parse_check_matrix(const json& j) {
  size_t n = parse_qubit_count(j, kMaxBitQubits);
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != n) {
    bad("'rows' must have exactly n entries");
  }
  std::vector<CheckRow> rows;
  rows.reserve(n);
  for (const json& r : j["rows"]) {
    f2::BitVector bits = parse_bits(r, 2 * n + 1, "check row");
    rows.push_back({bits.slice(0, n), bits.slice(n, 2 * n), bits.get(2 * n)});
  }
  return CheckMatrix(n, std::move(rows));
}

Tableau parse_tableau(const json& j) {
  size_t n = parse_qubit_count(j, kMaxBitQubits);
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != n) {
    bad("'rows' must have exactly n entries");
  }
  Tableau t;
  t.n = n;
  for (const json& r : j["rows"]) {
    if (!r.is_object() || !r.contains("u") || !r.contains("v") || !r["u"].is_string() ||
        !r["v"].is_string()) {
      bad("tableau rows must be objects with 'u' and 'v' literals");
    }
    PauliOperator u;
    PauliOperator v;
    try {
      u = parse_pauli_literal(r["u"].get<std::string>());
      v = parse_pauli_literal(r["v"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(std::string("bad pauli literal: ") + e.what());
    }
    if (u.qubits() != n || v.qubits() != n) bad("pauli literal has the wrong qubit count");
    t.pairs.push_back({std::move(u), std::move(v)});
  }
  return t;
}

CliffordMatrix parse_matrix(const json& j) {
  size_t n = parse_qubit_count(j, kMaxMatrixQubits);
  size_t dim = size_t{1} << n;
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != dim) {
    bad("'entries' must have 2^n rows");
  }
  DenseMatrix m(dim);
  for (size_t r = 0; r < dim; ++r) {
    const json& row = j["entries"][r];
    if (!row.is_array() || row.size() != dim) bad("matrix rows must have 2^n entries");
    for (size_t c = 0; c < dim; ++c) m.at(r, c) = parse_complex(row[c]);
  }
  return CliffordMatrix(n, std::move(m));
}

}  // namespace

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::Amplitudes:
      return "amplitudes";
    case Kind::Triple:
      return "triple";
    case Kind::CheckMatrixRows:
      return "check_matrix";
    case Kind::TableauRows:
      return "tableau";
    case Kind::Matrix:
      return "matrix";
  }
  return "unknown";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  if (name == "amplitudes") return Kind::Amplitudes;
  if (name == "triple") return Kind::Triple;
  if (name == "check_matrix") return Kind::CheckMatrixRows;
  if (name == "tableau") return Kind::TableauRows;
  if (name == "matrix") return Kind::Matrix;
  return std::nullopt;
}

Document Document::from_amplitudes(AmplitudeVector v) {
  Document d;
  d.kind = Kind::Amplitudes;
  d.n = v.n;
  d.amplitudes = std::move(v);
  return d;
}

Document Document::from_triple(AffineSubspaceTriple t) {
  Document d;
  d.kind = Kind::Triple;
  d.n = t.n;
  d.triple = std::move(t);
  return d;
}

Document Document::from_check_matrix(CheckMatrix m) {
  Document d;
  d.kind = Kind::CheckMatrixRows;
  d.n = m.qubits();
  d.check_matrix = std::move(m);
  return d;
}

Document Document::from_tableau(Tableau t) {
  Document d;
  d.kind = Kind::TableauRows;
  d.n = t.n;
  d.tableau = std::move(t);
  return d;
}

Document Document::from_matrix(CliffordMatrix m) {
  Document d;
  d.kind = Kind::Matrix;
  d.n = m.n;
  d.matrix = std::move(m);
  return d;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("document must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) bad("missing 'kind'");
  std::optional<Kind> kind = kind_from_name(j["kind"].get<std::string>());
  if (!kind) bad("unknown document kind '" + j["kind"].get<std::string>() + "'");

  Document d;
  switch (*kind) {
    case Kind::Amplitudes:
      d = Document::from_amplitudes(parse_amplitudes(j));
      break;
    case Kind::Triple:
      d = Document::from_triple(parse_triple(j));
      break;
    case Kind::CheckMatrixRows:
      d = Document::from_check_matrix(parse_check_matrix(j));
      break;
    case Kind::TableauRows:
      d = Document::from_tableau(parse_tableau(j));
      break;
    case Kind::Matrix:
      d = Document::from_matrix(parse_matrix(j));
      break;
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) bad("'metadata' must be an object");
    d.metadata = j["metadata"];
  }
  return d;
}

std::string serialise_document(const Document& d) {
  json j;
  j["kind"] = kind_name(d.kind);
  j["n"] = d.n;
  switch (d.kind) {
    case Kind::Amplitudes: {
      json entries = json::array();
      for (const cplx& e : d.amplitudes->entries) entries.push_back(complex_to_json(e));
      j["entries"] = std::move(entries);
      break;
    }
    case Kind::Triple: {
      const AffineSubspaceTriple& t = *d.triple;
      json basis = json::array();
      for (const f2::BitVector& b : t.basis) basis.push_back(b.to_string());
      j["basis"] = std::move(basis);
      j["shift"] = t.shift.to_string();
      json qform = json::array();
      for (size_t i = 0; i < t.qform.row_count(); ++i) qform.push_back(t.qform.row(i).to_string());
      j["qform"] = std::move(qform);
      j["lmap"] = t.lmap.to_string();
      break;
    }
    case Kind::CheckMatrixRows: {
      json rows = json::array();
      for (const CheckRow& r : d.check_matrix->rows()) {
        rows.push_back(r.x.to_string() + r.z.to_string() + (r.sign ? "1" : "0"));
      }
      j["rows"] = std::move(rows);
      break;
    }
    case Kind::TableauRows: {
      json rows = json::array();
      for (const Tableau::Pair& p : d.tableau->pairs) {
        rows.push_back(json{{"u", pauli_literal(p.u)}, {"v", pauli_literal(p.v)}});
      }
      j["rows"] = std::move(rows);
      break;
    }
    case Kind::Matrix: {
      const DenseMatrix& m = d.matrix->mat;
      json rows = json::array();
      for (size_t r = 0; r < m.dim; ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.dim; ++c) row.push_back(complex_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
      }
      j["entries"] = std::move(rows);
      break;
    }
  }
  if (!d.metadata.empty()) j["metadata"] = d.metadata;
  return j.dump(1) + "\n";
}

}  // namespace stab::io
