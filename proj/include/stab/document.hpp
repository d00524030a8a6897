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

#include <optional>
#include <string>

#include <json.hpp>

#include "stab/clifford.hpp"
#include "stab/pauli.hpp"
#include "stab/stabiliser.hpp"

namespace stab::io {

enum class Kind { Amplitudes, Triple, CheckMatrixRows, TableauRows, Matrix };

std::string kind_name(Kind kind);
std::optional<Kind> kind_from_name(const std::string& name);

/// Self-describing on-disk container. Bitstrings are written qubit-1-first;
/// complex numbers as [re, im] pairs. Exactly one payload member is engaged,
/// matching `kind`.
struct Document {
  Kind kind = Kind::Amplitudes;
  size_t n = 0;
  std::optional<AmplitudeVector> amplitudes;
  std::optional<AffineSubspaceTriple> triple;
  std::optional<CheckMatrix> check_matrix;
  std::optional<Tableau> tableau;
  std::optional<CliffordMatrix> matrix;
  nlohmann::json metadata = nlohmann::json::object();

  static Document from_amplitudes(AmplitudeVector v);
  static Document from_triple(AffineSubspaceTriple t);
  static Document from_check_matrix(CheckMatrix m);
  static Document from_tableau(Tableau t);
  static Document from_matrix(CliffordMatrix m);
};

/// Parses a document. Shape and syntax problems throw DocumentError;
/// semantic invariant violations (for example non-commuting check rows)
/// surface as the library's own exception types.
Document parse_document(const std::string& text);

std::string serialise_document(const Document& d);

}  // namespace stab::io
