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

#include <stdexcept>

namespace stab {

struct StabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A vector fed to a conversion that assumes a stabiliser state turned out
/// not to be one in a way the conversion could detect.
struct NotAStabiliserState : StabError {
  using StabError::StabError;
};

/// Rows are not independent commuting order-2 Paulis, or the shift system
/// derived from them is inconsistent.
struct InvalidCheckMatrix : StabError {
  using StabError::StabError;
};

/// Basis vectors dependent, or the component shapes disagree.
struct InvalidTriple : StabError {
  using StabError::StabError;
};

/// Conjugate-tuple relations violated.
struct InvalidTableau : StabError {
  using StabError::StabError;
};

/// matrix_to_tableau hit an internal inconsistency; the input was not the
/// Clifford matrix it was trusted to be.
struct ExtractionFailed : StabError {
  using StabError::StabError;
};

/// Malformed on-disk document.
struct DocumentError : StabError {
  using StabError::StabError;
};

}  // namespace stab
