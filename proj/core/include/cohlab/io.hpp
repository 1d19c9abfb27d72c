// Copyright 2026 The coherence-lab developers
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

#ifndef COHLAB_IO_HPP
#define COHLAB_IO_HPP

#include <string>
#include <variant>

#include "cohlab/gluings.hpp"

namespace cohlab {

// JSON document envelope, schema_version "1". Complex numbers are
// two-element arrays [re, im]; matrices are row-major nested arrays.
// Unknown kinds and versions are rejected, never guessed.

enum class DocKind { State, Channel, GluingLsp, GluingSp, Unitary };

std::string doc_kind_name(DocKind kind);

struct Document {
  DocKind kind = DocKind::State;
  std::variant<DensityMatrix, KrausChannel, LSPGluing, SPGluing, Matrix> payload;

  const DensityMatrix& as_state() const;
  const KrausChannel& as_channel() const;
  const LSPGluing& as_gluing_lsp() const;
  const SPGluing& as_gluing_sp() const;
  const Matrix& as_unitary() const;
};

/// Parses and validates a document from JSON text. Throws ParseError for
/// malformed or unrecognized input and the usual validation errors
/// (NotHermitian, NotPSD, TraceNotOne, NotTracePreserving, NotUnitary, ...)
/// when the payload violates its invariants.
Document parse_document(const std::string& text);

/// Reads the file then parses; ParseError if the file cannot be read.
Document load_document(const std::string& path);

/// Serializes with shortest round-trip number formatting; parse of the
/// output reproduces every complex pair bit-exactly.
std::string write_document(const Document& doc);

Document make_state_document(DensityMatrix state);
Document make_channel_document(KrausChannel channel);
Document make_gluing_document(LSPGluing gluing);
Document make_gluing_document(SPGluing gluing);
Document make_unitary_document(Matrix unitary);

/// Report formatting used by the CLI: fixed 12 decimal places.
std::string format_value(double v);

}  // namespace cohlab

#endif  // COHLAB_IO_HPP
