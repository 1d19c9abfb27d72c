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

#include "cohlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cohlab {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

json complex_to_json(const Complex& c) {
  return json::array({c.real(), c.imag()});
}

Complex json_to_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex numbers must be two-element arrays [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix json_to_matrix(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("matrices must be non-empty nested arrays");
  }
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) {
    throw ParseError("matrix rows must be non-empty arrays");
  }
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError("matrix rows must all have the same length");
    }
    for (Index c = 0; c < cols; ++c) {
      m(i, c) = json_to_complex(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    out.push_back(complex_to_json(v(i)));
  }
  return out;
}

Vector json_to_vector(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("vectors must be non-empty arrays of [re, im] pairs");
  }
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = json_to_complex(j[static_cast<std::size_t>(i)]);
  }
  return v;
}

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

void check_dim_field(const json& payload, Index actual, const char* what) {
  const json& dim = require_field(payload, "dim");
  if (!dim.is_number_integer() || dim.get<Index>() != actual) {
    throw ParseError(std::string(what) + ": \"dim\" does not match the payload shape");
  }
}

DensityMatrix parse_state_payload(const json& payload) {
  const Matrix m = json_to_matrix(require_field(payload, "matrix"));
  check_dim_field(payload, m.rows(), "state");
  return validate_density(m);
}

KrausChannel parse_channel_payload(const json& payload) {
  const json& ops = require_field(payload, "kraus");
  if (!ops.is_array() || ops.empty()) {
    throw ParseError("channel: \"kraus\" must be a non-empty array of matrices");
  }
  std::vector<Matrix> kraus;
  for (const json& op : ops) {
    kraus.push_back(json_to_matrix(op));
  }
  check_dim_field(payload, kraus.front().rows(), "channel");
  return validate_channel(std::move(kraus));
}

Matrix parse_unitary_payload(const json& payload) {
  const Matrix m = json_to_matrix(require_field(payload, "matrix"));
  check_dim_field(payload, m.rows(), "unitary");
  if (!is_unitary(m)) {
    throw NotUnitary("unitary payload fails the unitarity check");
  }
  return m;
}

json state_payload(const DensityMatrix& s) {
  return json{{"dim", s.dim()}, {"matrix", matrix_to_json(s.matrix)}};
}

json channel_payload(const KrausChannel& c) {
  json ops = json::array();
  for (const Matrix& k : c.kraus) {
    ops.push_back(matrix_to_json(k));
  }
  return json{{"dim", c.dim()}, {"kraus", std::move(ops)}};
}

}  // namespace

std::string doc_kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::State: return "state";
    case DocKind::Channel: return "channel";
    case DocKind::GluingLsp: return "gluing_lsp";
    case DocKind::GluingSp: return "gluing_sp";
    case DocKind::Unitary: return "unitary";
  }
  return "?";
}

const DensityMatrix& Document::as_state() const {
  if (kind != DocKind::State) throw ParseError("document is not a state");
  return std::get<DensityMatrix>(payload);
}

const KrausChannel& Document::as_channel() const {
  if (kind != DocKind::Channel) throw ParseError("document is not a channel");
  return std::get<KrausChannel>(payload);
}

const LSPGluing& Document::as_gluing_lsp() const {
  if (kind != DocKind::GluingLsp) throw ParseError("document is not an LSP gluing");
  return std::get<LSPGluing>(payload);
}

const SPGluing& Document::as_gluing_sp() const {
  if (kind != DocKind::GluingSp) throw ParseError("document is not an SP gluing");
  return std::get<SPGluing>(payload);
}

const Matrix& Document::as_unitary() const {
  if (kind != DocKind::Unitary) throw ParseError("document is not a unitary");
  return std::get<Matrix>(payload);
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("document must be a JSON object");
  }
  const json& version = require_field(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw ParseError("unsupported schema_version (expected \"1\")");
  }
  const json& kind = require_field(j, "kind");
  if (!kind.is_string()) {
    throw ParseError("\"kind\" must be a string");
  }
  const std::string kind_name = kind.get<std::string>();
  const json& payload = require_field(j, "payload");

  Document doc;
  if (kind_name == "state") {
    doc.kind = DocKind::State;
    doc.payload = parse_state_payload(payload);
  } else if (kind_name == "channel") {
    doc.kind = DocKind::Channel;
    doc.payload = parse_channel_payload(payload);
  } else if (kind_name == "gluing_lsp") {
    doc.kind = DocKind::GluingLsp;
    KrausChannel a = parse_channel_payload(require_field(payload, "channel_a"));
    KrausChannel b = parse_channel_payload(require_field(payload, "channel_b"));
    Vector ca = json_to_vector(require_field(payload, "coeff_a"));
    Vector cb = json_to_vector(require_field(payload, "coeff_b"));
    doc.payload = make_lsp_gluing(std::move(a), std::move(b), std::move(ca), std::move(cb));
  } else if (kind_name == "gluing_sp") {
    doc.kind = DocKind::GluingSp;
    KrausChannel a = parse_channel_payload(require_field(payload, "channel_a"));
    KrausChannel b = parse_channel_payload(require_field(payload, "channel_b"));
    Matrix c = json_to_matrix(require_field(payload, "contraction"));
    doc.payload = make_sp_gluing(std::move(a), std::move(b), std::move(c));
  } else if (kind_name == "unitary") {
    doc.kind = DocKind::Unitary;
    doc.payload = parse_unitary_payload(payload);
  } else {
    throw ParseError("unknown document kind \"" + kind_name + "\"");
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string write_document(const Document& doc) {
  json payload;
  switch (doc.kind) {
    case DocKind::State:
      payload = state_payload(doc.as_state());
      break;
    case DocKind::Channel:
      payload = channel_payload(doc.as_channel());
      break;
    case DocKind::GluingLsp: {
      const LSPGluing& g = doc.as_gluing_lsp();
      payload = json{{"channel_a", channel_payload(g.channel_a)},
                     {"channel_b", channel_payload(g.channel_b)},
                     {"coeff_a", vector_to_json(g.coeff_a)},
                     {"coeff_b", vector_to_json(g.coeff_b)}};
      break;
    }
    case DocKind::GluingSp: {
      const SPGluing& g = doc.as_gluing_sp();
      payload = json{{"channel_a", channel_payload(g.channel_a)},
                     {"channel_b", channel_payload(g.channel_b)},
                     {"contraction", matrix_to_json(g.contraction)}};
      break;
    }
    case DocKind::Unitary:
      payload = json{{"dim", doc.as_unitary().rows()},
                     {"matrix", matrix_to_json(doc.as_unitary())}};
      break;
  }
  json j{{"schema_version", kSchemaVersion},
         {"kind", doc_kind_name(doc.kind)},
         {"payload", std::move(payload)}};
  return j.dump(2) + "\n";
}

Document make_state_document(DensityMatrix state) {
  Document doc;
  doc.kind = DocKind::State;
  doc.payload = std::move(state);
  return doc;
}

Document make_channel_document(KrausChannel channel) {
  Document doc;
  doc.kind = DocKind::Channel;
  doc.payload = std::move(channel);
  return doc;
}

Document make_gluing_document(LSPGluing gluing) {
  Document doc;
  doc.kind = DocKind::GluingLsp;
  doc.payload = std::move(gluing);
  return doc;
}

Document make_gluing_document(SPGluing gluing) {
  Document doc;
  doc.kind = DocKind::GluingSp;
  doc.payload = std::move(gluing);
  return doc;
}

Document make_unitary_document(Matrix unitary) {
  Document doc;
  doc.kind = DocKind::Unitary;
  doc.payload = std::move(unitary);
  return doc;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

}  // namespace cohlab
