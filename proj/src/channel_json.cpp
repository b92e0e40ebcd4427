// Copyright 2026 The qchannel Authors
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

#include <json.hpp>
#include <stdexcept>

#include "qchannel/channel.hpp"

namespace qchannel {

namespace {

using nlohmann::json;

json matrix_to_json(const CMat& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      row.push_back({a(i, j).real(), a(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
    throw std::invalid_argument("matrix must be a non-empty list of rows");
  }
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = static_cast<Eigen::Index>(rows[0].size());
  CMat a(n_rows, n_cols);
  for (Eigen::Index i = 0; i < n_rows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols) {
      throw std::invalid_argument("ragged matrix row");
    }
    for (Eigen::Index j = 0; j < n_cols; ++j) {
      const json& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw std::invalid_argument("matrix entry must be an [re, im] pair");
      }
      a(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return a;
}

}  // namespace

std::string kraus_to_json(const KrausSet& ks, bool with_choi) {
  json doc;
  doc["m"] = ks.m;
  doc["n"] = ks.n;
  json ops = json::array();
  for (const auto& a : ks.ops) ops.push_back(matrix_to_json(a));
  doc["kraus"] = std::move(ops);
  if (with_choi) doc["choi"] = matrix_to_json(choi_from_kraus(ks).j);
  return doc.dump(1) + "\n";
}

KrausSet kraus_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed channel JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") || !doc.contains("kraus")) {
    throw std::invalid_argument("channel JSON needs fields m, n and kraus");
  }
  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer() || !doc["kraus"].is_array()) {
    throw std::invalid_argument("channel JSON has fields of the wrong type");
  }
  KrausSet ks{doc["m"].get<int>(), doc["n"].get<int>(), {}};
  for (const auto& op : doc["kraus"]) ks.ops.push_back(matrix_from_json(op));
  ks.validate();
  return ks;
}

}  // namespace qchannel
