// Copyright 2026 The causal-capacity Authors
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

// Channel files:
//   {"label": str, "qubits_in": int, "qubits_out": int,
//    "kraus": [ operator, ... ]}
// where each operator is a list of rows and each row a list of [re, im] pairs.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "causal/channel.hpp"

namespace causal {

/// Channel file could not be read, parsed, or does not describe a valid channel.
class ChannelFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline QuantumChannel channel_from_json(const nlohmann::json& doc) {
  auto fail = [](const std::string& why) -> ChannelFileError {
    return ChannelFileError("invalid channel file: " + why);
  };
  if (!doc.is_object()) throw fail("top level must be an object");
  for (const char* key : {"qubits_in", "qubits_out", "kraus"}) {
    if (!doc.contains(key)) throw fail(std::string("missing field '") + key + "'");
  }
  if (!doc["qubits_in"].is_number_integer() || !doc["qubits_out"].is_number_integer()) {
    throw fail("qubit counts must be integers");
  }
  const int qin = doc["qubits_in"].get<int>();
  const int qout = doc["qubits_out"].get<int>();
  if (qin < 1 || qin > 3 || qout < 1 || qout > 3) throw fail("qubit counts must lie in 1..3");
  const std::string label = doc.value("label", std::string("file"));
  const auto& kraus = doc["kraus"];
  if (!kraus.is_array() || kraus.empty()) throw fail("'kraus' must be a nonempty array");

  const std::size_t rows = qubit_dim(qout);
  const std::size_t cols = qubit_dim(qin);
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    const auto& op = kraus[k];
    const std::string where = "kraus[" + std::to_string(k) + "]";
    if (!op.is_array() || op.size() != rows) {
      throw fail(where + " must have " + std::to_string(rows) + " rows");
    }
    ComplexMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!op[i].is_array() || op[i].size() != cols) {
        throw fail(where + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& e = op[i][j];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
          throw fail(where + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") must be a [re, im] pair");
        }
        a(i, j) = {e[0].get<double>(), e[1].get<double>()};
      }
    }
    ops.push_back(std::move(a));
  }
  try {
    return from_kraus(std::move(ops), qin, qout, label);
  } catch (const ChannelError& e) {
    throw fail(e.what());
  }
}

inline QuantumChannel channel_from_json_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ChannelFileError(std::string("channel file is not valid JSON: ") + e.what());
  }
  return channel_from_json(doc);
}

inline QuantumChannel load_channel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ChannelFileError("cannot open channel file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return channel_from_json_string(buf.str());
}

inline nlohmann::json channel_to_json(const QuantumChannel& c) {
  nlohmann::json kraus = nlohmann::json::array();
  for (const auto& a : c.kraus()) {
    nlohmann::json op = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
      op.push_back(std::move(row));
    }
    kraus.push_back(std::move(op));
  }
  return {{"label", c.label()}, {"qubits_in", c.qubits_in()}, {"qubits_out", c.qubits_out()}, {"kraus", kraus}};
}

}  // namespace causal
