// Copyright 2026 The shadowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// JSON schemas for circuits, models, shadows and DCR artifacts. Number-theory
// integers are written as decimal strings.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "shadowlab/circuit.hpp"
#include "shadowlab/dcr.hpp"
#include "shadowlab/model_types.hpp"
#include "shadowlab/shadow.hpp"

namespace shadowlab::io {

using nlohmann::json;

/// Parse errors carry file:line:column.
json read_json_file(const std::filesystem::path &path);
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

/// Canonical serialization used for files and hashing: two-space indent,
/// trailing newline.
std::string dump(const json &j);

uint64_t parse_u64(const std::string &text);
std::vector<double> parse_vector(const std::string &text);

json to_json(const CircuitSpec &c);
CircuitSpec circuit_from_json(const json &j);
json to_json(const CircuitTemplate &c);
CircuitTemplate template_from_json(const json &j);

json to_json(const FlippedLinearModel &m);
FlippedLinearModel flipped_model_from_json(const json &j);
json to_json(const ConventionalLinearModel &m);
ConventionalLinearModel conventional_model_from_json(const json &j);

json to_json(const PauliShadow &s);
PauliShadow shadow_from_json(const json &j);

json secret_json(const dcr::Modulus &m);
json public_json(const dcr::Modulus &m);
dcr::Modulus modulus_from_json(const json &j);
/// Reads N from either a public or a secret modulus file.
uint64_t public_modulus_from_json(const json &j);

std::string to_jsonl(const std::vector<dcr::LabeledSample> &samples);
/// Errors name the offending line.
std::vector<dcr::LabeledSample> dataset_from_jsonl(const std::string &text);

json to_json(const dcr::Hypothesis &h);
dcr::Hypothesis hypothesis_from_json(const json &j);

}  // namespace shadowlab::io
