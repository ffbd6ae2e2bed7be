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

// Command-line front end. Every subcommand builds a report of the form
// {command, git_describe, seed, config_hash, config, results}; identical
// configs produce byte-identical reports.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace shadowlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitProperty = 3;

/// Parses and runs one command line. Never throws; returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// FNV-1a 64 of the canonical dump, as 16 hex digits.
std::string config_hash(const nlohmann::json &config);

/// One "key,value" row per scalar leaf; nested keys joined with '.'.
std::string to_csv(const nlohmann::json &report);

std::string git_describe();

}  // namespace shadowlab::cli
