// Copyright 2026 The liebkagome Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lk/sweep.hpp"

namespace lk {

// Everything a CLI run needs: the sweep plan plus where and how to write.
struct RunConfig {
    SweepPlan plan;
    std::filesystem::path output_dir = "out";
    bool dump_samples = false;
    unsigned workers = 1;
    int verbosity = 0;
    std::optional<std::filesystem::path> samples_input;
};

struct ConfigKey {
    std::string_view name;
    std::string_view default_value;
    std::string_view help;
};

// Every accepted key, in documentation order.
const std::vector<ConfigKey>& config_keys();

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// `key = value` lines or whitespace-separated `key=value` tokens; `#` starts
// a comment.  Unknown keys are rejected here.
KeyValues parse_key_values(std::string_view text);

// Later entries win, so flags appended after file entries override them.
RunConfig build_config(const KeyValues& entries);

inline RunConfig parse_config(std::string_view text) { return build_config(parse_key_values(text)); }

// Creates the directory if needed and checks a file can be written in it.
void ensure_writable(const std::filesystem::path& dir);

} // namespace lk
