// Copyright 2026 The stegoq Authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stegoq/error.hpp"
#include "stegoq/trace_json.hpp"

namespace stegoq::scenario {

using io::Json;

/// Configuration problem tied to a location in the scenario document.
class ConfigError : public StegoError {
  public:
    ConfigError(std::string field, const std::string &message)
        : StegoError(ErrorCode::ParseError, field + ": " + message), field_(std::move(field)) {}

    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

enum class Protocol { Catalytic, Degenerate, Phasebit };

struct RoundSpec {
    int w = 0;
    int b = 0;
    std::string error = "I";
    /// Quantum phase-bit round: superposed cover and secret amplitudes.
    std::optional<std::vector<Amplitude>> cover;
    std::optional<std::array<Amplitude, 2>> secret;
};

struct ScenarioConfig {
    Protocol protocol = Protocol::Phasebit;
    std::string code;
    std::vector<RoundSpec> rounds;
    std::string policy = "MIN_WEIGHT";
    std::vector<std::string> allowed;
    std::optional<std::string> mask;
    std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};
    std::array<double, 4> q{0.25, 0.25, 0.25, 0.25};
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string output = "json";
};

std::string_view protocol_name(Protocol p);

/// Throws ConfigError naming the offending field.
ScenarioConfig parse_config(const Json &j);
ScenarioConfig load_config(const std::string &path);
Json to_json(const ScenarioConfig &c);

/// Executes the scenario; deterministic for a fixed config.
Json run(const ScenarioConfig &config);

/// Rows (delta, rate) from delta_min to delta_max inclusive.
Json report_gv(double delta_min, double delta_max, double step);
Json codes_list();
Json collisions_report(const std::string &code_name);

/// Plain-text renderings of the JSON documents above.
std::string render_trace_text(const Json &trace);
std::string render_gv_text(const Json &table);
std::string render_codes_text(const Json &codes);
std::string render_collisions_text(const Json &report);

} // namespace stegoq::scenario
