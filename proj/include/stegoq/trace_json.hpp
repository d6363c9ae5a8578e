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

#include "json.hpp"

#include "stegoq/catalytic.hpp"
#include "stegoq/degenerate.hpp"
#include "stegoq/phasebit.hpp"
#include "stegoq/stabilizer_code.hpp"
#include "stegoq/trace.hpp"

namespace stegoq::io {

using Json = nlohmann::ordered_json;

inline constexpr const char *kTraceSchema = "stegoq-trace/1";

Json to_json(const PauliOperator &p);
Json to_json(const std::optional<PauliOperator> &p);
Json to_json(const Syndrome &s);
Json to_json(const Amplitude &a);
Json to_json(const TraceEvent &e);
Json to_json(const std::vector<TraceEvent> &events);
Json to_json(const StabilizerCode &code);

Json to_json(const catalytic::RoundTrace &t);
Json to_json(const catalytic::ChainResult &r);

Json to_json(const degenerate::Distribution4 &d);
Json to_json(const degenerate::TrialRecord &r);

Json to_json(const phasebit::SyndromeRecord &r);
Json to_json(const phasebit::PhaseBitTrace &t);
Json to_json(const phasebit::CollisionCensus &c);

/// [re, im] pair or a bare real number.
Amplitude amplitude_from_json(const Json &j);

} // namespace stegoq::io
