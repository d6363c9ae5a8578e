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

#include <string>
#include <vector>

#include "stegoq/statevector.hpp"

namespace stegoq {

/// One recorded protocol step with the full register at that point.
struct TraceEvent {
    int step = 0;
    std::string name;
    std::string note;
    Labels labels;
    std::vector<DumpEntry> state;
};

inline TraceEvent make_event(int step, std::string name, const StateVector &s, std::string note = {}) {
    return TraceEvent{step, std::move(name), std::move(note), s.labels(), s.dump()};
}

} // namespace stegoq
