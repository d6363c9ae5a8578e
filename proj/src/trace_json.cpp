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

#include "stegoq/trace_json.hpp"

#include "stegoq/error.hpp"

namespace stegoq::io {

Json to_json(const PauliOperator &p) { return p.to_subscript_string(); }

Json to_json(const std::optional<PauliOperator> &p) { return p ? to_json(*p) : Json(nullptr); }

Json to_json(const Syndrome &s) { return s.to_string(); }

Json to_json(const Amplitude &a) { return Json::array({a.real(), a.imag()}); }

Json to_json(const TraceEvent &e) {
    Json state = Json::array();
    for (const auto &d : e.state) state.push_back(Json::array({d.basis, d.re, d.im}));
    return Json{{"step", e.step}, {"name", e.name}, {"note", e.note}, {"labels", e.labels}, {"state", state}};
}

Json to_json(const std::vector<TraceEvent> &events) {
    Json out = Json::array();
    for (const auto &e : events) out.push_back(to_json(e));
    return out;
}

Json to_json(const StabilizerCode &code) {
    Json gens = Json::array(), lx = Json::array(), lz = Json::array();
    for (const auto &g : code.generators) gens.push_back(g.to_string());
    for (const auto &g : code.logical_x) lx.push_back(g.to_string());
    for (const auto &g : code.logical_z) lz.push_back(g.to_string());
    Json owned = Json::array();
    for (std::size_t q : code.ownership.qubits()) owned.push_back(q + 1);
    return Json{{"name", code.name}, {"n", code.n},          {"k", code.k},           {"d", code.d},
                {"generators", gens}, {"logical_x", lx},     {"logical_z", lz},       {"receiver_qubits", owned}};
}

Json to_json(const catalytic::RoundTrace &t) {
    Json j{{"status", catalytic::round_status_name(t.status)},
           {"syndrome", to_json(t.syndrome)},
           {"correction", to_json(t.correction)},
           {"recovered_cover", t.recovered_cover},
           {"recovered_secret", t.recovered_secret},
           {"replenish_fidelity", t.replenish_fidelity}};
    j["events"] = to_json(t.events);
    return j;
}

Json to_json(const catalytic::ChainResult &r) {
    Json rounds = Json::array();
    for (const auto &t : r.rounds) rounds.push_back(to_json(t));
    return Json{{"external_ebits_consumed", r.external_ebits_consumed}, {"aborted", r.aborted}, {"rounds", rounds}};
}

Json to_json(const degenerate::Distribution4 &d) { return d.values(); }

Json to_json(const degenerate::TrialRecord &r) {
    return Json{{"trial", r.trial},
                {"symbol", degenerate::symbol_string(r.symbol)},
                {"cover", r.cover},
                {"e_a", to_json(r.e_a)},
                {"e_b", to_json(r.e_b)},
                {"eve_class", degenerate::symbol_string(r.eve_class)},
                {"eve_cover", r.eve_cover}};
}

Json to_json(const phasebit::SyndromeRecord &r) {
    Json pairs = Json::array();
    for (const auto &[i, j, bit] : r.pair_sums) {
        pairs.push_back(Json{{"generators", Json::array({i + 1, j + 1})}, {"bit", bit}});
    }
    Json cands = Json::array();
    for (const auto &s : r.candidates) cands.push_back(to_json(s));
    return Json{{"non_flipping", r.nf_values}, {"pair_sums", pairs}, {"candidates", cands}};
}

Json to_json(const phasebit::PhaseBitTrace &t) {
    Json cands = Json::array();
    for (const auto &e : t.candidate_errors) cands.push_back(to_json(e));
    Json j{{"status", t.status},
           {"error", to_json(t.injected)},
           {"syndrome_record", to_json(t.record)},
           {"candidate_errors", cands},
           {"chosen_error", to_json(t.chosen_error)},
           {"ambiguous", t.ambiguous},
           {"recovered_secret", t.recovered_secret},
           {"secret_fidelity", t.secret_fidelity},
           {"cover_fidelity", t.cover_fidelity},
           {"success", t.success}};
    j["events"] = to_json(t.events);
    return j;
}

Json to_json(const phasebit::CollisionCensus &c) {
    Json entries = Json::array();
    for (const auto &e : c.entries) {
        entries.push_back(Json{{"error", to_json(e.error)}, {"record", e.record.key()}});
    }
    Json pairs = Json::array();
    for (const auto &g : c.collisions()) {
        Json group = Json::array();
        for (const auto &e : g) group.push_back(to_json(e));
        pairs.push_back(group);
    }
    return Json{{"errors", entries}, {"collision_count", pairs.size()}, {"collisions", pairs}};
}

Amplitude amplitude_from_json(const Json &j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw StegoError(ErrorCode::ParseError, "amplitude must be a number or [re, im]");
}

} // namespace stegoq::io
