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

#include "stegoq/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace stegoq::scenario {

namespace {

const Json &require(const Json &j, const std::string &key, const std::string &path) {
    if (!j.contains(key)) throw ConfigError(path + key, "missing required field");
    return j.at(key);
}

std::string get_string(const Json &j, const std::string &field) {
    if (!j.is_string()) throw ConfigError(field, "expected a string");
    return j.get<std::string>();
}

int get_bit(const Json &j, const std::string &field) {
    if (!j.is_number_integer() || (j.get<long long>() != 0 && j.get<long long>() != 1)) {
        throw ConfigError(field, "expected 0 or 1");
    }
    return j.get<int>();
}

std::array<double, 4> get_distribution(const Json &j, const std::string &field) {
    if (j.is_string() && j.get<std::string>() == "uniform") return {0.25, 0.25, 0.25, 0.25};
    if (!j.is_array() || j.size() != 4) throw ConfigError(field, "expected four probabilities or \"uniform\"");
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!j[i].is_number()) throw ConfigError(field + "[" + std::to_string(i) + "]", "expected a number");
        out[i] = j[i].get<double>();
    }
    try {
        degenerate::Distribution4 check(out);
    } catch (const StegoError &e) {
        throw ConfigError(field, e.what());
    }
    return out;
}

Amplitude get_amplitude(const Json &j, const std::string &field) {
    try {
        return io::amplitude_from_json(j);
    } catch (const StegoError &e) {
        throw ConfigError(field, e.what());
    }
}

RoundSpec parse_round(const Json &j, const std::string &path, Protocol protocol) {
    if (!j.is_object()) throw ConfigError(path.empty() ? "$" : path, "expected an object");
    const std::string pre = path.empty() ? std::string() : path + ".";
    RoundSpec r;
    if (j.contains("error")) r.error = get_string(j["error"], pre + "error");
    if (j.contains("cover")) {
        if (protocol != Protocol::Phasebit) throw ConfigError(pre + "cover", "only phase-bit rounds take amplitudes");
        const Json &c = j["cover"];
        if (!c.is_array()) throw ConfigError(pre + "cover", "expected a list of amplitudes");
        std::vector<Amplitude> cover;
        for (std::size_t i = 0; i < c.size(); ++i) cover.push_back(get_amplitude(c[i], pre + "cover[" + std::to_string(i) + "]"));
        r.cover = std::move(cover);
        r.secret = std::array<Amplitude, 2>{get_amplitude(require(j, "alpha", pre), pre + "alpha"),
                                            get_amplitude(require(j, "beta", pre), pre + "beta")};
        return r;
    }
    r.w = get_bit(require(j, "w", pre), pre + "w");
    r.b = get_bit(require(j, "b", pre), pre + "b");
    return r;
}

std::string default_code(Protocol p) {
    switch (p) {
    case Protocol::Catalytic:
        return "four_two_two";
    case Protocol::Degenerate:
        return "shor_ea";
    case Protocol::Phasebit:
        break;
    }
    return "five_qubit";
}

PauliOperator parse_error(const std::string &text, std::size_t n, const std::string &field) {
    try {
        return PauliOperator::parse(text, n);
    } catch (const StegoError &e) {
        throw ConfigError(field, e.what());
    }
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return make_rng(seed, trial)(); }

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

Json run_catalytic(const ScenarioConfig &c, const StabilizerCode &code) {
    std::vector<catalytic::ChainStep> steps;
    for (std::size_t i = 0; i < c.rounds.size(); ++i) {
        const auto &r = c.rounds[i];
        catalytic::ChainStep s{r.w, r.b, std::nullopt};
        const PauliOperator e = parse_error(r.error, code.n, "rounds[" + std::to_string(i) + "].error");
        if (!e.is_identity_pattern()) s.error = e;
        steps.push_back(s);
    }
    Json trials = Json::array();
    std::size_t ok = 0, total = 0;
    double min_replenish = 1.0;
    int ebits = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = trial_seed(c.seed, t);
        const auto chain = catalytic::run_chained(steps, code, seed);
        for (std::size_t i = 0; i < chain.rounds.size(); ++i) {
            ++total;
            if (chain.rounds[i].success(steps[i].cover, steps[i].secret)) ++ok;
            min_replenish = std::min(min_replenish, chain.rounds[i].replenish_fidelity);
        }
        total += steps.size() - chain.rounds.size();
        ebits += chain.external_ebits_consumed;
        trials.push_back(Json{{"trial", t}, {"seed", seed}, {"result", io::to_json(chain)}});
    }
    return Json{{"trials", trials},
                {"aggregates",
                 Json{{"success_rate", total ? static_cast<double>(ok) / static_cast<double>(total) : 0.0},
                      {"replenish_fidelity", min_replenish},
                      {"external_ebits_consumed", ebits}}}};
}

Json run_degenerate(const ScenarioConfig &c) {
    const degenerate::Distribution4 p(c.p), q(c.q);
    const auto run = degenerate::empirical_innocence_run(p, q, c.trials, c.seed);
    Json trials = Json::array();
    for (const auto &r : run.trials) trials.push_back(io::to_json(r));
    return Json{{"trials", trials},
                {"aggregates", Json{{"tv_distance", run.tv_distance},
                                    {"empirical", io::to_json(run.empirical)},
                                    {"analytic", io::to_json(run.analytic)}}}};
}

Json run_phasebit(const ScenarioConfig &c, const StabilizerCode &code) {
    std::optional<SupportMask> mask;
    if (c.mask) {
        try {
            mask = SupportMask::from_string(*c.mask);
        } catch (const StegoError &e) {
            throw ConfigError("mask", e.what());
        }
    }
    const auto ctx = phasebit::build_context(code, mask);
    phasebit::DecodePolicy policy;
    if (c.policy == "ALLOWED_SET") {
        std::vector<PauliOperator> allowed;
        if (c.allowed.empty() && code.name == "five_qubit") {
            allowed = phasebit::five_qubit_allowed_set();
        }
        for (std::size_t i = 0; i < c.allowed.size(); ++i) {
            allowed.push_back(parse_error(c.allowed[i], code.n, "allowed[" + std::to_string(i) + "]"));
        }
        policy = phasebit::DecodePolicy::allowed_set(std::move(allowed));
    }
    Json trials = Json::array();
    std::size_t ok = 0, ambiguous = 0, total = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        const std::uint64_t seed = trial_seed(c.seed, t);
        Json rounds = Json::array();
        for (std::size_t i = 0; i < c.rounds.size(); ++i) {
            const auto &r = c.rounds[i];
            const std::string field = "rounds[" + std::to_string(i) + "]";
            const PauliOperator e = parse_error(r.error, code.n, field + ".error");
            phasebit::PhaseBitTrace trace;
            if (r.cover) {
                try {
                    trace = phasebit::run_quantum_round(ctx, *r.cover, (*r.secret)[0], (*r.secret)[1], e, policy);
                } catch (const StegoError &err) {
                    if (err.code() != ErrorCode::InvalidArgument && err.code() != ErrorCode::DimensionMismatch) throw;
                    throw ConfigError(field, err.what());
                }
            } else {
                trace = phasebit::run_phasebit_round(ctx, static_cast<std::size_t>(r.w), r.b, e, policy,
                                                     seed + i);
            }
            ++total;
            ok += trace.success ? 1 : 0;
            ambiguous += trace.ambiguous ? 1 : 0;
            rounds.push_back(io::to_json(trace));
        }
        trials.push_back(Json{{"trial", t}, {"seed", seed}, {"rounds", rounds}});
    }
    const double denom = total ? static_cast<double>(total) : 1.0;
    return Json{{"trials", trials},
                {"aggregates", Json{{"success_rate", static_cast<double>(ok) / denom},
                                    {"ambiguity_rate", static_cast<double>(ambiguous) / denom},
                                    {"mask", ctx.q_vec.to_string()}}}};
}

} // namespace

std::string_view protocol_name(Protocol p) {
    switch (p) {
    case Protocol::Catalytic:
        return "catalytic";
    case Protocol::Degenerate:
        return "degenerate";
    case Protocol::Phasebit:
        break;
    }
    return "phasebit";
}

ScenarioConfig parse_config(const Json &j) {
    if (!j.is_object()) throw ConfigError("$", "scenario must be a JSON object");
    ScenarioConfig c;
    const std::string proto = get_string(require(j, "protocol", ""), "protocol");
    if (proto == "catalytic") {
        c.protocol = Protocol::Catalytic;
    } else if (proto == "degenerate") {
        c.protocol = Protocol::Degenerate;
    } else if (proto == "phasebit") {
        c.protocol = Protocol::Phasebit;
    } else {
        throw ConfigError("protocol", "expected catalytic, degenerate or phasebit, got '" + proto + "'");
    }
    c.code = j.contains("code") ? get_string(j["code"], "code") : default_code(c.protocol);
    try {
        find_code(c.code);
    } catch (const StegoError &e) {
        throw ConfigError("code", e.what());
    }
    if (c.protocol == Protocol::Degenerate && c.code != "shor_ea") {
        throw ConfigError("code", "the degenerate protocol runs on shor_ea");
    }
    if (j.contains("trials")) {
        const Json &t = j["trials"];
        if (!t.is_number_integer() || t.get<long long>() < 1) throw ConfigError("trials", "expected a positive integer");
        c.trials = t.get<std::size_t>();
    }
    if (j.contains("seed")) {
        const Json &s = j["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
            throw ConfigError("seed", "expected a non-negative 64-bit integer");
        }
        c.seed = s.get<std::uint64_t>();
    }
    if (j.contains("output")) {
        c.output = get_string(j["output"], "output");
        if (c.output != "json" && c.output != "text") throw ConfigError("output", "expected json or text");
    }

    if (c.protocol == Protocol::Degenerate) {
        if (j.contains("p")) c.p = get_distribution(j["p"], "p");
        if (j.contains("q")) c.q = get_distribution(j["q"], "q");
        return c;
    }

    if (j.contains("rounds")) {
        const Json &rounds = j["rounds"];
        if (!rounds.is_array() || rounds.empty()) throw ConfigError("rounds", "expected a non-empty list");
        for (std::size_t i = 0; i < rounds.size(); ++i) {
            c.rounds.push_back(parse_round(rounds[i], "rounds[" + std::to_string(i) + "]", c.protocol));
        }
    } else {
        c.rounds.push_back(parse_round(j, "", c.protocol));
    }
    const std::size_t n = find_code(c.code).n;
    for (std::size_t i = 0; i < c.rounds.size(); ++i) {
        parse_error(c.rounds[i].error, n, "rounds[" + std::to_string(i) + "].error");
    }
    if (c.protocol == Protocol::Phasebit) {
        if (j.contains("policy")) {
            c.policy = get_string(j["policy"], "policy");
            if (c.policy != "MIN_WEIGHT" && c.policy != "ALLOWED_SET") {
                throw ConfigError("policy", "expected MIN_WEIGHT or ALLOWED_SET");
            }
        }
        if (j.contains("allowed")) {
            const Json &a = j["allowed"];
            if (!a.is_array()) throw ConfigError("allowed", "expected a list of error strings");
            for (std::size_t i = 0; i < a.size(); ++i) {
                const std::string field = "allowed[" + std::to_string(i) + "]";
                c.allowed.push_back(get_string(a[i], field));
                parse_error(c.allowed.back(), n, field);
            }
        }
        if (j.contains("mask")) c.mask = get_string(j["mask"], "mask");
    }
    return c;
}

ScenarioConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

Json to_json(const ScenarioConfig &c) {
    Json j{{"protocol", protocol_name(c.protocol)}, {"code", c.code}, {"trials", c.trials}, {"seed", c.seed}};
    if (c.protocol == Protocol::Degenerate) {
        j["p"] = c.p;
        j["q"] = c.q;
        return j;
    }
    Json rounds = Json::array();
    for (const auto &r : c.rounds) {
        Json jr;
        if (r.cover) {
            Json cover = Json::array();
            for (const auto &a : *r.cover) cover.push_back(io::to_json(a));
            jr["cover"] = cover;
            jr["alpha"] = io::to_json((*r.secret)[0]);
            jr["beta"] = io::to_json((*r.secret)[1]);
        } else {
            jr["w"] = r.w;
            jr["b"] = r.b;
        }
        jr["error"] = r.error;
        rounds.push_back(jr);
    }
    j["rounds"] = rounds;
    if (c.protocol == Protocol::Phasebit) {
        j["policy"] = c.policy;
        j["allowed"] = c.allowed;
        j["mask"] = c.mask ? Json(*c.mask) : Json(nullptr);
    }
    return j;
}

Json run(const ScenarioConfig &config) {
    const StabilizerCode &code = find_code(config.code);
    Json body;
    switch (config.protocol) {
    case Protocol::Catalytic:
        body = run_catalytic(config, code);
        break;
    case Protocol::Degenerate:
        body = run_degenerate(config);
        break;
    case Protocol::Phasebit:
        body = run_phasebit(config, code);
        break;
    }
    return Json{{"schema", io::kTraceSchema},
                {"scenario", to_json(config)},
                {"trials", body["trials"]},
                {"aggregates", body["aggregates"]}};
}

Json report_gv(double delta_min, double delta_max, double step) {
    if (!(step > 0.0)) throw StegoError(ErrorCode::InvalidArgument, "step must be positive");
    if (!(delta_min >= 0.0) || !(delta_max < 0.5) || delta_min > delta_max) {
        throw StegoError(ErrorCode::InvalidArgument, "need 0 <= min <= max < 0.5");
    }
    Json rows = Json::array();
    for (std::size_t i = 0;; ++i) {
        const double delta = delta_min + static_cast<double>(i) * step;
        if (delta > delta_max + 1e-12) break;
        const double d = std::min(delta, delta_max);
        rows.push_back(Json{{"delta", d}, {"rate", catalytic::gv_secrecy_rate(d)}});
    }
    return Json{{"rows", rows}};
}

Json codes_list() {
    Json out = Json::array();
    for (const auto &c : catalog()) out.push_back(io::to_json(c));
    return Json{{"codes", out}};
}

Json collisions_report(const std::string &code_name) {
    const auto ctx = phasebit::build_context(find_code(code_name));
    Json flipping = Json::array(), non_flipping = Json::array();
    for (std::size_t i : ctx.flipping) flipping.push_back("S" + std::to_string(i + 1));
    for (std::size_t i : ctx.non_flipping) non_flipping.push_back("S" + std::to_string(i + 1));
    Json j{{"code", code_name},
           {"mask", ctx.q_vec.to_string()},
           {"flipping", flipping},
           {"non_flipping", non_flipping}};
    j.update(io::to_json(phasebit::census_collisions(ctx)));
    return j;
}

std::string render_trace_text(const Json &trace) {
    std::ostringstream os;
    const Json &sc = trace["scenario"];
    os << "schema " << trace["schema"].get<std::string>() << "\n";
    os << "protocol " << sc["protocol"].get<std::string>() << " on " << sc["code"].get<std::string>() << ", "
       << sc["trials"].get<std::size_t>() << " trial(s), seed " << sc["seed"].get<std::uint64_t>() << "\n";
    const std::string proto = sc["protocol"].get<std::string>();
    if (proto != "degenerate") {
        for (const auto &t : trace["trials"]) {
            const Json &rounds = proto == "phasebit" ? t["rounds"] : t["result"]["rounds"];
            std::size_t i = 0;
            for (const auto &r : rounds) {
                os << "trial " << t["trial"].get<std::size_t>() << " round " << i++ << ": ";
                if (proto == "phasebit") {
                    os << r["status"].get<std::string>() << " error " << r["error"].get<std::string>() << " chose "
                       << (r["chosen_error"].is_null() ? std::string("-") : r["chosen_error"].get<std::string>())
                       << (r["recovered_secret"].get<int>() < 0
                               ? " secret fidelity " + fmt(r["secret_fidelity"].get<double>())
                               : " secret " + std::to_string(r["recovered_secret"].get<int>()))
                       << " cover fidelity "
                       << fmt(r["cover_fidelity"].get<double>()) << (r["success"].get<bool>() ? " ok" : " FAILED");
                } else {
                    os << r["status"].get<std::string>() << " syndrome " << r["syndrome"].get<std::string>()
                       << " cover " << r["recovered_cover"].get<int>() << " secret "
                       << r["recovered_secret"].get<int>() << " replenish "
                       << fmt(r["replenish_fidelity"].get<double>());
                }
                os << "\n";
            }
        }
    }
    for (const auto &[key, value] : trace["aggregates"].items()) {
        os << key << " = " << (value.is_number_float() ? fmt(value.get<double>(), 10) : value.dump()) << "\n";
    }
    return os.str();
}

std::string render_gv_text(const Json &table) {
    std::ostringstream os;
    os << "delta      R_s\n";
    for (const auto &r : table["rows"]) {
        os << std::fixed << std::setprecision(4) << r["delta"].get<double>() << "     " << std::setprecision(10)
           << r["rate"].get<double>() << "\n";
    }
    return os.str();
}

std::string render_codes_text(const Json &codes) {
    std::ostringstream os;
    for (const auto &c : codes["codes"]) {
        os << c["name"].get<std::string>() << " [[" << c["n"] << "," << c["k"] << "," << c["d"] << "]] ";
        bool first = true;
        for (const auto &g : c["generators"]) {
            os << (first ? "" : " ") << g.get<std::string>();
            first = false;
        }
        if (!c["receiver_qubits"].empty()) os << "  receiver " << c["receiver_qubits"].dump();
        os << "\n";
    }
    return os.str();
}

std::string render_collisions_text(const Json &report) {
    std::ostringstream os;
    os << report["code"].get<std::string>() << " mask " << report["mask"].get<std::string>() << "\n";
    os << report["collision_count"].get<std::size_t>() << " collision group(s)\n";
    for (const auto &g : report["collisions"]) {
        os << " ";
        for (const auto &e : g) os << " " << e.get<std::string>();
        os << "\n";
    }
    return os.str();
}

} // namespace stegoq::scenario
