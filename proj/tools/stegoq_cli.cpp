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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "stegoq/error.hpp"
#include "stegoq/scenario.hpp"

namespace {

using stegoq::scenario::Json;

void print_error(std::string_view code, const std::string &message, const std::string &field = {}) {
    Json err{{"code", code}, {"message", message}};
    if (!field.empty()) err["field"] = field;
    std::cerr << Json{{"error", err}}.dump() << "\n";
}

struct Output {
    std::string format = "json";
    std::string path;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--output", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", path, "write to a file instead of stdout");
    }

    void emit(const Json &doc, const std::string &text) const {
        const std::string body = format == "json" ? doc.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw stegoq::StegoError(stegoq::ErrorCode::InvalidArgument, "cannot write '" + path + "'");
        out << body;
    }
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Steganographic quantum error-correction simulator"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "Execute a scenario file");
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    Output run_out;
    bool output_given = false;
    run->add_option("--config", config_path, "scenario JSON")->required();
    run->add_option("--seed", seed, "override the scenario seed");
    run->add_option("--trials", trials, "override the trial count")->check(CLI::PositiveNumber);
    run_out.add_to(run);

    auto *codes = app.add_subcommand("codes", "Code catalog");
    codes->require_subcommand(1);
    auto *codes_list = codes->add_subcommand("list", "List the built-in codes");
    Output codes_out;
    codes_out.add_to(codes_list);

    auto *gv = app.add_subcommand("gv-table", "Secrecy-rate lower bound over a range of delta");
    double gv_min = 0.0, gv_max = 0.2, gv_step = 0.01;
    gv->add_option("--min", gv_min, "smallest delta");
    gv->add_option("--max", gv_max, "largest delta");
    gv->add_option("--step", gv_step, "grid spacing");
    Output gv_out;
    gv_out.add_to(gv);

    auto *coll = app.add_subcommand("collisions", "Measurement-record collisions of the phase-bit decoder");
    std::string coll_code = "five_qubit";
    coll->add_option("--code", coll_code, "catalog name");
    Output coll_out;
    coll_out.add_to(coll);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        print_error("USAGE_ERROR", e.what());
        return 2;
    }

    namespace sc = stegoq::scenario;
    try {
        if (*run) {
            output_given = run->count("--output") > 0;
            sc::ScenarioConfig cfg = sc::load_config(config_path);
            if (seed) cfg.seed = *seed;
            if (trials) cfg.trials = *trials;
            if (!output_given) run_out.format = cfg.output;
            const Json trace = sc::run(cfg);
            run_out.emit(trace, run_out.format == "text" ? sc::render_trace_text(trace) : std::string());
        } else if (*codes_list) {
            const Json doc = sc::codes_list();
            codes_out.emit(doc, sc::render_codes_text(doc));
        } else if (*gv) {
            const Json doc = sc::report_gv(gv_min, gv_max, gv_step);
            gv_out.emit(doc, sc::render_gv_text(doc));
        } else if (*coll) {
            const Json doc = sc::collisions_report(coll_code);
            coll_out.emit(doc, sc::render_collisions_text(doc));
        }
    } catch (const sc::ConfigError &e) {
        print_error(stegoq::error_code_name(e.code()), e.what(), e.field());
        return 2;
    } catch (const stegoq::StegoError &e) {
        print_error(stegoq::error_code_name(e.code()), e.what());
        return 1;
    } catch (const std::exception &e) {
        print_error("INTERNAL_ERROR", e.what());
        return 1;
    }
    return 0;
}
