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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "stegoq/catalytic.hpp"
#include "stegoq/degenerate.hpp"
#include "stegoq/phasebit.hpp"
#include "stegoq/scenario.hpp"

using namespace stegoq;

namespace {

constexpr double kVectorTol = 1e-10;
constexpr double kEntropyTol = 1e-12;
constexpr double kMixTol = 1e-14;
constexpr double kTvBound = 0.05;
constexpr double kPrepRate = 0.25;
constexpr double kPrepRateTol = 0.02;
constexpr double kPrepFidelityTol = 1e-10;
constexpr double kGvTol = 1e-12;
constexpr double kQuantumFidelityTol = 1e-9;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

double max_diff(const StateVector &a, const StateVector &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) m = std::max(m, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    return m;
}

Outcome codeword_fidelity() {
    const std::map<std::string, int> signs{
        {"00000", 1},  {"00011", -1}, {"00101", 1},  {"00110", -1}, {"01001", 1},  {"01010", 1},
        {"01100", -1}, {"01111", -1}, {"10001", -1}, {"10010", 1},  {"10100", 1},  {"10111", -1},
        {"11000", -1}, {"11011", -1}, {"11101", -1}, {"11110", -1}};
    double worst = 0.0;
    const auto zero = codeword(five_qubit_code(), "0");
    for (std::uint64_t i = 0; i < zero.dimension(); ++i) {
        const auto it = signs.find(zero.basis_string(i));
        const double expected = it == signs.end() ? 0.0 : 0.25 * it->second;
        worst = std::max(worst, std::abs(zero.amplitudes()[i] - expected));
    }
    const double a = 1.0 / (2.0 * std::numbers::sqrt2);
    for (int w = 0; w < 2; ++w) {
        const auto cw = codeword(shor_ea_code(), static_cast<std::uint64_t>(w));
        for (std::uint64_t i = 0; i < cw.dimension(); ++i) {
            const std::string s = cw.basis_string(i);
            int ones = 0;
            bool ghz = true;
            for (int b = 0; b < 3; ++b) {
                const std::string blk = s.substr(3 * b, 3);
                ghz = ghz && (blk == "000" || blk == "111");
                ones += blk == "111";
            }
            const double expected = ghz ? ((w == 1 && ones % 2) ? -a : a) : 0.0;
            worst = std::max(worst, std::abs(cw.amplitudes()[i] - expected));
        }
    }
    return {worst <= kVectorTol, "max amplitude deviation " + num(worst)};
}

Outcome error_state_identity() {
    const auto code = shor_ea_code();
    auto lhs = codeword(code, std::uint64_t{0});
    lhs.apply_pauli(PauliOperator::from_subscripts("Z4Z9", 9), lhs.labels());
    auto rhs = codeword(code, std::uint64_t{1});
    rhs.apply_pauli(PauliOperator::from_subscripts("Z1", 9), rhs.labels());
    const double d = max_diff(lhs, rhs);
    return {d <= kVectorTol, "max |Z4Z9|0L> - Z1|1L>| = " + num(d)};
}

Outcome degeneracy_table() {
    const degenerate::DegenerateScheme scheme;
    const auto ea = scheme.alphabet().alice_set();
    int pairs = 0, violations = 0, stab = 0, norm = 0;
    for (const auto &a : ea) {
        for (const auto &b : scheme.alphabet().bob_set()) {
            ++pairs;
            switch (check_pair_condition(scheme.code(), ea, a, b).kind) {
            case PairClass::InStabilizer:
                ++stab;
                break;
            case PairClass::InEaNormalizer:
                ++norm;
                break;
            case PairClass::Violation:
                ++violations;
                break;
            }
        }
    }
    return {pairs == 28 && violations == 0, std::to_string(pairs) + " pairs: " + std::to_string(stab) +
                                                " in S, " + std::to_string(norm) + " via N(S), " +
                                                std::to_string(violations) + " violations"};
}

degenerate::Distribution4 random_distribution(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 4> v{e(rng), e(rng), e(rng), e(rng)};
    const double s = v[0] + v[1] + v[2] + v[3];
    for (auto &x : v) x /= s;
    v[3] = 1.0 - v[0] - v[1] - v[2];
    return degenerate::Distribution4(v);
}

Outcome entropy_monotonicity() {
    std::mt19937_64 rng(20240601);
    double worst_gap = 1e300;
    for (int t = 0; t < 100; ++t) {
        const auto p = random_distribution(rng), q = random_distribution(rng);
        worst_gap = std::min(worst_gap, degenerate::entropy(degenerate::mix_distribution(p, q)) - degenerate::entropy(p));
    }
    double worst_mix = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto p = random_distribution(rng), q = random_distribution(rng);
        const double M[4][4] = {{q[0], q[1], q[2], q[3]},
                                {q[1], q[0], q[3], q[2]},
                                {q[2], q[3], q[0], q[1]},
                                {q[3], q[2], q[1], q[0]}};
        const auto r = degenerate::mix_distribution(p, q);
        for (int k = 0; k < 4; ++k) {
            double expected = 0.0;
            for (int j = 0; j < 4; ++j) expected += M[k][j] * p[j];
            worst_mix = std::max(worst_mix, std::abs(r[k] - expected));
        }
    }
    return {worst_gap >= -kEntropyTol && worst_mix <= kMixTol,
            "min H(r)-H(p) " + num(worst_gap) + ", max circulant deviation " + num(worst_mix)};
}

Outcome innocence_statistics() {
    const auto run = degenerate::empirical_innocence_run(degenerate::Distribution4({0.7, 0.1, 0.1, 0.1}),
                                                         degenerate::Distribution4::uniform(), 10000, 5);
    return {run.tv_distance < kTvBound, "TV = " + num(run.tv_distance) + " over 10000 trials"};
}

Outcome catalytic_chain() {
    std::vector<catalytic::ChainStep> steps;
    for (int i = 0; i < 10; ++i) steps.push_back({(i >> 1) & 1, i & 1, std::nullopt});
    const auto r = catalytic::run_chained(steps, four_two_two_code(), 2718);
    bool ok = r.rounds.size() == 10 && !r.aborted && r.external_ebits_consumed == 1;
    double worst = 0.0;
    for (std::size_t i = 0; i < r.rounds.size(); ++i) {
        const auto &t = r.rounds[i];
        ok = ok && t.recovered_cover == steps[i].cover && t.recovered_secret == steps[i].secret;
        worst = std::max(worst, std::abs(1.0 - t.replenish_fidelity));
    }
    ok = ok && worst <= kVectorTol;
    return {ok, std::to_string(r.rounds.size()) + " rounds, external ebits " + std::to_string(r.external_ebits_consumed) +
                    ", max replenish infidelity " + num(worst)};
}

Outcome probabilistic_preparation() {
    int ok = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        auto rng = make_rng(777, static_cast<std::uint64_t>(t));
        ok += catalytic::prepare_quantum_stego(0.4, 2.0, 1.2, 0.3, rng).success ? 1 : 0;
    }
    const double rate = static_cast<double>(ok) / trials;

    const double r = 1.0 / std::numbers::sqrt2;
    const std::vector<oracle::C> phi_p{r, 0, 0, r}, phi_m{r, 0, 0, -r}, psi_p{0, r, r, 0}, psi_m{0, r, -r, 0};
    std::mt19937_64 params(4242);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst = 1.0;
    for (int t = 0; t < 20; ++t) {
        const double alpha = angle(params), beta = angle(params), mu = angle(params), nu = angle(params);
        auto rng = make_rng(31337, static_cast<std::uint64_t>(t));
        catalytic::QuantumStegoPreparation prep;
        do {
            prep = catalytic::prepare_quantum_stego(alpha, beta, mu, nu, rng);
        } while (!prep.success);
        const oracle::C i(0.0, 1.0);
        const oracle::C sb = std::sin(alpha) * std::exp(i * beta), cw = std::sin(mu) * std::exp(i * nu);
        std::vector<oracle::C> eta(4);
        for (std::size_t k = 0; k < 4; ++k) {
            eta[k] = std::cos(mu) * (std::cos(alpha) * phi_p[k] + sb * phi_m[k]) +
                     cw * (std::cos(alpha) * psi_p[k] + sb * psi_m[k]);
        }
        const std::vector<oracle::C> got(prep.state.amplitudes().begin(), prep.state.amplitudes().end());
        worst = std::min(worst, std::norm(oracle::inner(eta, got)));
    }
    return {std::abs(rate - kPrepRate) <= kPrepRateTol && worst >= 1.0 - kPrepFidelityTol,
            "success rate " + num(rate) + ", min fidelity " + num(worst)};
}

Outcome gv_rate() {
    const bool zero = catalytic::gv_secrecy_rate(0.0) == 0.5;
    bool decreasing = true;
    double prev = catalytic::gv_secrecy_rate(0.0);
    for (int i = 1; i <= 20; ++i) {
        const double v = catalytic::gv_secrecy_rate(0.01 * i);
        decreasing = decreasing && v < prev;
        prev = v;
    }
    const double d = 0.05;
    const double independent = 0.5 + d * std::log(d) / std::log(2.0) + (1 - d) * std::log(1 - d) / std::log(2.0) -
                               d * std::log(3.0) / std::log(2.0);
    const double got = catalytic::gv_secrecy_rate(d);
    return {zero && decreasing && std::abs(got - independent) <= kGvTol,
            std::string("R(0)=0.5 ") + (zero ? "yes" : "no") + ", decreasing " + (decreasing ? "yes" : "no") +
                ", R(0.05) = " + num(got) + " vs " + num(independent)};
}

Outcome flipping_classification() {
    const auto ctx = phasebit::build_context(five_qubit_code(), SupportMask::from_string("00011"));
    bool ok = ctx.flipping == std::vector<std::size_t>{0, 2, 3} && ctx.non_flipping == std::vector<std::size_t>{1};
    double worst = 0.0;
    for (std::size_t w = 0; w < 2; ++w) {
        const auto halves = phasebit::split_codeword(ctx, w);
        const StateVector *h[2] = {&halves.first, &halves.second};
        for (std::size_t g = 0; g < 4; ++g) {
            const bool flips = g != 1;
            for (int j = 0; j < 2; ++j) {
                StateVector s = *h[j];
                s.apply_pauli(ctx.code.generators[g], ctx.block);
                worst = std::max(worst, max_diff(s, *h[flips ? 1 - j : j]));
            }
        }
    }
    ok = ok && worst <= kVectorTol;
    return {ok, "flipping {S1,S3,S4}, non-flipping {S2}; max action deviation " + num(worst)};
}

Outcome phasebit_roundtrips() {
    const auto ctx = phasebit::build_context(five_qubit_code());
    const auto policy = phasebit::DecodePolicy::allowed_set(phasebit::five_qubit_allowed_set());
    int rounds = 0, good = 0;
    double worst = 1.0;
    for (const auto &e : phasebit::five_qubit_allowed_set()) {
        for (std::size_t w = 0; w < 2; ++w) {
            for (int b = 0; b < 2; ++b) {
                const auto t = phasebit::run_phasebit_round(ctx, w, b, e, policy, 100 + rounds);
                ++rounds;
                worst = std::min(worst, t.cover_fidelity);
                good += (t.recovered_secret == b && !t.ambiguous && t.cover_fidelity >= 1.0 - kVectorTol) ? 1 : 0;
            }
        }
    }
    return {good == rounds, std::to_string(good) + "/" + std::to_string(rounds) + " rounds, min cover fidelity " +
                                num(worst)};
}

Outcome ambiguity_census() {
    const auto ctx = phasebit::build_context(five_qubit_code());
    const auto pairs = phasebit::census_collisions(ctx).collisions();
    std::set<std::set<std::string>> got;
    for (const auto &p : pairs) {
        std::set<std::string> s;
        for (const auto &e : p) s.insert(e.to_subscript_string());
        got.insert(s);
    }
    // Brute-force oracle on dense matrices: records collide iff the syndromes
    // agree after complementing the flipping bits (S1, S3, S4).
    std::map<std::string, std::set<std::string>> groups;
    for (const auto &e : enumerate_paulis(5, 1)) {
        std::string s;
        for (const auto &g : ctx.code.generators) {
            s += oracle::anticommute(oracle::pauli(g.to_string()), oracle::pauli(e.to_string())) ? '1' : '0';
        }
        std::string c = s;
        for (std::size_t i : {0, 2, 3}) c[i] = c[i] == '0' ? '1' : '0';
        groups[std::min(s, c)].insert(e.to_subscript_string());
    }
    std::set<std::set<std::string>> expected;
    for (const auto &[k, v] : groups) {
        if (v.size() > 1) expected.insert(v);
    }
    const bool has_i_y2 = got.count({"I", "Y₂"}) == 1;
    const bool has_z4_z5 = got.count({"Z₄", "Z₅"}) == 1;
    return {pairs.size() == 8 && got == expected && has_i_y2 && has_z4_z5,
            std::to_string(pairs.size()) + " pairs, oracle agreement " + (got == expected ? "yes" : "no")};
}

Outcome quantum_linearity() {
    const auto ctx = phasebit::build_context(five_qubit_code());
    const auto allowed = phasebit::five_qubit_allowed_set();
    const auto policy = phasebit::DecodePolicy::allowed_set(allowed);
    std::mt19937_64 rng(8675309);
    std::normal_distribution<double> g;
    double worst = 1.0;
    for (int t = 0; t < 20; ++t) {
        std::vector<Amplitude> cover{{g(rng), g(rng)}, {g(rng), g(rng)}};
        Amplitude alpha{g(rng), g(rng)}, beta{g(rng), g(rng)};
        const double cn = std::sqrt(std::norm(cover[0]) + std::norm(cover[1]));
        const double sn = std::sqrt(std::norm(alpha) + std::norm(beta));
        for (auto &c : cover) c /= cn;
        alpha /= sn;
        beta /= sn;
        const auto &e = allowed[static_cast<std::size_t>(t) % allowed.size()];
        const auto r = phasebit::run_quantum_round(ctx, cover, alpha, beta, e, policy);
        worst = std::min({worst, r.secret_fidelity, r.cover_fidelity});
    }
    return {worst >= 1.0 - kQuantumFidelityTol, "min fidelity " + num(worst) + " over 20 draws"};
}

Outcome reproducibility() {
    using scenario::Json;
    const char *configs[] = {
        R"({"protocol": "phasebit", "trials": 3, "seed": 17, "policy": "ALLOWED_SET",
            "rounds": [{"w": 0, "b": 1, "error": "X1"}, {"w": 1, "b": 1, "error": "Y3"}]})",
        R"({"protocol": "degenerate", "trials": 500, "seed": 17, "p": [0.7, 0.1, 0.1, 0.1]})",
        R"({"protocol": "catalytic", "trials": 2, "seed": 17, "rounds": [{"w": 1, "b": 0}, {"w": 0, "b": 1}]})"};
    bool ok = true;
    for (const char *c : configs) {
        const auto cfg = scenario::parse_config(Json::parse(c));
        ok = ok && scenario::run(cfg).dump(2) == scenario::run(cfg).dump(2);
    }
    return {ok, "three protocols, identical serialized traces"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"codeword fidelity", codeword_fidelity},
        {"error-state operator identity", error_state_identity},
        {"degeneracy table", degeneracy_table},
        {"entropy monotonicity", entropy_monotonicity},
        {"innocence statistics", innocence_statistics},
        {"catalytic chain", catalytic_chain},
        {"probabilistic preparation", probabilistic_preparation},
        {"secrecy rate", gv_rate},
        {"flipping classification", flipping_classification},
        {"phase-bit round trips", phasebit_roundtrips},
        {"ambiguity census", ambiguity_census},
        {"quantum payload linearity", quantum_linearity},
        {"reproducibility", reproducibility},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
