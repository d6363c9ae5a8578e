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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "oracle.hpp"
#include "stegoq/error.hpp"
#include "stegoq/phasebit.hpp"

using namespace stegoq;
using namespace stegoq::phasebit;

namespace {

PauliOperator P(const char *s) { return PauliOperator::parse(s, 5); }

const PhaseBitContext &five() {
    static const PhaseBitContext ctx = build_context(five_qubit_code());
    return ctx;
}

void expect_vectors_equal(const StateVector &a, const StateVector &b, double tol = 1e-10) {
    ASSERT_EQ(a.dimension(), b.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) ASSERT_NEAR(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 0.0, tol);
}

// Dense syndrome over S1..S4 as a 4-bit string.
std::string dense_syndrome(const PauliOperator &e) {
    std::string out;
    for (const auto &g : five_qubit_code().generators) {
        out += oracle::anticommute(oracle::pauli(g.to_string()), oracle::pauli(e.to_string())) ? '1' : '0';
    }
    return out;
}

std::string complement_flipping(std::string s) {
    for (std::size_t i : five().flipping) s[i] = s[i] == '0' ? '1' : '0';
    return s;
}

std::set<std::set<std::string>> as_sets(const std::vector<std::vector<PauliOperator>> &groups) {
    std::set<std::set<std::string>> out;
    for (const auto &g : groups) {
        std::set<std::string> s;
        for (const auto &e : g) s.insert(e.to_subscript_string());
        out.insert(s);
    }
    return out;
}

} // namespace

TEST(PhaseBitContext, FiveQubitDefaultMask) {
    const auto &ctx = five();
    EXPECT_EQ(ctx.q_vec.to_string(), "00011");
    EXPECT_EQ(ctx.flipping, (std::vector<std::size_t>{0, 2, 3}));
    EXPECT_EQ(ctx.non_flipping, (std::vector<std::size_t>{1}));
    EXPECT_EQ(ctx.sublogical_z, P("Z4Z5"));
    EXPECT_EQ(ctx.flip_generator, 0u);
    const auto explicit_ctx = build_context(five_qubit_code(), SupportMask::from_string("(0,0,0,1,1)"));
    EXPECT_EQ(explicit_ctx.flipping, ctx.flipping);
}

TEST(PhaseBitContext, SublogicalZOnSixQubitMask) {
    EXPECT_EQ(sublogical_z(SupportMask::from_string("010011")), PauliOperator::from_subscripts("Z2Z5Z6", 6));
}

TEST(PhaseBitContext, RejectsBadMasks) {
    try {
        build_context(five_qubit_code(), SupportMask::from_string("10000"));
        FAIL();
    } catch (const StegoError &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidMask);
    }
    try {
        build_context(four_two_two_code());
        FAIL();
    } catch (const StegoError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NoSplit);
    }
}

TEST(PhaseBitContext, InvariantsHoldForEveryAdmissibleMask) {
    const auto code = five_qubit_code();
    int admissible = 0;
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
        const SupportMask mask(5, bits);
        if (mask.weight() != 2) continue;
        PhaseBitContext ctx;
        try {
            ctx = build_context(code, mask);
        } catch (const StegoError &) {
            continue;
        }
        ++admissible;
        EXPECT_GE(ctx.flipping.size() * (ctx.flipping.size() - 1) / 2, ctx.flipping.size());
        for (std::size_t i = 0; i < code.generators.size(); ++i) {
            const bool flips = std::find(ctx.flipping.begin(), ctx.flipping.end(), i) != ctx.flipping.end();
            EXPECT_EQ(is_flipping(mask, code.generators[i]), flips);
            EXPECT_EQ(!commutes(ctx.sublogical_z, code.generators[i]), flips);
        }
    }
    EXPECT_GE(admissible, 1);
}

TEST(PhaseBitSplit, ZeroCodewordHalves) {
    const auto [l0, l1] = split_codeword(five(), 0);
    const std::map<std::string, int> l0_signs{{"00000", 1},  {"10100", 1},  {"11011", -1}, {"11000", -1},
                                              {"00011", -1}, {"01111", -1}, {"01100", -1}, {"10111", -1}};
    const std::set<std::string> l1_words{"10010", "01001", "00101", "01010", "11101", "00110", "11110", "10001"};
    const double a = 1.0 / (2.0 * std::numbers::sqrt2);
    for (std::uint64_t i = 0; i < 32; ++i) {
        const std::string s = l0.basis_string(i);
        const auto it = l0_signs.find(s);
        EXPECT_NEAR(std::abs(l0.amplitudes()[i] - (it == l0_signs.end() ? 0.0 : a * it->second)), 0.0, 1e-10) << s;
        EXPECT_NEAR(std::abs(l1.amplitudes()[i]), l1_words.count(s) ? a : 0.0, 1e-10) << s;
    }
}

TEST(PhaseBitSplit, HalvesReassembleCodewords) {
    for (std::size_t w = 0; w < 2; ++w) {
        const auto [l0, l1] = split_codeword(five(), w);
        EXPECT_NEAR(l0.norm_squared(), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(inner_product(l0, l1)), 0.0, 1e-12);
        const auto cw = codeword(five_qubit_code(), std::uint64_t{w});
        std::vector<Amplitude> sum(32);
        for (std::size_t i = 0; i < 32; ++i) sum[i] = (l0.amplitudes()[i] + l1.amplitudes()[i]) / std::numbers::sqrt2;
        expect_vectors_equal(StateVector(five().block, sum), StateVector(five().block, cw.amplitudes()));
    }
}

TEST(PhaseBitProperty, GeneratorsActAsNotOrIdentityOnHalves) {
    const auto &ctx = five();
    for (std::size_t w = 0; w < 2; ++w) {
        const auto halves = split_codeword(ctx, w);
        const StateVector *h[2] = {&halves.first, &halves.second};
        for (std::size_t g = 0; g < ctx.code.generators.size(); ++g) {
            const bool flips = std::find(ctx.flipping.begin(), ctx.flipping.end(), g) != ctx.flipping.end();
            for (int j = 0; j < 2; ++j) {
                StateVector s = *h[j];
                s.apply_pauli(ctx.code.generators[g], ctx.block);
                expect_vectors_equal(s, *h[flips ? 1 - j : j]);
            }
        }
        StateVector z0 = halves.first, z1 = halves.second;
        z0.apply_pauli(ctx.sublogical_z, ctx.block);
        z1.apply_pauli(ctx.sublogical_z, ctx.block);
        expect_vectors_equal(z0, halves.first);
        StateVector minus = halves.second;
        for (auto &a : minus.amplitudes()) a = -a;
        expect_vectors_equal(z1, minus);
    }
}

TEST(PhaseBitUpsilon, ClassicalAndQuantumForms) {
    const auto &ctx = five();
    const auto [l0, l1] = split_codeword(ctx, 0);
    for (int b = 0; b < 2; ++b) {
        const auto u = prepare_upsilon(ctx, 0, b);
        EXPECT_EQ(u.labels().back(), kBobLabel);
        const double sign = b ? -1.0 : 1.0;
        for (std::uint64_t v = 0; v < 32; ++v) {
            EXPECT_NEAR(std::abs(u.amplitudes()[v << 1U] - l0.amplitudes()[v] / std::numbers::sqrt2), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(u.amplitudes()[(v << 1U) | 1U] - sign * l1.amplitudes()[v] / std::numbers::sqrt2),
                        0.0, 1e-12);
        }
    }
    const Amplitude r = 1.0 / std::numbers::sqrt2;
    const auto q = prepare_upsilon(ctx, std::vector<Amplitude>{1.0, 0.0}, r, r);
    const auto u0 = prepare_upsilon(ctx, 0, 0), u1 = prepare_upsilon(ctx, 0, 1);
    std::vector<Amplitude> lin(u0.dimension());
    for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = r * u0.amplitudes()[i] + r * u1.amplitudes()[i];
    EXPECT_NEAR(fidelity(q, StateVector(u0.labels(), lin)), 1.0, 1e-12);
    EXPECT_THROW(prepare_upsilon(ctx, std::vector<Amplitude>{1.0, 1.0}, 1.0, 0.0), StegoError);
}

TEST(PhaseBitSyndromes, Examples) {
    const auto &ctx = five();
    auto s = prepare_upsilon(ctx, 0, 0);
    const auto rec_i = extract_syndromes(s, ctx);
    EXPECT_EQ(rec_i.nf_values, (std::vector<std::uint8_t>{0}));
    for (const auto &[i, j, bit] : rec_i.pair_sums) EXPECT_EQ(bit, 0);
    ASSERT_EQ(rec_i.candidates.size(), 2u);
    EXPECT_EQ(rec_i.candidates[0].to_string(), "0000");
    EXPECT_EQ(rec_i.candidates[1].to_string(), "1011");

    s.apply_pauli(P("X1"), ctx.block);
    const auto rec_x = extract_syndromes(s, ctx);
    ASSERT_EQ(rec_x.pair_sums.size(), 3u);
    EXPECT_EQ(std::get<2>(rec_x.pair_sums[0]), 0); // s1 + s3
    EXPECT_EQ(std::get<2>(rec_x.pair_sums[1]), 1); // s1 + s4
    EXPECT_EQ(std::get<2>(rec_x.pair_sums[2]), 1); // s3 + s4
    EXPECT_EQ(rec_x.candidates[0].to_string(), "0001");
    EXPECT_EQ(rec_x.candidates[1].to_string(), "1010");

    auto z2 = prepare_upsilon(ctx, 1, 1);
    z2.apply_pauli(P("Z2"), ctx.block);
    const auto rec_z = extract_syndromes(z2, ctx);
    EXPECT_TRUE(rec_z.candidates[0].to_string() == "0011" || rec_z.candidates[1].to_string() == "0011");
}

TEST(PhaseBitProperty, EigenstateStructureForAllSingleErrors) {
    const auto &ctx = five();
    const auto &g = ctx.code.generators;
    for (std::size_t w = 0; w < 2; ++w) {
        for (int b = 0; b < 2; ++b) {
            for (const auto &e : enumerate_paulis(5, 1)) {
                auto s = prepare_upsilon(ctx, w, b);
                s.apply_pauli(e, ctx.block);
                for (std::size_t i : ctx.non_flipping) EXPECT_NEAR(std::abs(s.expectation(g[i], ctx.block)), 1.0, 1e-10);
                for (std::size_t a = 0; a < ctx.flipping.size(); ++a) {
                    const double single = s.expectation(g[ctx.flipping[a]], ctx.block);
                    EXPECT_LT(std::abs(single), 1.0 - 1e-6) << e.to_subscript_string();
                    for (std::size_t c = a + 1; c < ctx.flipping.size(); ++c) {
                        EXPECT_NEAR(std::abs(s.expectation(g[ctx.flipping[a]] * g[ctx.flipping[c]], ctx.block)), 1.0,
                                    1e-10);
                    }
                }
                const auto rec = extract_syndromes(s, ctx);
                std::string diff;
                for (std::size_t i = 0; i < 4; ++i) diff += rec.candidates[0].bits[i] == rec.candidates[1].bits[i] ? '0' : '1';
                EXPECT_EQ(diff, "1011");
            }
        }
    }
}

TEST(PhaseBitSyndromes, NonEigenstateIsRejected) {
    const auto &ctx = five();
    auto s = prepare_upsilon(ctx, 0, 0);
    auto t = s;
    t.apply_pauli(P("X1"), ctx.block);
    for (std::size_t i = 0; i < s.dimension(); ++i) s.amplitudes()[i] = (s.amplitudes()[i] + t.amplitudes()[i]) / std::numbers::sqrt2;
    try {
        extract_syndromes(s, ctx);
        FAIL();
    } catch (const StegoError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotEigenstate);
    }
}

TEST(PhaseBitResolve, Policies) {
    const auto &ctx = five();
    auto run = [&](const char *err, const DecodePolicy &policy) {
        auto s = prepare_upsilon(ctx, 0, 0);
        s.apply_pauli(P(err), ctx.block);
        return resolve_and_correct(s, extract_syndromes(s, ctx), ctx, policy);
    };
    const auto none = run("I", DecodePolicy::min_weight());
    ASSERT_TRUE(none.chosen.has_value());
    EXPECT_TRUE(none.chosen->is_identity_pattern());
    EXPECT_FALSE(none.ambiguous);

    const auto y2 = run("Y2", DecodePolicy::min_weight());
    ASSERT_TRUE(y2.chosen.has_value());
    EXPECT_TRUE(y2.chosen->is_identity_pattern());
    EXPECT_EQ(y2.candidate_errors.size(), 2u);
    EXPECT_TRUE(std::any_of(y2.candidate_errors.begin(), y2.candidate_errors.end(),
                            [](const auto &e) { return e && *e == P("Y2"); }));

    const auto z5 = run("Z5", DecodePolicy::min_weight());
    EXPECT_TRUE(z5.ambiguous);
    EXPECT_FALSE(z5.chosen.has_value());

    const auto allowed = DecodePolicy::allowed_set(five_qubit_allowed_set());
    const auto x1 = run("X1", allowed);
    ASSERT_TRUE(x1.chosen.has_value());
    EXPECT_EQ(*x1.chosen, P("X1"));
    EXPECT_TRUE(run("X3", allowed).chosen == P("X1"));
    EXPECT_TRUE(run("I", DecodePolicy::allowed_set({})).ambiguous);
    EXPECT_TRUE(run("Z4", DecodePolicy::allowed_set({P("Z4"), P("Z5")})).ambiguous);
}

TEST(PhaseBitReadout, SecretBitIsDeterministic) {
    const auto &ctx = five();
    auto rng = make_rng(1);
    for (std::size_t w = 0; w < 2; ++w) {
        for (int b = 0; b < 2; ++b) {
            const auto r = read_secret(prepare_upsilon(ctx, w, b), ctx, rng);
            EXPECT_EQ(r.bit, b);
            EXPECT_NEAR(r.probability_one, b, 1e-12);
            const auto [l0, l1] = split_codeword(ctx, w);
            EXPECT_NEAR(fidelity(r.block, l0), 1.0, 1e-10);
        }
    }
}

TEST(PhaseBitReadout, AnyFlippingGeneratorWorks) {
    const auto &ctx = five();
    for (std::size_t g : ctx.flipping) {
        const auto alt = with_flip_generator(ctx, g);
        auto rng = make_rng(2);
        EXPECT_EQ(read_secret(prepare_upsilon(alt, 1, 1), alt, rng).bit, 1);
        const auto t = run_phasebit_round(alt, 1, 0, P("Z3"), DecodePolicy::allowed_set(five_qubit_allowed_set()), 4);
        EXPECT_TRUE(t.success);
    }
    EXPECT_THROW(with_flip_generator(ctx, 1), StegoError);
}

TEST(PhaseBitReadout, EntangledBobQubitFails) {
    const auto &ctx = five();
    auto s = prepare_upsilon(ctx, 0, 0);
    s.apply_controlled_pauli(kBobLabel, P("Z4"), ctx.block);
    EXPECT_THROW(disentangle(s, ctx), StegoError);
}

TEST(PhaseBitRestore, SublogicalHadamard) {
    const auto &ctx = five();
    for (std::size_t w = 0; w < 2; ++w) {
        const auto [l0, l1] = split_codeword(ctx, w);
        const auto restored = restore_cover(l0, ctx);
        expect_vectors_equal(restored, StateVector(ctx.block, codeword(ctx.code, std::uint64_t{w}).amplitudes()));
    }
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(32);
    for (auto &a : amps) a = {g(rng), g(rng)};
    StateVector s(ctx.block, amps);
    s.normalize();
    expect_vectors_equal(restore_cover(restore_cover(s, ctx), ctx), s);
}

TEST(PhaseBitRound, Examples) {
    const auto &ctx = five();
    const auto allowed = DecodePolicy::allowed_set(five_qubit_allowed_set());
    const auto ok = run_phasebit_round(ctx, 0, 0, PauliOperator(5), DecodePolicy::min_weight(), 1);
    EXPECT_TRUE(ok.success);
    EXPECT_EQ(ok.status, "OK");
    EXPECT_EQ(ok.events.size(), 5u);

    const auto collision = run_phasebit_round(ctx, 0, 1, P("Z5"), DecodePolicy::min_weight(), 1);
    EXPECT_TRUE(collision.ambiguous);
    EXPECT_FALSE(collision.success);
    EXPECT_EQ(collision.status, "AMBIGUOUS");

    const auto x1 = run_phasebit_round(ctx, 1, 1, P("X1"), allowed, 1);
    EXPECT_TRUE(x1.success);
    EXPECT_NEAR(x1.cover_fidelity, 1.0, 1e-10);

    // Mis-resolution of the {I, Y2} pair flips the secret and spoils the cover.
    const auto y2 = run_phasebit_round(ctx, 0, 0, P("Y2"), DecodePolicy::min_weight(), 1);
    EXPECT_FALSE(y2.ambiguous);
    EXPECT_FALSE(y2.success);
    EXPECT_EQ(y2.recovered_secret, 1);
}

TEST(PhaseBitRound, QuantumPayload) {
    const auto &ctx = five();
    const auto allowed = DecodePolicy::allowed_set(five_qubit_allowed_set());
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    for (int t = 0; t < 5; ++t) {
        std::vector<Amplitude> cover{{g(rng), g(rng)}, {g(rng), g(rng)}};
        Amplitude alpha{g(rng), g(rng)}, beta{g(rng), g(rng)};
        const double cn = std::sqrt(std::norm(cover[0]) + std::norm(cover[1]));
        const double sn = std::sqrt(std::norm(alpha) + std::norm(beta));
        for (auto &c : cover) c /= cn;
        alpha /= sn;
        beta /= sn;
        for (const auto &e : five_qubit_allowed_set()) {
            const auto r = run_quantum_round(ctx, cover, alpha, beta, e, allowed);
            EXPECT_TRUE(r.success) << e.to_subscript_string();
            EXPECT_NEAR(r.secret_fidelity, 1.0, 1e-9);
            EXPECT_NEAR(r.cover_fidelity, 1.0, 1e-9);
        }
    }
}

TEST(PhaseBitCensus, EightCollisionPairsMatchDenseOracle) {
    const auto census = census_collisions(five());
    ASSERT_EQ(census.entries.size(), 16u);
    const auto pairs = census.collisions();
    EXPECT_EQ(pairs.size(), 8u);

    // Oracle: two errors are indistinguishable iff their dense syndromes agree
    // up to complementing every flipping bit.
    std::map<std::string, std::set<std::string>> oracle_groups;
    for (const auto &e : enumerate_paulis(5, 1)) {
        const std::string s = dense_syndrome(e);
        oracle_groups[std::min(s, complement_flipping(s))].insert(e.to_subscript_string());
    }
    std::set<std::set<std::string>> expected;
    for (const auto &[k, v] : oracle_groups) expected.insert(v);
    EXPECT_EQ(as_sets(census.groups), expected);

    const std::set<std::set<std::string>> frozen{{"I", "Y₂"}, {"X₁", "X₃"}, {"Y₁", "X₄"}, {"Z₁", "Y₅"},
                                                 {"X₂", "Z₂"}, {"Y₃", "X₅"}, {"Z₃", "Y₄"}, {"Z₄", "Z₅"}};
    EXPECT_EQ(as_sets(pairs), frozen);

    std::multiset<std::string> seen;
    for (const auto &p : pairs)
        for (const auto &e : p) seen.insert(e.to_subscript_string());
    EXPECT_EQ(seen.size(), 16u);
    EXPECT_EQ(std::set<std::string>(seen.begin(), seen.end()).size(), 16u);
}

TEST(PhaseBitCensus, AllowedSetHasOneMemberPerPair) {
    const auto pairs = census_collisions(five()).collisions();
    for (const auto &p : pairs) {
        int hits = 0;
        for (const auto &e : p) {
            for (const auto &a : five_qubit_allowed_set()) hits += a == e ? 1 : 0;
        }
        EXPECT_EQ(hits, 1);
    }
}
