// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>

#include "qsync/channel.hpp"
#include "qsync/error.hpp"

using namespace qsync;

namespace {

struct Fixture {
    CyclicCodePair pair;
    PairingBasis basis;
};

Fixture make_fixture(int n, const char *p, const char *q) {
    auto pair = CyclicCodePair::make(n, BinaryPolynomial::parse(p), BinaryPolynomial::parse(q));
    return Fixture{pair, build_pairing_basis(pair)};
}

Fixture hamming() {
    return make_fixture(7, "1+x+x^3", "1");
}

Fixture distance_three() {
    return make_fixture(21, "1+x^3+x^9", "1+x^2+x^4+x^5+x^6");
}

CodeSpec spec_of(Family f, int a_l = 0, int a_r = 0, int y = 0) {
    CodeSpec s;
    s.family = f;
    s.a_l = a_l;
    s.a_r = a_r;
    s.y = y;
    return s;
}

ExtendedCodeInstance build(const Fixture &fx, const CodeSpec &spec) {
    return build_code(fx.pair, fx.basis, spec, BuildOptions{false});
}

std::vector<BitVector> bits(std::initializer_list<const char *> words) {
    std::vector<BitVector> out;
    for (const char *w : words) {
        out.push_back(BitVector::from_string(w));
    }
    return out;
}

std::vector<CodeSpec> admissible_specs(int gap) {
    std::vector<CodeSpec> out;
    for (int f = 1; f <= 7; ++f) {
        const Family fam = static_cast<Family>(f);
        const bool with_y = fam == Family::kQ4 || fam == Family::kQ6;
        for (int y = with_y ? 1 : 0; y <= (with_y ? gap - 2 : 0); ++y) {
            const int bound = is_synchronizable(fam) ? (with_y ? gap - y : gap) : 1;
            for (int a_l = 0; a_l < bound; ++a_l) {
                for (int a_r = 0; a_l + a_r < bound; ++a_r) {
                    out.push_back(spec_of(fam, a_l, a_r, y));
                }
            }
        }
    }
    return out;
}

BitVector word_of(int size, uint64_t value) {
    return BitVector::from_word(size, value);
}

}  // namespace

TEST(syndrome, hamming_check_rows_give_golden_values) {
    const auto rows = bits({"1011100", "0101110", "0010111"});
    EXPECT_EQ(syndrome(rows, BitVector::from_string("1000000")).to_string(), "100");
    EXPECT_EQ(syndrome(rows, BitVector(7)).to_string(), "000");
    const Fixture fx = hamming();
    for (const auto &c : fx.pair.p_rows()) {
        EXPECT_TRUE(syndrome(rows, c).none());
    }
    EXPECT_THROW(syndrome(rows, BitVector(6)), Error);
}

TEST(coset_leaders, match_brute_force_minimum_and_tie_break) {
    const Fixture fx = distance_three();
    const auto &rows = fx.basis.q_tilde;
    const int n = fx.pair.n();
    CosetLeaderDecoder dec(rows, n);
    ASSERT_EQ(dec.table_size(), size_t{1} << rows.size());
    std::map<std::string, BitVector> best;
    for (uint64_t w = 0; w < (uint64_t{1} << n); ++w) {
        if (__builtin_popcountll(w) > 4) {
            continue;
        }
        const BitVector e = word_of(n, w);
        const std::string key = syndrome(rows, e).to_string();
        auto it = best.find(key);
        if (it == best.end() || e.weight() < it->second.weight() ||
            (e.weight() == it->second.weight() && e.lex_less(it->second))) {
            best[key] = e;
        }
    }
    ASSERT_EQ(best.size(), dec.table_size());
    for (const auto &[key, e] : best) {
        auto got = dec.leader(BitVector::from_string(key));
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, e) << key;
    }
}

TEST(coset_leaders, single_errors_are_their_own_leaders_at_distance_three) {
    const Fixture fx = distance_three();
    CosetLeaderDecoder dec(fx.basis.q_tilde, 21);
    for (int i = 0; i < 21; ++i) {
        const BitVector e = BitVector::unit(21, i);
        EXPECT_EQ(dec.leader(syndrome(fx.basis.q_tilde, e)), e);
    }
}

TEST(sync_table, variant_a_golden_values) {
    const auto inst = build(hamming(), spec_of(Family::kQ2, 1, 1));
    const auto table = build_sync_table(inst, SyncTableVariant::kAlpha);
    std::map<int, std::string> got;
    for (const auto &[key, entry] : table.listing) {
        got[entry.alpha] = key.to_string();
    }
    EXPECT_EQ(got, (std::map<int, std::string>{{-1, "010"}, {0, "100"}, {1, "001"}}));
    EXPECT_EQ(table.domain_size, 3u);
}

TEST(sync_table, variant_c_golden_values) {
    const auto inst = build(hamming(), spec_of(Family::kQ4, 0, 1, 1));
    const auto table = build_sync_table(inst, SyncTableVariant::kMessageAndAlpha);
    std::map<std::pair<std::string, int>, std::string> got;
    for (const auto &[key, entry] : table.listing) {
        got[{entry.message.to_string(), entry.alpha}] = key.to_string();
    }
    const std::map<std::pair<std::string, int>, std::string> want{
        {{"0", 0}, "100"}, {{"0", 1}, "001"}, {{"1", 0}, "110"}, {{"1", 1}, "101"}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(table.domain_size, static_cast<size_t>((inst.a_l + inst.a_r + 1) * 2));
}

TEST(sync_table, variant_b_keys_are_dot_products_with_the_message_word) {
    const Fixture fx = hamming();
    const auto inst = build(fx, spec_of(Family::kQ5));
    const auto table = build_sync_table(inst, SyncTableVariant::kMessage);
    ASSERT_EQ(table.domain_size, 8u);
    for (const auto &[key, entry] : table.listing) {
        BitVector word(7);
        for (int i = 0; i < 3; ++i) {
            if (entry.message.get(i)) {
                word ^= fx.pair.marker().cyclic_shift(i);
            }
        }
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ(key.get(j), inst.provenance.p_tilde[static_cast<size_t>(j)].dot(word));
        }
    }
}

TEST(sync_table, every_admissible_spec_is_injective_and_reduced_rows_suffice) {
    for (const Fixture &fx : {hamming(), distance_three()}) {
        for (const CodeSpec &spec : admissible_specs(fx.pair.gap())) {
            const auto inst = build(fx, spec);
            std::vector<std::pair<SyncTableVariant, MessageRegister>> variants;
            if (is_synchronizable(spec.family)) {
                variants.emplace_back(alignment_variant(inst), MessageRegister::kB);
            }
            if (!inst.b_vectors.empty()) {
                variants.emplace_back(SyncTableVariant::kMessage, MessageRegister::kB);
            }
            if (!inst.c_vectors.empty()) {
                variants.emplace_back(SyncTableVariant::kMessage, MessageRegister::kC);
            }
            for (const auto &[variant, reg] : variants) {
                const bool reduced = sync_table_injective(inst, variant, {reg, false});
                const bool full = sync_table_injective(inst, variant, {reg, true});
                EXPECT_TRUE(reduced) << inst.name << " variant " << sync_table_variant_name(variant);
                EXPECT_TRUE(full) << inst.name;
            }
        }
    }
}

TEST(sync_table, colliding_domain_raises_lemma_violation) {
    auto inst = build(hamming(), spec_of(Family::kQ2, 1, 1));
    inst.provenance.p_tilde[1] = BitVector(7);
    inst.provenance.p_tilde[2] = BitVector(7);
    EXPECT_FALSE(sync_table_injective(inst, SyncTableVariant::kAlpha));
    try {
        build_sync_table(inst, SyncTableVariant::kAlpha);
        FAIL() << "expected a lemma violation";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kLemmaViolation);
    }
}

TEST(encoded_block, window_eigenvalues_match_dot_products) {
    const Fixture fx = hamming();
    const auto base = build(fx, spec_of(Family::kQ4, 1, 0, 1));
    for (uint64_t b = 0; b < 8; ++b) {
        for (uint64_t c = 0; c < 2; ++c) {
            EncodedBlock block(with_messages(base, word_of(3, b), word_of(1, c)));
            const BitVector source = block.instance().z_source();
            for (int alpha = -1; alpha <= 0; ++alpha) {
                const BitVector expect = sync_syndrome(base.provenance.p_tilde, source, alpha);
                for (int j = 0; j < 3; ++j) {
                    const BitVector support = z_padded(base.provenance.p_tilde[static_cast<size_t>(j)], 1 + alpha, -alpha);
                    auto value = block.eigenvalue(PauliOperator::z_type(support));
                    ASSERT_TRUE(value.has_value());
                    EXPECT_EQ(*value, expect.get(j));
                }
            }
        }
    }
}

TEST(transmit, noiseless_frames_and_reproducible_samples) {
    const auto inst = build(hamming(), spec_of(Family::kQ3, 1, 1));
    auto block = encode_block(inst);
    const FrameState clean = transmit(block, ChannelModel::noiseless(), 7);
    EXPECT_EQ(clean.true_alpha, 0);
    EXPECT_TRUE(clean.e_x.none() && clean.e_z.none());

    const ChannelModel noisy = ChannelModel::uniform_shift(0.2, 0.1, 1, 1);
    for (uint64_t trial = 0; trial < 20; ++trial) {
        const FrameState a = transmit(block, noisy, 42, trial);
        const FrameState b = transmit(block, noisy, 42, trial);
        EXPECT_EQ(a.true_alpha, b.true_alpha);
        EXPECT_EQ(a.e_x, b.e_x);
        EXPECT_EQ(a.e_z, b.e_z);
    }
    EXPECT_NE(transmit(block, noisy, 42, 0).e_x.to_string() + transmit(block, noisy, 42, 1).e_x.to_string() +
                  transmit(block, noisy, 42, 2).e_x.to_string(),
              transmit(block, noisy, 43, 0).e_x.to_string() + transmit(block, noisy, 43, 1).e_x.to_string() +
                  transmit(block, noisy, 43, 2).e_x.to_string());
}

TEST(transmit, shifts_outside_the_window_need_an_adversarial_channel) {
    const auto inst = build(hamming(), spec_of(Family::kQ3, 1, 1));
    auto block = encode_block(inst);
    EXPECT_THROW(transmit(block, ChannelModel::noiseless(2), 1), Error);
    ChannelModel adversarial = ChannelModel::noiseless(2);
    adversarial.adversarial = true;
    const FrameState frame = transmit(block, adversarial, 1);
    EXPECT_EQ(frame.true_alpha, 2);
    EXPECT_TRUE(frame.adversarial);
}

TEST(decode, clean_q3_frames_recover_shift_and_message) {
    const auto base = build(hamming(), spec_of(Family::kQ3, 1, 1));
    const Decoder decoder(base);
    for (uint64_t b = 0; b < 8; ++b) {
        auto block = encode_block(with_messages(base, word_of(3, b), BitVector(0)));
        for (int alpha = -1; alpha <= 1; ++alpha) {
            const auto report = decoder.decode(make_frame(block, alpha, BitVector(9), BitVector(9)));
            EXPECT_EQ(report.recovered_alpha, alpha);
            EXPECT_EQ(report.recovered_b, word_of(3, b));
            EXPECT_TRUE(report.sync_success && report.classical_success && report.quantum_success);
            EXPECT_EQ(report.residual_class, ResidualClass::kIdentity);
        }
    }
}

TEST(decode, single_errors_on_distance_three_pair) {
    const Fixture fx = distance_three();
    for (const CodeSpec &spec :
         {spec_of(Family::kQ2, 1, 1), spec_of(Family::kQ4, 1, 0, 1), spec_of(Family::kQ5), spec_of(Family::kQ7)}) {
        const auto base = build(fx, spec);
        const Decoder decoder(base);
        const int N = base.num_qubits;
        const uint64_t messages = uint64_t{1} << (base.message_b.size() + base.message_c.size());
        for (uint64_t m = 0; m < messages; m += 3) {
            const int nb = base.message_b.size();
            auto block = encode_block(with_messages(base, word_of(nb, m & ((1u << nb) - 1)),
                                                    word_of(base.message_c.size(), m >> nb)));
            for (int alpha = -base.a_l; alpha <= base.a_r; ++alpha) {
                for (int q = -1; q < 2 * N; ++q) {
                    BitVector e_x(N);
                    BitVector e_z(N);
                    if (q >= 0) {
                        (q < N ? e_x : e_z).set(q % N);
                    }
                    const auto report = decoder.decode(make_frame(block, alpha, e_x, e_z));
                    ASSERT_TRUE(report.sync_success && report.classical_success && report.quantum_success)
                        << base.name << " alpha " << alpha << " error " << q << ": " << report.note;
                }
            }
        }
    }
}

TEST(decode, out_of_window_shift_never_claims_success) {
    const Fixture fx = distance_three();
    const auto base = build(fx, spec_of(Family::kQ2, 1, 1));
    const Decoder decoder(base);
    auto block = encode_block(base);
    for (int alpha : {-3, -2, 2, 3}) {
        const auto report = decoder.decode(make_frame(block, alpha, BitVector(23), BitVector(23), true));
        EXPECT_FALSE(report.sync_success) << alpha;
        EXPECT_FALSE(report.quantum_success);
        EXPECT_FALSE(report.classical_success);
        EXPECT_TRUE(report.uncorrectable_sync || report.recovered_alpha != alpha);
    }
}

TEST(decode, heavy_noise_is_reported_as_failure) {
    const auto base = build(distance_three(), spec_of(Family::kQ3, 1, 1));
    const Decoder decoder(base);
    auto block = encode_block(base);
    const ChannelModel channel = ChannelModel::uniform_shift(0.4, 0.4, 1, 1);
    int failures = 0;
    for (uint64_t trial = 0; trial < 200; ++trial) {
        const auto report = decoder.decode(transmit(block, channel, 5, trial));
        failures += report.quantum_success ? 0 : 1;
        if (!report.sync_success) {
            EXPECT_FALSE(report.quantum_success || report.classical_success);
        }
    }
    EXPECT_GT(failures, 0);
}

TEST(encoding_circuit, reproduces_every_family_on_small_pairs) {
    std::vector<Fixture> fixtures{hamming()};
    for (const auto &cand : search_pairs(15)) {
        fixtures.push_back(make_fixture(15, cand.p.format().c_str(), cand.q.format().c_str()));
        break;
    }
    ASSERT_EQ(fixtures.size(), 2u);
    for (const Fixture &fx : fixtures) {
        for (const CodeSpec &spec : admissible_specs(fx.pair.gap())) {
            const auto check = verify_encoding_circuit(fx.pair, fx.basis, spec);
            EXPECT_TRUE(check.passed) << check.detail;
        }
    }
}

TEST(encoding_circuit, message_phases_flip_with_the_encoded_bits) {
    const Fixture fx = hamming();
    CodeSpec spec = spec_of(Family::kQ3, 1, 1);
    spec.message_b = BitVector::from_string("101");
    EXPECT_TRUE(verify_encoding_circuit(fx.pair, fx.basis, spec).passed);
    CodeSpec q5 = spec_of(Family::kQ5);
    q5.message_b = BitVector::from_string("011");
    q5.message_c = BitVector::from_string("110");
    const auto check = verify_encoding_circuit(fx.pair, fx.basis, q5);
    EXPECT_TRUE(check.passed) << check.detail;
    EXPECT_TRUE(encoder_cnots(7, 0, 0).empty());
}

TEST(encoding_circuit, cnot_order_within_the_commuting_set_is_irrelevant) {
    const Fixture fx = distance_three();
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        EXPECT_TRUE(verify_encoding_circuit(fx.pair, fx.basis, spec_of(Family::kQ2, 1, 1), seed).passed);
        EXPECT_TRUE(verify_encoding_circuit(fx.pair, fx.basis, spec_of(Family::kQ6, 1, 0, 1), seed).passed);
    }
    EXPECT_EQ(encoder_cnots(7, 1, 1), (std::vector<std::pair<int, int>>{{1, 8}, {7, 0}}));
}

TEST(block_checks, ancilla_equivalence_and_window_cover_hold) {
    const Fixture fx = distance_three();
    for (const CodeSpec &spec : admissible_specs(fx.pair.gap())) {
        const auto inst = build(fx, spec);
        EXPECT_TRUE(check_ancilla_z_equivalence(inst).passed) << inst.name;
        EXPECT_TRUE(check_window_cover(inst).passed) << inst.name;
    }
}
