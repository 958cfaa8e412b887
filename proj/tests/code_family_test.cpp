// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "qsync/code_family.hpp"
#include "qsync/error.hpp"

using namespace qsync;

namespace {

struct Fixture {
    CyclicCodePair pair;
    PairingBasis basis;
};

Fixture make_fixture(int n, const char *p, const char *q) {
    auto pair = CyclicCodePair::make(n, BinaryPolynomial::parse(p), BinaryPolynomial::parse(q));
    auto basis = build_pairing_basis(pair);
    return Fixture{pair, basis};
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

const CheckResult *find_check(const std::vector<CheckResult> &checks, const std::string &name) {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

// Index-arithmetic rotation: result[i] = v[(i + amount) mod n], i.e. a left rotation by `amount`.
BitVector rotate_left(const BitVector &v, int amount) {
    const int n = v.size();
    BitVector out(n);
    for (int i = 0; i < n; ++i) {
        if (v.get(((i + amount) % n + n) % n)) {
            out.set(i);
        }
    }
    return out;
}

std::vector<PauliOperator> all_paulis_of_weight(int n, int w) {
    std::vector<PauliOperator> out;
    std::vector<int> idx(static_cast<size_t>(w));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == w) {
            for (int kinds = 0; kinds < (1 << (2 * w)); ++kinds) {
                BitVector x(n);
                BitVector z(n);
                bool ok = true;
                for (int t = 0; t < w; ++t) {
                    int k = (kinds >> (2 * t)) & 3;
                    if (k == 0) {
                        ok = false;
                        break;
                    }
                    if (k & 1) {
                        x.set(idx[static_cast<size_t>(t)]);
                    }
                    if (k & 2) {
                        z.set(idx[static_cast<size_t>(t)]);
                    }
                }
                if (ok) {
                    out.emplace_back(x, z);
                }
            }
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

TEST(block_layout, windows_copy_the_requested_ends) {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            BitVector v = BitVector::from_word(n, rng());
            for (int left = 0; left <= n; ++left) {
                for (int right = 0; right <= n; ++right) {
                    BitVector w = x_window(v, left, right);
                    ASSERT_EQ(w.size(), left + n + right);
                    for (int i = 0; i < left; ++i) {
                        EXPECT_EQ(w.get(i), v.get(n - left + i));
                    }
                    for (int i = 0; i < n; ++i) {
                        EXPECT_EQ(w.get(left + i), v.get(i));
                    }
                    for (int i = 0; i < right; ++i) {
                        EXPECT_EQ(w.get(left + n + i), v.get(i));
                    }
                    BitVector z = z_padded(v, left, right);
                    ASSERT_EQ(z.size(), left + n + right);
                    EXPECT_EQ(z.weight(), v.weight());
                    EXPECT_EQ(z.slice(left, n), v);
                }
            }
        }
    }
}

TEST(block_layout, ancilla_rows_follow_the_paired_identity_blocks) {
    for (int n = 2; n <= 8; ++n) {
        for (int a_l = 0; a_l <= n; ++a_l) {
            for (int a_r = 0; a_l + a_r <= n; ++a_r) {
                const int total = n + a_l + a_r;
                // Dense matrix: [1_al 0 0 1_al 0 ; 0 1_ar 0 0 1_ar] with column widths al, ar, n-al-ar, al, ar.
                for (int row = 0; row < a_l + a_r; ++row) {
                    std::vector<int> cols;
                    if (row < a_l) {
                        cols = {row, a_l + a_r + (n - a_l - a_r) + row};
                    } else {
                        int t = row - a_l;
                        cols = {a_l + t, a_l + a_r + (n - a_l - a_r) + a_l + t};
                    }
                    BitVector want(total);
                    for (int c : cols) {
                        want.set(c);
                    }
                    EXPECT_EQ(ancilla_row(n, a_l, a_r, row), want) << n << " " << a_l << " " << a_r << " " << row;
                }
            }
        }
    }
    EXPECT_THROW(ancilla_row(7, 1, 1, 2), Error);
}

TEST(build_code, q2_on_hamming_pair_extends_to_nine_qubits) {
    auto fx = hamming();
    auto inst = build_code(fx.pair, fx.basis, spec_of(Family::kQ2, 1, 1));
    EXPECT_EQ(inst.num_qubits, 9);
    EXPECT_EQ(inst.params.k, 1);
    EXPECT_EQ(inst.params.r, 3);
    EXPECT_EQ(inst.params.m, 0);
    EXPECT_EQ(inst.params.d_sync_max, 3);
    // D is the full space, so there are no q~ rows: three Z(p~) rows and two ancilla rows.
    EXPECT_EQ(inst.stabilizers.size(), 5u);
    for (const auto &s : inst.stabilizers) {
        EXPECT_TRUE(s.op.x().none());
    }
}

TEST(build_code, q1_on_hamming_pair_has_six_gauge_qubits) {
    auto fx = hamming();
    auto inst = build_code(fx.pair, fx.basis, spec_of(Family::kQ1));
    EXPECT_EQ(inst.num_qubits, 7);
    EXPECT_EQ(inst.params.k, 1);
    EXPECT_EQ(inst.params.r, 6);
    EXPECT_EQ(inst.params.d_sync_max, 1);
}

TEST(build_code, q5_with_zero_messages_is_the_third_initial_code) {
    auto fx = hamming();
    auto q5 = build_code(fx.pair, fx.basis, spec_of(Family::kQ5));
    auto initial = build_initial_code(fx.pair, fx.basis, 3);
    for (const auto &s : q5.stabilizers) {
        EXPECT_EQ(s.op.phase(), 0) << s.label;
    }
    EXPECT_TRUE(same_group(q5.inner_stabilizer_group(), initial.inner_stabilizer_group(), PhaseMode::kExact));
}

TEST(build_code, phases_follow_the_message_dot_products) {
    auto fx = distance_three();
    CodeSpec spec = spec_of(Family::kQ4, 0, 1, 1);
    spec.message_b = BitVector::from_string("101");
    spec.message_c = BitVector::from_string("1");
    auto inst = build_code(fx.pair, fx.basis, spec, BuildOptions{false});
    const auto dec = fx.pair.decompose_generators();
    BitVector x_source = dec.q_rows[0] ^ dec.q_rows[2];
    BitVector z_source = fx.pair.marker() ^ dec.q_rows[1];
    int seen = 0;
    for (const auto &s : inst.stabilizers) {
        for (size_t j = 0; j < dec.p_check.size(); ++j) {
            if (s.label == "X(p~[" + std::to_string(j + 1) + "])") {
                EXPECT_EQ(s.op.phase() == 2, dec.p_check[j].dot(x_source));
                ++seen;
            }
            if (s.label == "Z(p~[" + std::to_string(j + 1) + "])") {
                EXPECT_EQ(s.op.phase() == 2, dec.p_check[j].dot(z_source));
                ++seen;
            }
        }
    }
    EXPECT_EQ(seen, 2 * fx.pair.gap());
}

TEST(build_code, invalid_specs_are_rejected) {
    auto fx = hamming();
    EXPECT_THROW(build_code(fx.pair, fx.basis, spec_of(Family::kQ2, 2, 1)), Error);
    EXPECT_THROW(build_code(fx.pair, fx.basis, spec_of(Family::kQ1, 1, 0)), Error);
    EXPECT_THROW(build_code(fx.pair, fx.basis, spec_of(Family::kQ4, 1, 1, 1)), Error);
    CodeSpec wrong_len = spec_of(Family::kQ3);
    wrong_len.message_b = BitVector::from_string("10");
    EXPECT_THROW(build_code(fx.pair, fx.basis, wrong_len), Error);
    CodeSpec no_b = spec_of(Family::kQ2);
    no_b.message_b = BitVector::from_string("101");
    EXPECT_THROW(build_code(fx.pair, fx.basis, no_b), Error);
}

TEST(build_code, q6_at_the_degenerate_y_points_to_q7) {
    auto fx = hamming();
    try {
        build_code(fx.pair, fx.basis, spec_of(Family::kQ6, 0, 0, 2));
        FAIL() << "expected rejection";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kSpecMismatch);
        EXPECT_NE(std::string(e.what()).find("Q7"), std::string::npos);
    }
}

TEST(build_code, all_structural_checks_pass_on_small_pairs) {
    for (int n : {7, 21}) {
        auto candidates = search_pairs(n);
        for (size_t i = 0; i < candidates.size() && i < 4; ++i) {
            auto pair = CyclicCodePair::make(n, candidates[i].p, candidates[i].q);
            auto basis = build_pairing_basis(pair);
            const int gap = pair.gap();
            for (int f = 1; f <= 7; ++f) {
                const Family family = static_cast<Family>(f);
                const bool with_y = family == Family::kQ4 || family == Family::kQ6;
                for (int y = with_y ? 1 : 0; y <= (with_y ? gap - 2 : 0); ++y) {
                    const int bound = is_synchronizable(family) ? (with_y ? gap - y : gap) : 1;
                    for (int a_l = 0; a_l < bound; ++a_l) {
                        for (int a_r = 0; a_l + a_r < bound; ++a_r) {
                            auto inst = build_code(pair, basis, spec_of(family, a_l, a_r, y), BuildOptions{false});
                            for (const auto &c : check_instance(inst)) {
                                if (c.name == "shifted-gauge-spans-equal") {
                                    continue;  // covered separately below
                                }
                                EXPECT_TRUE(c.passed) << inst.name << " n=" << n << " a=(" << a_l << "," << a_r
                                                      << ") y=" << y << ": " << c.name << " " << c.detail;
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST(build_code, shifted_z_gauges_leave_the_gauge_group_only_by_logicals) {
    auto fx = hamming();
    auto inst = build_code(fx.pair, fx.basis, spec_of(Family::kQ2, 1, 1));
    auto checks = check_instance(inst);
    ASSERT_NE(find_check(checks, "shifted-gauge-spans-equal"), nullptr);
    EXPECT_FALSE(find_check(checks, "shifted-gauge-spans-equal")->passed);
    EXPECT_TRUE(find_check(checks, "shifted-gauge-spans-equal-modulo-logicals")->passed);
    EXPECT_TRUE(find_check(checks, "shifted-stabilizer-spans-equal")->passed);
    // The gauge span inside the block is D intersected with the complement of s_x; it is not cyclic here.
    Gf2Span z_gauge = Gf2Span::of(7, fx.basis.q_prime);
    for (const auto &v : fx.pair.p_check_rows()) {
        z_gauge.insert(v);
    }
    bool cyclic = true;
    for (const auto &v : z_gauge.basis()) {
        cyclic = cyclic && z_gauge.contains(rotate_left(v, 1));
    }
    EXPECT_FALSE(cyclic);
}

TEST(shifted_view, alpha_zero_is_verbatim) {
    auto fx = hamming();
    auto inst = build_code(fx.pair, fx.basis, spec_of(Family::kQ3, 1, 1));
    auto view = shifted_generator_view(inst, 0);
    ASSERT_EQ(view.stabilizers.size(), inst.stabilizers.size());
    for (size_t i = 0; i < view.stabilizers.size(); ++i) {
        EXPECT_EQ(view.stabilizers[i], inst.stabilizers[i].op);
    }
    EXPECT_THROW(shifted_generator_view(inst, 2), Error);
    EXPECT_THROW(shifted_generator_view(inst, -2), Error);
}

TEST(shifted_view, alpha_one_phases_use_the_rotated_marker) {
    auto fx = hamming();
    auto inst = build_code(fx.pair, fx.basis, spec_of(Family::kQ3, 1, 1));
    auto view = shifted_generator_view(inst, 1);
    const auto dec = fx.pair.decompose_generators();
    BitVector rotated = rotate_left(fx.pair.marker(), 1);
    for (size_t j = 0; j < dec.p_check.size(); ++j) {
        const std::string label = "Z(p~[" + std::to_string(j + 1) + "])";
        for (size_t i = 0; i < inst.stabilizers.size(); ++i) {
            if (inst.stabilizers[i].label == label) {
                EXPECT_EQ(view.stabilizers[i].phase() == 2, dec.p_check[j].dot(rotated)) << label;
                // Window moved one step right: two leading identity positions, none trailing.
                EXPECT_EQ(view.stabilizers[i].z().slice(2, 7), dec.p_check[j]);
            }
        }
    }
}

TEST(tradeoff, sums_match_family_rows_on_hamming_pair) {
    auto fx = hamming();
    auto q2 = build_code(fx.pair, fx.basis, spec_of(Family::kQ2, 1, 1));
    EXPECT_EQ(q2.params.r + q2.params.m + q2.params.d_sync_max, 6);
    EXPECT_TRUE(tradeoff_check(q2));
    auto q1 = build_code(fx.pair, fx.basis, spec_of(Family::kQ1));
    EXPECT_EQ(q1.params.r + q1.params.m + q1.params.d_sync_max, 7);
    EXPECT_TRUE(tradeoff_check(q1));
    auto q6 = build_code(fx.pair, fx.basis, spec_of(Family::kQ6, 1, 0, 1));
    EXPECT_EQ(q6.params.r, 3);
    EXPECT_EQ(q6.params.m, 1);
    EXPECT_EQ(q6.params.d_sync_max, 2);
    EXPECT_TRUE(tradeoff_check(q6));
}

TEST(gauge_fix, first_initial_code_fixes_to_the_second) {
    auto fx = distance_three();
    auto q01 = build_initial_code(fx.pair, fx.basis, 1, BuildOptions{false});
    auto q02 = build_initial_code(fx.pair, fx.basis, 2, BuildOptions{false});
    auto fixed = gauge_fix(q01, GaugeFixTarget::kZTTilde);
    EXPECT_TRUE(same_group(fixed.inner_stabilizer_group(), q02.inner_stabilizer_group(), PhaseMode::kExact));
    EXPECT_TRUE(same_group(fixed.inner_gauge_group(), q02.inner_gauge_group()));
    EXPECT_EQ(fixed.params.r, q02.params.r);
    EXPECT_EQ(fixed.destabilizers.size(), static_cast<size_t>(fx.pair.gap()));
    EXPECT_THROW(gauge_fix(fixed, GaugeFixTarget::kZTTilde), Error);
}

TEST(gauge_fix, second_initial_code_fixes_to_the_third) {
    auto fx = distance_three();
    auto q02 = build_initial_code(fx.pair, fx.basis, 2, BuildOptions{false});
    auto q03 = build_initial_code(fx.pair, fx.basis, 3, BuildOptions{false});
    auto fixed = gauge_fix(q02, GaugeFixTarget::kXTTilde);
    EXPECT_TRUE(same_group(fixed.inner_stabilizer_group(), q03.inner_stabilizer_group(), PhaseMode::kExact));
    EXPECT_EQ(fixed.params.r, 0);
}

TEST(gauge_fix, q7_fixes_to_q5_without_b_message) {
    auto fx = distance_three();
    CodeSpec s7 = spec_of(Family::kQ7);
    s7.message_c = BitVector::from_string("011");
    auto q7 = build_code(fx.pair, fx.basis, s7, BuildOptions{false});
    CodeSpec s5 = spec_of(Family::kQ5);
    s5.message_c = BitVector::from_string("011");
    auto q5 = build_code(fx.pair, fx.basis, s5, BuildOptions{false});
    auto fixed = gauge_fix(q7, GaugeFixTarget::kXPTildeExtended);
    EXPECT_TRUE(same_group(fixed.inner_stabilizer_group(), q5.inner_stabilizer_group(), PhaseMode::kExact));
    EXPECT_EQ(fixed.destabilizers.size(), static_cast<size_t>(fx.pair.gap()));
    EXPECT_THROW(gauge_fix(q5, GaugeFixTarget::kXPTildeExtended), Error);
}

TEST(gauge_fix, q6_fixes_to_q4_with_the_same_y) {
    auto fx = distance_three();
    CodeSpec s6 = spec_of(Family::kQ6, 1, 0, 1);
    s6.message_c = BitVector::from_string("1");
    auto q6 = build_code(fx.pair, fx.basis, s6, BuildOptions{false});
    CodeSpec s4 = spec_of(Family::kQ4, 1, 0, 1);
    s4.message_c = BitVector::from_string("1");
    auto q4 = build_code(fx.pair, fx.basis, s4, BuildOptions{false});
    auto fixed = gauge_fix(q6, GaugeFixTarget::kXPTildeExtended);
    EXPECT_TRUE(same_group(fixed.inner_stabilizer_group(), q4.inner_stabilizer_group(), PhaseMode::kExact));
}

TEST(messages, every_b_message_gives_distinct_x_phases) {
    auto fx = hamming();
    auto base = build_code(fx.pair, fx.basis, spec_of(Family::kQ3, 1, 1));
    std::set<std::string> seen;
    for (uint64_t b = 0; b < 8; ++b) {
        auto inst = with_messages(base, BitVector::from_word(3, b), BitVector(0));
        std::string phases;
        for (const auto &s : inst.stabilizers) {
            phases += s.op.phase() == 2 ? '1' : '0';
        }
        EXPECT_TRUE(seen.insert(phases).second);
    }
    EXPECT_THROW(with_messages(base, BitVector(2), BitVector(0)), Error);
}

TEST(distance, enumerated_distance_matches_a_full_pauli_search) {
    auto fx = hamming();
    for (Family f : {Family::kQ1, Family::kQ2, Family::kQ3, Family::kQ5, Family::kQ7}) {
        const int a = is_synchronizable(f) ? 1 : 0;
        auto inst = build_code(fx.pair, fx.basis, spec_of(f, a, a));
        ASSERT_FALSE(inst.params.d_claimed);
        const int oracle = min_weight_in_set_difference(inst.outer_stabilizer_group().centralizer(),
                                                        inst.inner_gauge_group());
        EXPECT_EQ(inst.params.d, oracle) << family_name(f);
    }
}

TEST(distance, distance_three_pair_has_no_lighter_dressed_logical) {
    auto fx = distance_three();
    for (Family f : {Family::kQ1, Family::kQ3, Family::kQ7}) {
        auto inst = build_code(fx.pair, fx.basis, spec_of(f));
        EXPECT_EQ(inst.params.d, 3) << family_name(f);
        auto centralizer = inst.outer_stabilizer_group().centralizer();
        auto gauge = inst.inner_gauge_group();
        int lightest = 0;
        for (int w = 1; w <= 3 && lightest == 0; ++w) {
            for (const auto &op : all_paulis_of_weight(inst.num_qubits, w)) {
                if (centralizer.contains(op) && !gauge.contains(op)) {
                    lightest = w;
                    break;
                }
            }
        }
        EXPECT_EQ(lightest, 3) << family_name(f);
    }
}
