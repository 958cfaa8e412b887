// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_CODE_FAMILY_HPP
#define QSYNC_CODE_FAMILY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsync/bit_vector.hpp"
#include "qsync/check.hpp"
#include "qsync/cyclic_code.hpp"
#include "qsync/pairing.hpp"
#include "qsync/pauli.hpp"
#include "qsync/polynomial.hpp"

namespace qsync {

enum class Family { kQ1 = 1, kQ2, kQ3, kQ4, kQ5, kQ6, kQ7 };

std::string family_name(Family family);
Family parse_family(std::string_view text);

bool is_synchronizable(Family family);
bool has_gauge_qubits(Family family);
/// Number of message bits carried by X-type phases (the "b" register).
int b_message_length(Family family, int gap);
/// Number of message bits carried by Z-type phases (the "c" register).
int c_message_length(Family family, int gap, int y);
/// Index (1-based) of the first translation vector q_m used by the c register.
int c_message_offset(Family family);

struct CodeSpec {
    Family family = Family::kQ1;
    int a_l = 0;
    int a_r = 0;
    int y = 0;
    std::optional<BitVector> message_b;
    std::optional<BitVector> message_c;
};

/// Throws kSpecMismatch / kLengthMismatch when the spec is not admissible for a pair with this gap.
void validate_spec(const CodeSpec &spec, int gap);

struct CodeParameters {
    int num_qubits = 0;
    int k = 0;
    int m = 0;
    int r = 0;
    int d = 0;
    bool d_claimed = false;  // true when d could not be enumerated and the classical d_D is reported
    int d_sync_max = 1;
};

/// Parameter table row for a family; d is left at 0.
CodeParameters expected_parameters(Family family, int n, int kc, int kd, int a_l, int a_r, int y);

enum class OperatorShape { kXWindow, kZBlock, kAncilla };

/// How an operator on the extended block is laid out from a length-n pattern.
struct BlockRecipe {
    OperatorShape shape = OperatorShape::kZBlock;
    BitVector pattern;
    int ancilla_row = 0;
};

struct EncodedOperator {
    std::string label;
    PauliOperator op;
    std::optional<BlockRecipe> recipe;
};

struct CodeProvenance {
    BinaryPolynomial p;
    BinaryPolynomial q;
    int n = 0;
    int kc = 0;
    int kd = 0;
    int d_d = 0;
    PairingBasis basis;
    std::vector<BitVector> p_tilde;   // first k_d - k_c check rows of C
    std::vector<BitVector> q_shifts;  // q_1 .. q_{k_d-k_c}
};

struct ExtendedCodeInstance {
    std::string name;
    std::optional<Family> family;
    CodeSpec spec;
    CodeProvenance provenance;
    int a_l = 0;
    int a_r = 0;
    int num_qubits = 0;

    BitVector marker;  // q_1 for synchronizable families, zero otherwise
    std::vector<BitVector> b_vectors;
    std::vector<BitVector> c_vectors;
    BitVector message_b;
    BitVector message_c;

    std::vector<EncodedOperator> stabilizers;
    std::vector<EncodedOperator> gauges;  // gauge generators beyond the stabilizers
    std::vector<EncodedOperator> logical_x;
    std::vector<EncodedOperator> logical_z;
    std::vector<EncodedOperator> translations_b;
    std::vector<EncodedOperator> translations_c;
    std::vector<EncodedOperator> destabilizers;  // partners released by gauge fixing

    CodeParameters params;
    int observed_sync_window = 0;  // widest misalignment window with an injective lookup; 0 if not synchronizable or not measured

    int block_length() const noexcept {
        return provenance.n;
    }
    int gap() const noexcept {
        return provenance.kd - provenance.kc;
    }
    BitVector x_source() const;
    BitVector z_source() const;

    PauliGroupSpan inner_stabilizer_group() const;
    PauliGroupSpan outer_stabilizer_group() const;
    PauliGroupSpan inner_gauge_group() const;
    /// Inner gauge elements that commute with every translation operator.
    PauliGroupSpan outer_gauge_group() const;

    /// Linear part of the map (b, c) -> stabilizer phase bits, one row per message bit.
    std::vector<BitVector> message_phase_rows() const;
};

struct BuildOptions {
    bool compute_distance = true;
    bool measure_sync_window = true;
};

/// Initial codes Q^0_1, Q^0_2, Q^0_3 on the bare block with all phases +1.
ExtendedCodeInstance build_initial_code(const CyclicCodePair &pair, const PairingBasis &basis, int which,
                                        const BuildOptions &options = {});

ExtendedCodeInstance build_code(const CyclicCodePair &pair, const PairingBasis &basis, const CodeSpec &spec,
                                const BuildOptions &options = {});

/// Same code with different messages; only phases are recomputed.
ExtendedCodeInstance with_messages(const ExtendedCodeInstance &instance, const BitVector &message_b,
                                   const BitVector &message_c);

enum class GaugeFixTarget { kZTTilde, kXTTilde, kXPTildeExtended };

ExtendedCodeInstance gauge_fix(const ExtendedCodeInstance &instance, GaugeFixTarget which);

struct GeneratorView {
    std::vector<PauliOperator> stabilizers;
    std::vector<PauliOperator> gauges;
};

GeneratorView shifted_generator_view(const ExtendedCodeInstance &instance, int alpha);

bool tradeoff_check(const ExtendedCodeInstance &instance);

/// Window-slice helpers on the extended block.
BitVector x_window(const BitVector &pattern, int left, int right);
BitVector z_padded(const BitVector &pattern, int left, int right);
BitVector ancilla_row(int n, int a_l, int a_r, int row);

/// Eigenvalue bits of Z(p~_j) on a block whose phase source w is misaligned by alpha: p~_j . O(w, -alpha).
BitVector sync_syndrome(const std::vector<BitVector> &p_tilde, const BitVector &source, int alpha);

/// Structural checks: commutation, pairing, message injectivity, shift equivalence, trade-off.
std::vector<CheckResult> check_instance(const ExtendedCodeInstance &instance);

/// min weight of A \ B for CSS groups, split into X and Z halves; nullopt when a half is too large to enumerate.
std::optional<int> css_split_distance(const PauliGroupSpan &a, const PauliGroupSpan &b);

}  // namespace qsync

#endif
