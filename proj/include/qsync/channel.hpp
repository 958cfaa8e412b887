// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_CHANNEL_HPP
#define QSYNC_CHANNEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsync/bit_vector.hpp"
#include "qsync/check.hpp"
#include "qsync/code_family.hpp"
#include "qsync/cyclic_code.hpp"
#include "qsync/pairing.hpp"
#include "qsync/pauli.hpp"

namespace qsync {

/// One GF(2) dot product per row.
BitVector syndrome(const std::vector<BitVector> &check_rows, const BitVector &word);

/// Minimum-weight error for every reachable syndrome of a set of check rows.
/// Errors are enumerated by weight; among equal weights the lex_less-smallest wins.
class CosetLeaderDecoder {
   public:
    CosetLeaderDecoder() = default;
    /// Stops after `budget` candidate errors or once every syndrome has a leader.
    CosetLeaderDecoder(std::vector<BitVector> check_rows, int length, uint64_t budget = 2'000'000);

    std::optional<BitVector> leader(const BitVector &syndrome_bits) const;
    int length() const noexcept {
        return length_;
    }
    /// Largest weight w such that every error of weight <= w was enumerated.
    int complete_weight() const noexcept {
        return complete_weight_;
    }
    size_t table_size() const noexcept {
        return leaders_.size();
    }
    const std::vector<BitVector> &check_rows() const noexcept {
        return rows_;
    }

   private:
    std::vector<BitVector> rows_;
    int length_ = 0;
    int complete_weight_ = -1;
    std::unordered_map<BitVector, BitVector, BitVectorHash> leaders_;
};

enum class SyncTableVariant { kAlpha, kMessage, kMessageAndAlpha };
enum class MessageRegister { kB, kC };

std::string sync_table_variant_name(SyncTableVariant variant);

struct SyncTableEntry {
    int alpha = 0;
    BitVector message;
};

struct SyncLookupTable {
    SyncTableVariant variant = SyncTableVariant::kAlpha;
    MessageRegister message_register = MessageRegister::kC;
    int row_count = 0;
    size_t domain_size = 0;
    std::unordered_map<BitVector, SyncTableEntry, BitVectorHash> entries;
    /// Domain in enumeration order (alpha ascending, then message as a binary counter).
    std::vector<std::pair<BitVector, SyncTableEntry>> listing;

    const SyncTableEntry *find(const BitVector &key) const;
};

struct SyncTableOptions {
    /// Register read by the kMessage variant.
    MessageRegister message_register = MessageRegister::kB;
    /// Key on every check row of C instead of the first k_d - k_c.
    bool full_rows = false;
};

/// Builds the lookup table and asserts it is injective (kLemmaViolation otherwise).
SyncLookupTable build_sync_table(const ExtendedCodeInstance &instance, SyncTableVariant variant,
                                 const SyncTableOptions &options = {});
/// Same domain and keys, reporting injectivity instead of throwing.
bool sync_table_injective(const ExtendedCodeInstance &instance, SyncTableVariant variant,
                          const SyncTableOptions &options = {});

/// The variant the decoder uses to read alpha: kMessageAndAlpha when the family has c bits, else kAlpha.
SyncTableVariant alignment_variant(const ExtendedCodeInstance &instance);

/// A code instance with fixed messages, ready to answer stabilizer measurements.
class EncodedBlock {
   public:
    explicit EncodedBlock(ExtendedCodeInstance instance);

    const ExtendedCodeInstance &instance() const noexcept {
        return instance_;
    }
    const PauliGroupSpan &stabilizers() const noexcept {
        return stabilizers_;
    }
    const PauliGroupSpan &gauge() const noexcept {
        return gauge_;
    }
    /// Eigenvalue bit of `op` on the error-free block, nullopt when op is not a stabilizer.
    std::optional<bool> eigenvalue(const PauliOperator &op) const;

   private:
    ExtendedCodeInstance instance_;
    PauliGroupSpan stabilizers_;
    PauliGroupSpan gauge_;
};

std::shared_ptr<const EncodedBlock> encode_block(const ExtendedCodeInstance &instance);

struct ChannelModel {
    double p_x = 0.0;
    double p_z = 0.0;
    /// (alpha, weight) pairs; an empty list means alpha = 0.
    std::vector<std::pair<int, double>> shift_weights;
    /// Allows shifts outside [-a_l, a_r].
    bool adversarial = false;

    static ChannelModel noiseless(int alpha = 0);
    static ChannelModel uniform_shift(double p_x, double p_z, int a_l, int a_r);
};

struct FrameState {
    std::shared_ptr<const EncodedBlock> block;
    int true_alpha = 0;
    BitVector e_x;
    BitVector e_z;
    BitVector encoded_b;
    BitVector encoded_c;
    bool adversarial = false;
};

/// Frame with the given shift and error pattern.
FrameState make_frame(std::shared_ptr<const EncodedBlock> block, int alpha, BitVector e_x, BitVector e_z,
                      bool adversarial = false);

/// Draws alpha, then e_x bit by bit, then e_z, from mt19937_64 seeded by seed_seq{seed, trial}.
FrameState transmit(std::shared_ptr<const EncodedBlock> block, const ChannelModel &channel, uint64_t seed,
                    uint64_t trial = 0);

enum class ResidualClass { kIdentity, kStabilizer, kGauge, kLogicalFailure };

std::string residual_class_name(ResidualClass value);

struct DecodeReport {
    std::optional<int> recovered_alpha;
    BitVector recovered_b;
    BitVector recovered_c;
    PauliOperator correction;
    PauliOperator residual;
    ResidualClass residual_class = ResidualClass::kLogicalFailure;
    bool sync_success = false;
    bool classical_success = false;
    bool quantum_success = false;
    /// Set when a syndrome had no table entry or a measurement left the modelled stream.
    bool uncorrectable_sync = false;
    std::string note;
};

/// Receiver for one code. Tables depend only on the code, so one decoder serves every message.
class Decoder {
   public:
    explicit Decoder(const ExtendedCodeInstance &instance);

    DecodeReport decode(const FrameState &frame) const;

    const CosetLeaderDecoder &outer_decoder() const noexcept {
        return leaders_;
    }
    const std::optional<SyncLookupTable> &alignment_table() const noexcept {
        return alignment_;
    }

   private:
    ExtendedCodeInstance code_;
    CosetLeaderDecoder leaders_;
    std::optional<SyncLookupTable> alignment_;
    std::optional<SyncLookupTable> b_table_;
    std::optional<SyncLookupTable> c_table_;
};

/// Builds a Decoder for the frame's code and runs it once.
DecodeReport decode(const FrameState &frame);

/// Conjugates the bare-block generators through the message operators, ancilla
/// preparation and CNOT fan-out, then compares with build_code: stabilizers
/// phase-exact, gauge group and logical classes phase-free. With a shuffle seed
/// the CNOTs are applied in a random order.
CheckResult verify_encoding_circuit(const CyclicCodePair &pair, const PairingBasis &basis, const CodeSpec &spec,
                                    std::optional<uint64_t> cnot_shuffle_seed = std::nullopt);

/// CNOT (control, target) pairs of the encoder, 0-based, in application order.
std::vector<std::pair<int, int>> encoder_cnots(int n, int a_l, int a_r);

/// Z on ancilla qubit j times Z on the block qubit it copies lies in the ancilla stabilizer rows.
CheckResult check_ancilla_z_equivalence(const ExtendedCodeInstance &instance);

/// The first and last n-qubit windows cover the block and a_l + a_r < k_d - k_c <= n / 2.
CheckResult check_window_cover(const ExtendedCodeInstance &instance);

}  // namespace qsync

#endif
