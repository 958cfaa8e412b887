// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/channel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_set>

#include "qsync/error.hpp"

namespace qsync {

BitVector syndrome(const std::vector<BitVector> &check_rows, const BitVector &word) {
    BitVector out(static_cast<int>(check_rows.size()));
    for (size_t i = 0; i < check_rows.size(); ++i) {
        require(check_rows[i].size() == word.size(), ErrorCode::kLengthMismatch,
                "check row " + std::to_string(i) + " has length " + std::to_string(check_rows[i].size()) +
                    ", word has " + std::to_string(word.size()));
        if (check_rows[i].dot(word)) {
            out.set(static_cast<int>(i));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coset leaders

CosetLeaderDecoder::CosetLeaderDecoder(std::vector<BitVector> check_rows, int length, uint64_t budget)
    : rows_(std::move(check_rows)), length_(length) {
    const int r = static_cast<int>(rows_.size());
    const uint64_t reachable = r >= 63 ? UINT64_MAX : (uint64_t{1} << r);
    uint64_t visited = 0;
    for (int w = 0; w <= length_; ++w) {
        std::vector<int> idx(static_cast<size_t>(w));
        std::iota(idx.begin(), idx.end(), 0);
        bool exhausted = false;
        while (true) {
            BitVector e(length_);
            for (int i : idx) {
                e.set(i);
            }
            const BitVector s = syndrome(rows_, e);
            auto it = leaders_.find(s);
            if (it == leaders_.end()) {
                leaders_.emplace(s, e);
            } else if (it->second.weight() == w && e.lex_less(it->second)) {
                it->second = e;
            }
            if (++visited >= budget) {
                exhausted = true;
                break;
            }
            int k = w - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == length_ - w + k) {
                --k;
            }
            if (k < 0) {
                break;
            }
            ++idx[static_cast<size_t>(k)];
            for (int j = k + 1; j < w; ++j) {
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            }
        }
        if (exhausted) {
            break;
        }
        complete_weight_ = w;
        if (leaders_.size() >= reachable) {
            break;
        }
    }
}

std::optional<BitVector> CosetLeaderDecoder::leader(const BitVector &syndrome_bits) const {
    auto it = leaders_.find(syndrome_bits);
    if (it == leaders_.end()) {
        return std::nullopt;
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Lookup tables

std::string sync_table_variant_name(SyncTableVariant variant) {
    switch (variant) {
        case SyncTableVariant::kAlpha:
            return "A";
        case SyncTableVariant::kMessage:
            return "B";
        case SyncTableVariant::kMessageAndAlpha:
            return "C";
    }
    return "?";
}

const SyncTableEntry *SyncLookupTable::find(const BitVector &key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
}

namespace {

enum class TableMode { kFull, kInjectivityOnly };

struct TableDraft {
    SyncLookupTable table;
    bool injective = true;
    std::string collision;
};

TableDraft draft_table(const ExtendedCodeInstance &inst, SyncTableVariant variant, const SyncTableOptions &options,
                       TableMode mode) {
    require(inst.family.has_value(), ErrorCode::kSpecMismatch, "lookup tables need a family instance");
    const int n = inst.block_length();
    std::vector<BitVector> rows = inst.provenance.p_tilde;
    if (options.full_rows) {
        rows = CyclicCodePair::make(n, inst.provenance.p, inst.provenance.q).p_check_rows();
    }

    int alpha_lo = 0;
    int alpha_hi = 0;
    BitVector base(n);
    const std::vector<BitVector> *vectors = nullptr;
    static const std::vector<BitVector> kNone;
    MessageRegister reg = MessageRegister::kC;
    switch (variant) {
        case SyncTableVariant::kAlpha:
            require(is_synchronizable(*inst.family), ErrorCode::kSpecMismatch,
                    family_name(*inst.family) + " has no synchronization marker");
            alpha_lo = -inst.a_l;
            alpha_hi = inst.a_r;
            base = inst.marker;
            vectors = &kNone;
            require(inst.a_l + inst.a_r < inst.gap(), ErrorCode::kSpecMismatch, "variant A needs a_l + a_r < k_d - k_c");
            break;
        case SyncTableVariant::kMessageAndAlpha:
            require(is_synchronizable(*inst.family), ErrorCode::kSpecMismatch,
                    family_name(*inst.family) + " has no synchronization marker");
            alpha_lo = -inst.a_l;
            alpha_hi = inst.a_r;
            base = inst.marker;
            vectors = &inst.c_vectors;
            require(inst.a_l + inst.a_r < inst.gap() - static_cast<int>(inst.c_vectors.size()),
                    ErrorCode::kSpecMismatch, "variant C needs a_l + a_r < k_d - k_c - y");
            break;
        case SyncTableVariant::kMessage:
            reg = options.message_register;
            vectors = reg == MessageRegister::kB ? &inst.b_vectors : &inst.c_vectors;
            if (reg == MessageRegister::kC) {
                base = inst.marker;
            }
            break;
    }
    const int bits = static_cast<int>(vectors->size());
    require(bits <= 24, ErrorCode::kDimensionTooLarge, "message register too wide to tabulate");

    TableDraft draft;
    draft.table.variant = variant;
    draft.table.message_register = reg;
    draft.table.row_count = static_cast<int>(rows.size());
    const uint64_t words = uint64_t{1} << bits;
    std::unordered_set<BitVector, BitVectorHash> seen;
    std::vector<BitVector> keys(words);
    std::vector<BitVector> unit_keys(static_cast<size_t>(bits));
    for (int alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
        keys[0] = sync_syndrome(rows, base, alpha);
        for (int i = 0; i < bits; ++i) {
            unit_keys[static_cast<size_t>(i)] = sync_syndrome(rows, (*vectors)[static_cast<size_t>(i)], alpha);
        }
        for (uint64_t word = 1; word < words; ++word) {
            keys[word] = keys[word & (word - 1)] ^ unit_keys[static_cast<size_t>(std::countr_zero(word))];
        }
        for (uint64_t word = 0; word < words; ++word) {
            const BitVector &key = keys[word];
            if (mode == TableMode::kInjectivityOnly) {
                if (!seen.insert(key).second) {
                    draft.injective = false;
                    return draft;
                }
                continue;
            }
            SyncTableEntry entry{alpha, BitVector::from_word(bits, word)};
            auto [it, fresh] = draft.table.entries.emplace(key, entry);
            if (!fresh && draft.injective) {
                draft.injective = false;
                draft.collision = "syndrome " + key.to_string() + " for (alpha " + std::to_string(alpha) +
                                  ", message " + entry.message.to_string() + ") and (alpha " +
                                  std::to_string(it->second.alpha) + ", message " + it->second.message.to_string() +
                                  ")";
            }
            draft.table.listing.emplace_back(key, entry);
        }
    }
    draft.table.domain_size = draft.table.listing.size();
    return draft;
}

}  // namespace

SyncLookupTable build_sync_table(const ExtendedCodeInstance &instance, SyncTableVariant variant,
                                 const SyncTableOptions &options) {
    TableDraft draft = draft_table(instance, variant, options, TableMode::kFull);
    require(draft.injective && draft.table.entries.size() == draft.table.domain_size, ErrorCode::kLemmaViolation,
            "lookup table " + sync_table_variant_name(variant) + " of " + instance.name + " is not injective: " +
                draft.collision);
    return std::move(draft.table);
}

bool sync_table_injective(const ExtendedCodeInstance &instance, SyncTableVariant variant,
                          const SyncTableOptions &options) {
    return draft_table(instance, variant, options, TableMode::kInjectivityOnly).injective;
}

SyncTableVariant alignment_variant(const ExtendedCodeInstance &instance) {
    return instance.c_vectors.empty() ? SyncTableVariant::kAlpha : SyncTableVariant::kMessageAndAlpha;
}

// ---------------------------------------------------------------------------
// Blocks, channel and frames

EncodedBlock::EncodedBlock(ExtendedCodeInstance instance)
    : instance_(std::move(instance)),
      stabilizers_(instance_.inner_stabilizer_group()),
      gauge_(instance_.inner_gauge_group()) {
}

std::optional<bool> EncodedBlock::eigenvalue(const PauliOperator &op) const {
    auto rep = stabilizers_.representative(op);
    if (!rep) {
        return std::nullopt;
    }
    const int diff = (rep->phase() - op.phase()) & 3;
    require(diff % 2 == 0, ErrorCode::kConstructionInconsistency, "stabilizer measured with an imaginary phase");
    return diff == 2;
}

std::shared_ptr<const EncodedBlock> encode_block(const ExtendedCodeInstance &instance) {
    return std::make_shared<const EncodedBlock>(instance);
}

ChannelModel ChannelModel::noiseless(int alpha) {
    ChannelModel out;
    out.shift_weights = {{alpha, 1.0}};
    return out;
}

ChannelModel ChannelModel::uniform_shift(double p_x, double p_z, int a_l, int a_r) {
    ChannelModel out;
    out.p_x = p_x;
    out.p_z = p_z;
    for (int alpha = -a_l; alpha <= a_r; ++alpha) {
        out.shift_weights.emplace_back(alpha, 1.0);
    }
    return out;
}

FrameState make_frame(std::shared_ptr<const EncodedBlock> block, int alpha, BitVector e_x, BitVector e_z,
                      bool adversarial) {
    require(block != nullptr, ErrorCode::kSpecMismatch, "frame without a block");
    const ExtendedCodeInstance &inst = block->instance();
    require(e_x.size() == inst.num_qubits && e_z.size() == inst.num_qubits, ErrorCode::kLengthMismatch,
            "error vectors must have length " + std::to_string(inst.num_qubits));
    require(adversarial || (alpha >= -inst.a_l && alpha <= inst.a_r), ErrorCode::kOutOfRange,
            "shift " + std::to_string(alpha) + " outside [-" + std::to_string(inst.a_l) + ", " +
                std::to_string(inst.a_r) + "] on a non-adversarial channel");
    FrameState frame;
    frame.true_alpha = alpha;
    frame.e_x = std::move(e_x);
    frame.e_z = std::move(e_z);
    frame.encoded_b = inst.message_b;
    frame.encoded_c = inst.message_c;
    frame.adversarial = adversarial;
    frame.block = std::move(block);
    return frame;
}

FrameState transmit(std::shared_ptr<const EncodedBlock> block, const ChannelModel &channel, uint64_t seed,
                    uint64_t trial) {
    require(block != nullptr, ErrorCode::kSpecMismatch, "frame without a block");
    require(channel.p_x >= 0.0 && channel.p_x <= 1.0 && channel.p_z >= 0.0 && channel.p_z <= 1.0,
            ErrorCode::kOutOfRange, "error probabilities must lie in [0, 1]");
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(trial),
                      static_cast<uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    int alpha = 0;
    if (!channel.shift_weights.empty()) {
        double total = 0.0;
        for (const auto &[a, w] : channel.shift_weights) {
            require(w >= 0.0, ErrorCode::kOutOfRange, "negative shift weight");
            total += w;
        }
        require(total > 0.0, ErrorCode::kOutOfRange, "shift weights sum to zero");
        const double u = uniform() * total;
        double acc = 0.0;
        alpha = channel.shift_weights.back().first;
        for (const auto &[a, w] : channel.shift_weights) {
            acc += w;
            if (u < acc) {
                alpha = a;
                break;
            }
        }
    }
    const int num_qubits = block->instance().num_qubits;
    BitVector e_x(num_qubits);
    BitVector e_z(num_qubits);
    for (int i = 0; i < num_qubits; ++i) {
        e_x.set(i, uniform() < channel.p_x);
    }
    for (int i = 0; i < num_qubits; ++i) {
        e_z.set(i, uniform() < channel.p_z);
    }
    return make_frame(std::move(block), alpha, std::move(e_x), std::move(e_z), channel.adversarial);
}

std::string residual_class_name(ResidualClass value) {
    switch (value) {
        case ResidualClass::kIdentity:
            return "identity";
        case ResidualClass::kStabilizer:
            return "stabilizer";
        case ResidualClass::kGauge:
            return "gauge";
        case ResidualClass::kLogicalFailure:
            return "logical-failure";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Decoding

namespace {

// Receiver-side view of one frame. Stream positions outside [0, N) belong to
// neighbouring blocks, modelled as error-free copies of the same codeword.
class Receiver {
   public:
    explicit Receiver(const FrameState &frame)
        : block_(*frame.block),
          num_qubits_(block_.instance().num_qubits),
          e_x_(frame.e_x),
          e_z_(frame.e_z),
          fix_x_(num_qubits_),
          fix_z_(num_qubits_) {
    }

    std::optional<bool> measure(const BitVector &x_pattern, const BitVector &z_pattern, int start) const {
        const int len = x_pattern.size();
        const int first_block = floor_div(start, num_qubits_);
        const int last_block = floor_div(start + len - 1, num_qubits_);
        bool outcome = false;
        for (int b = first_block; b <= last_block; ++b) {
            BitVector lx(num_qubits_);
            BitVector lz(num_qubits_);
            for (int i = 0; i < len; ++i) {
                const int pos = start + i;
                if (floor_div(pos, num_qubits_) == b) {
                    lx.set(pos - b * num_qubits_, x_pattern.get(i));
                    lz.set(pos - b * num_qubits_, z_pattern.get(i));
                }
            }
            if (lx.none() && lz.none()) {
                continue;
            }
            PauliOperator local(lx, lz);
            auto value = block_.eigenvalue(local);
            if (!value) {
                return std::nullopt;
            }
            outcome ^= *value;
            if (b == 0) {
                outcome ^= symplectic_product(local, PauliOperator(e_x_, e_z_));
            }
        }
        return outcome;
    }

    std::optional<BitVector> measure_rows(const std::vector<BitVector> &patterns, bool x_type, int start,
                                          int left = 0, int right = 0) const {
        BitVector out(static_cast<int>(patterns.size()));
        for (size_t i = 0; i < patterns.size(); ++i) {
            BitVector support = x_type ? x_window(patterns[i], left, right) : patterns[i];
            BitVector none(support.size());
            auto bit = x_type ? measure(support, none, start) : measure(none, support, start);
            if (!bit) {
                return std::nullopt;
            }
            out.set(static_cast<int>(i), *bit);
        }
        return out;
    }

    // Applies a correction pattern at stream offset `start`; returns false if part of it left the frame.
    bool apply(const BitVector &pattern, bool x_type, int start) {
        bool inside = true;
        for (int i = 0; i < pattern.size(); ++i) {
            if (!pattern.get(i)) {
                continue;
            }
            const int pos = start + i;
            if (pos < 0 || pos >= num_qubits_) {
                inside = false;
                continue;
            }
            (x_type ? e_x_ : e_z_).flip(pos);
            (x_type ? fix_x_ : fix_z_).flip(pos);
        }
        return inside;
    }

    PauliOperator residual() const {
        return PauliOperator(e_x_, e_z_);
    }
    PauliOperator correction() const {
        return PauliOperator(fix_x_, fix_z_);
    }

   private:
    static int floor_div(int a, int b) {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    }

    const EncodedBlock &block_;
    int num_qubits_;
    BitVector e_x_;
    BitVector e_z_;
    BitVector fix_x_;
    BitVector fix_z_;
};

ResidualClass classify(const EncodedBlock &block, const PauliOperator &residual) {
    if (residual.is_scalar()) {
        return ResidualClass::kIdentity;
    }
    if (block.stabilizers().contains(residual)) {
        return ResidualClass::kStabilizer;
    }
    if (block.gauge().contains(residual)) {
        return ResidualClass::kGauge;
    }
    return ResidualClass::kLogicalFailure;
}

}  // namespace

Decoder::Decoder(const ExtendedCodeInstance &instance)
    : code_(instance), leaders_(instance.provenance.basis.q_tilde, instance.block_length()) {
    require(code_.family.has_value(), ErrorCode::kSpecMismatch, "decoding needs a family instance");
    if (is_synchronizable(*code_.family)) {
        alignment_ = build_sync_table(code_, alignment_variant(code_));
    }
    if (!code_.b_vectors.empty()) {
        b_table_ = build_sync_table(code_, SyncTableVariant::kMessage, {MessageRegister::kB, false});
    }
    if (!is_synchronizable(*code_.family) && !code_.c_vectors.empty()) {
        c_table_ = build_sync_table(code_, SyncTableVariant::kMessage, {MessageRegister::kC, false});
    }
}

DecodeReport Decoder::decode(const FrameState &frame) const {
    require(frame.block != nullptr, ErrorCode::kSpecMismatch, "frame without a block");
    const ExtendedCodeInstance &inst = frame.block->instance();
    require(inst.num_qubits == code_.num_qubits && inst.provenance.p == code_.provenance.p &&
                inst.provenance.q == code_.provenance.q && inst.family == code_.family,
            ErrorCode::kSpecMismatch, "frame was encoded with a different code than this decoder");

    const int a_l = code_.a_l;
    const int a_r = code_.a_r;
    const std::vector<BitVector> &q_tilde = code_.provenance.basis.q_tilde;
    const std::vector<BitVector> &p_tilde = code_.provenance.p_tilde;

    Receiver rx(frame);
    DecodeReport report;
    report.recovered_b = BitVector(static_cast<int>(code_.b_vectors.size()));
    report.recovered_c = BitVector(static_cast<int>(code_.c_vectors.size()));
    bool messages_ok = true;

    auto finish = [&](const std::string &note) {
        report.correction = rx.correction();
        report.residual = rx.residual();
        report.residual_class = classify(*frame.block, report.residual);
        report.sync_success = report.recovered_alpha == frame.true_alpha;
        report.quantum_success = report.sync_success && report.residual_class != ResidualClass::kLogicalFailure;
        report.classical_success = report.sync_success && messages_ok && report.recovered_b == frame.encoded_b &&
                                   report.recovered_c == frame.encoded_c;
        if (!note.empty()) {
            report.note += (report.note.empty() ? "" : "; ") + note;
        }
        return report;
    };
    auto correct_x_window = [&](int start) -> bool {
        auto s = rx.measure_rows(q_tilde, false, start);
        if (!s) {
            report.uncorrectable_sync = true;
            return false;
        }
        if (auto e = leaders_.leader(*s)) {
            if (!rx.apply(*e, true, start)) {
                report.note += (report.note.empty() ? "" : "; ") + std::string("correction left the frame");
            }
        } else {
            report.note += (report.note.empty() ? "" : "; ") + std::string("X syndrome has no coset leader");
        }
        return true;
    };

    // The receiver's n-qubit window starts at a_l + alpha in the sender's frame.
    const int window = a_l + frame.true_alpha;
    if (!correct_x_window(window)) {
        return finish("window measurement left the modelled stream");
    }

    if (alignment_) {
        auto key = rx.measure_rows(p_tilde, false, window);
        if (!key) {
            report.uncorrectable_sync = true;
            return finish("alignment measurement left the modelled stream");
        }
        const SyncTableEntry *entry = alignment_->find(*key);
        if (entry == nullptr) {
            report.uncorrectable_sync = true;
            return finish("alignment syndrome " + key->to_string() + " is not in the table");
        }
        report.recovered_alpha = entry->alpha;
        if (alignment_->variant == SyncTableVariant::kMessageAndAlpha) {
            report.recovered_c = entry->message;
        }
    } else {
        report.recovered_alpha = 0;
    }
    if (report.recovered_alpha != frame.true_alpha) {
        return finish("block boundary misidentified; later steps skipped");
    }

    correct_x_window(0);
    correct_x_window(a_l + a_r);

    if (c_table_) {
        auto key = rx.measure_rows(p_tilde, false, a_l);
        const SyncTableEntry *entry = key ? c_table_->find(*key) : nullptr;
        if (entry == nullptr) {
            messages_ok = false;
            report.note += (report.note.empty() ? "" : "; ") + std::string("c syndrome not in the table");
        } else {
            report.recovered_c = entry->message;
        }
    }

    auto z_syndrome = rx.measure_rows(q_tilde, true, 0, a_l, a_r);
    if (z_syndrome) {
        if (auto e = leaders_.leader(*z_syndrome)) {
            rx.apply(*e, false, a_l);
        } else {
            report.note += (report.note.empty() ? "" : "; ") + std::string("Z syndrome has no coset leader");
        }
    }

    if (b_table_) {
        auto key = rx.measure_rows(p_tilde, true, 0, a_l, a_r);
        const SyncTableEntry *entry = key ? b_table_->find(*key) : nullptr;
        if (entry == nullptr) {
            messages_ok = false;
            report.note += (report.note.empty() ? "" : "; ") + std::string("b syndrome not in the table");
        } else {
            report.recovered_b = entry->message;
        }
    }
    return finish("");
}

DecodeReport decode(const FrameState &frame) {
    require(frame.block != nullptr, ErrorCode::kSpecMismatch, "frame without a block");
    return Decoder(frame.block->instance()).decode(frame);
}

// ---------------------------------------------------------------------------
// Encoding circuit

std::vector<std::pair<int, int>> encoder_cnots(int n, int a_l, int a_r) {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t < a_r; ++t) {
        out.emplace_back(a_l + t, a_l + n + t);
    }
    for (int i = a_l - 1; i >= 0; --i) {
        out.emplace_back(n + i, i);
    }
    return out;
}

CheckResult verify_encoding_circuit(const CyclicCodePair &pair, const PairingBasis &basis, const CodeSpec &spec,
                                    std::optional<uint64_t> cnot_shuffle_seed) {
    CheckResult result{"encoding-circuit", false, ""};
    const ExtendedCodeInstance target = build_code(pair, basis, spec, BuildOptions{false});
    const int n = pair.n();
    const int a_l = spec.a_l;
    const int a_r = spec.a_r;
    const int num_qubits = target.num_qubits;

    std::vector<PauliOperator> stabilizers;
    std::vector<PauliOperator> gauges;
    std::vector<PauliOperator> logicals;
    switch (spec.family) {
        case Family::kQ3:
        case Family::kQ4:
        case Family::kQ5:
            for (const auto &h : pair.p_check_rows()) {
                stabilizers.push_back(PauliOperator::x_type(h));
                stabilizers.push_back(PauliOperator::z_type(h));
            }
            for (const auto &s : basis.s_x) {
                logicals.push_back(PauliOperator::x_type(s));
            }
            for (const auto &s : basis.s_z) {
                logicals.push_back(PauliOperator::z_type(s));
            }
            break;
        default: {
            const int which = spec.family == Family::kQ1 ? 1 : 2;
            const ExtendedCodeInstance initial = build_initial_code(pair, basis, which, BuildOptions{false});
            for (const auto &s : initial.stabilizers) {
                stabilizers.push_back(s.op);
            }
            for (const auto &g : initial.gauges) {
                gauges.push_back(g.op);
            }
            for (const auto *list : {&initial.logical_x, &initial.logical_z}) {
                for (const auto &l : *list) {
                    logicals.push_back(l.op);
                }
            }
        }
    }

    const PauliOperator flip_x = PauliOperator::x_type(target.z_source());
    const PauliOperator flip_z = PauliOperator::z_type(target.x_source());
    std::vector<std::pair<int, int>> cnots = encoder_cnots(n, a_l, a_r);
    if (cnot_shuffle_seed) {
        std::mt19937_64 rng(*cnot_shuffle_seed);
        for (size_t i = cnots.size(); i > 1; --i) {
            std::swap(cnots[i - 1], cnots[static_cast<size_t>(rng() % i)]);
        }
    }
    auto run = [&](PauliOperator op) {
        op = op.conjugated_by(flip_x).conjugated_by(flip_z).padded(a_l, a_r);
        for (const auto &[c, t] : cnots) {
            op = op.conjugated_by_cnot(c, t);
        }
        return op;
    };
    PauliGroupSpan built_stab(num_qubits);
    for (const auto &s : stabilizers) {
        built_stab.add(run(s));
    }
    for (int j = 0; j < a_l + a_r; ++j) {
        const int qubit = j < a_l ? j : n + j;
        PauliOperator ancilla = PauliOperator::z_type(BitVector::unit(num_qubits, qubit));
        for (const auto &[c, t] : cnots) {
            ancilla = ancilla.conjugated_by_cnot(c, t);
        }
        built_stab.add(ancilla);
    }
    PauliGroupSpan built_gauge = built_stab;
    for (const auto &g : gauges) {
        built_gauge.add(run(g));
    }

    const PauliGroupSpan want_stab = target.inner_stabilizer_group();
    const PauliGroupSpan want_gauge = target.inner_gauge_group();
    std::string diff;
    if (!same_group(built_stab, want_stab, PhaseMode::kExact)) {
        diff += same_group(built_stab, want_stab) ? "stabilizer phases differ; " : "stabilizer spans differ; ";
    }
    if (!same_group(built_gauge, want_gauge)) {
        diff += "gauge spans differ; ";
    }
    std::vector<PauliOperator> want_logicals;
    for (const auto *list : {&target.logical_x, &target.logical_z}) {
        for (const auto &l : *list) {
            want_logicals.push_back(l.op);
        }
    }
    if (want_logicals.size() != logicals.size()) {
        diff += "logical counts differ; ";
    } else {
        for (size_t i = 0; i < logicals.size(); ++i) {
            if (!want_gauge.contains(run(logicals[i]) * want_logicals[i])) {
                diff += "logical " + std::to_string(i) + " lands in another class; ";
            }
        }
    }
    result.passed = diff.empty();
    result.detail = diff.empty() ? target.name + ", " + std::to_string(cnots.size()) + " CNOTs" : target.name + ": " + diff;
    return result;
}

// ---------------------------------------------------------------------------
// Block checks

CheckResult check_ancilla_z_equivalence(const ExtendedCodeInstance &instance) {
    const int n = instance.block_length();
    const int a_l = instance.a_l;
    const int a_r = instance.a_r;
    std::vector<BitVector> rows;
    for (int j = 0; j < a_l + a_r; ++j) {
        rows.push_back(ancilla_row(n, a_l, a_r, j));
    }
    const Gf2Span span = Gf2Span::of(instance.num_qubits, rows);
    const PauliGroupSpan stab = instance.inner_stabilizer_group();
    std::string detail;
    for (int j = 0; j < a_l + a_r; ++j) {
        const int ancilla = j < a_l ? j : n + j;
        const int copy = j < a_l ? n + j : j;
        BitVector diff = BitVector::unit(instance.num_qubits, ancilla) ^ BitVector::unit(instance.num_qubits, copy);
        if (!span.contains(diff) || !stab.contains(PauliOperator::z_type(diff), PhaseMode::kExact)) {
            detail += "ancilla " + std::to_string(ancilla) + " ";
        }
    }
    return {"ancilla-z-equivalence", detail.empty(),
            detail.empty() ? std::to_string(a_l + a_r) + " ancillas" : "not equivalent: " + detail};
}

CheckResult check_window_cover(const ExtendedCodeInstance &instance) {
    const int n = instance.block_length();
    const int shift = instance.a_l + instance.a_r;
    const bool chain = shift < std::max(1, instance.gap()) && 2 * instance.gap() <= n;
    const bool cover = shift <= n;
    return {"two-window-cover", chain && cover,
            "a_l+a_r=" + std::to_string(shift) + ", gap=" + std::to_string(instance.gap()) + ", n=" +
                std::to_string(n)};
}

}  // namespace qsync
