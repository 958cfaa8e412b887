// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/code_family.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "qsync/error.hpp"
#include "qsync/gf2_span.hpp"

namespace qsync {

std::string family_name(Family family) {
    return "Q" + std::to_string(static_cast<int>(family));
}

Family parse_family(std::string_view text) {
    if (text.size() == 2 && (text[0] == 'Q' || text[0] == 'q') && text[1] >= '1' && text[1] <= '7') {
        return static_cast<Family>(text[1] - '0');
    }
    fail(ErrorCode::kParse, "unknown code family '" + std::string(text) + "', expected Q1..Q7");
}

bool is_synchronizable(Family family) {
    return family == Family::kQ2 || family == Family::kQ3 || family == Family::kQ4 || family == Family::kQ6;
}

bool has_gauge_qubits(Family family) {
    return family == Family::kQ1 || family == Family::kQ2 || family == Family::kQ6 || family == Family::kQ7;
}

int b_message_length(Family family, int gap) {
    switch (family) {
        case Family::kQ3:
        case Family::kQ4:
        case Family::kQ5:
            return gap;
        default:
            return 0;
    }
}

int c_message_length(Family family, int gap, int y) {
    switch (family) {
        case Family::kQ4:
        case Family::kQ6:
            return y;
        case Family::kQ5:
        case Family::kQ7:
            return gap;
        default:
            return 0;
    }
}

int c_message_offset(Family family) {
    return (family == Family::kQ4 || family == Family::kQ6) ? 2 : 1;
}

void validate_spec(const CodeSpec &spec, int gap) {
    const Family f = spec.family;
    const std::string name = family_name(f);
    require(spec.a_l >= 0 && spec.a_r >= 0, ErrorCode::kSpecMismatch, "ancilla counts must be non-negative");
    if (f == Family::kQ4 || f == Family::kQ6) {
        if (spec.y == gap - 1) {
            fail(ErrorCode::kSpecMismatch,
                 name + " with y = k_d - k_c - 1 leaves no room for misalignment; spend the marker X(q_1) as one more "
                        "classical bit instead, which is family " +
                     (f == Family::kQ6 ? std::string("Q7") : std::string("Q5")));
        }
        require(spec.y >= 1 && spec.y <= gap - 2, ErrorCode::kSpecMismatch,
                name + " needs 1 <= y <= k_d - k_c - 2 = " + std::to_string(gap - 2) + ", got y = " +
                    std::to_string(spec.y));
    } else {
        require(spec.y == 0, ErrorCode::kSpecMismatch, name + " takes no y parameter");
    }
    if (is_synchronizable(f)) {
        const int bound = (f == Family::kQ4 || f == Family::kQ6) ? gap - spec.y : gap;
        require(spec.a_l + spec.a_r < bound, ErrorCode::kSpecMismatch,
                name + " needs a_l + a_r < " + std::to_string(bound) + ", got " + std::to_string(spec.a_l + spec.a_r));
    } else {
        require(spec.a_l == 0 && spec.a_r == 0, ErrorCode::kSpecMismatch,
                name + " is not synchronizable and takes no ancillas");
    }
    const int b_len = b_message_length(f, gap);
    const int c_len = c_message_length(f, gap, spec.y);
    if (spec.message_b) {
        require(b_len > 0, ErrorCode::kSpecMismatch, name + " carries no b message");
        require(spec.message_b->size() == b_len, ErrorCode::kLengthMismatch,
                name + " b message must have " + std::to_string(b_len) + " bits");
    }
    if (spec.message_c) {
        require(c_len > 0, ErrorCode::kSpecMismatch, name + " carries no c message");
        require(spec.message_c->size() == c_len, ErrorCode::kLengthMismatch,
                name + " c message must have " + std::to_string(c_len) + " bits");
    }
}

CodeParameters expected_parameters(Family family, int n, int kc, int kd, int a_l, int a_r, int y) {
    const int gap = kd - kc;
    CodeParameters p;
    p.num_qubits = n + a_l + a_r;
    p.k = 2 * kc - n;
    switch (family) {
        case Family::kQ1:
            p.r = 2 * gap;
            p.d_sync_max = 1;
            break;
        case Family::kQ2:
            p.r = gap;
            p.d_sync_max = gap;
            break;
        case Family::kQ3:
            p.m = gap;
            p.d_sync_max = gap;
            break;
        case Family::kQ4:
            p.m = gap + y;
            p.d_sync_max = gap - y;
            break;
        case Family::kQ5:
            p.m = 2 * gap;
            p.d_sync_max = 1;
            break;
        case Family::kQ6:
            p.r = gap;
            p.m = y;
            p.d_sync_max = gap - y;
            break;
        case Family::kQ7:
            p.r = gap;
            p.m = gap;
            p.d_sync_max = 1;
            break;
    }
    return p;
}

BitVector x_window(const BitVector &pattern, int left, int right) {
    require(left >= 0 && right >= 0 && left <= pattern.size() && right <= pattern.size(), ErrorCode::kOutOfRange,
            "window extension longer than the block");
    return pattern.last_bits(left).concat(pattern).concat(pattern.first_bits(right));
}

BitVector z_padded(const BitVector &pattern, int left, int right) {
    require(left >= 0 && right >= 0, ErrorCode::kOutOfRange, "negative padding");
    return BitVector(left).concat(pattern).concat(BitVector(right));
}

BitVector ancilla_row(int n, int a_l, int a_r, int row) {
    require(row >= 0 && row < a_l + a_r, ErrorCode::kOutOfRange, "ancilla row index out of range");
    require(a_l + a_r <= n, ErrorCode::kOutOfRange, "more ancillas than block qubits");
    BitVector out(n + a_l + a_r);
    if (row < a_l) {
        out.set(row);
        out.set(n + row);
    } else {
        const int t = row - a_l;
        out.set(a_l + t);
        out.set(a_l + n + t);
    }
    return out;
}

BitVector sync_syndrome(const std::vector<BitVector> &p_tilde, const BitVector &source, int alpha) {
    BitVector shifted = source.cyclic_shift(-alpha);
    BitVector out(static_cast<int>(p_tilde.size()));
    for (size_t j = 0; j < p_tilde.size(); ++j) {
        if (p_tilde[j].dot(shifted)) {
            out.set(static_cast<int>(j));
        }
    }
    return out;
}

namespace {

using Rows = std::vector<BitVector>;

BitVector combine(const Rows &vectors, const BitVector &bits, int n) {
    BitVector out(n);
    for (int i = 0; i < bits.size(); ++i) {
        if (bits.get(i)) {
            out ^= vectors[static_cast<size_t>(i)];
        }
    }
    return out;
}

PauliOperator render(const BlockRecipe &recipe, int n, int a_l, int a_r, int alpha, const BitVector &x_source,
                     const BitVector &z_source) {
    const int left = a_l + alpha;
    const int right = a_r - alpha;
    switch (recipe.shape) {
        case OperatorShape::kXWindow: {
            const bool odd = recipe.pattern.dot(x_source.cyclic_shift(-alpha));
            return PauliOperator::x_type(x_window(recipe.pattern, left, right), odd ? 2 : 0);
        }
        case OperatorShape::kZBlock: {
            const bool odd = recipe.pattern.dot(z_source.cyclic_shift(-alpha));
            return PauliOperator::z_type(z_padded(recipe.pattern, left, right), odd ? 2 : 0);
        }
        case OperatorShape::kAncilla:
            return PauliOperator::z_type(ancilla_row(n, a_l, a_r, recipe.ancilla_row));
    }
    fail(ErrorCode::kSpecMismatch, "unknown operator shape");
}

class Emitter {
   public:
    explicit Emitter(ExtendedCodeInstance &inst) : inst_(inst) {
    }

    void x_window_op(std::vector<EncodedOperator> &out, const std::string &label, const BitVector &pattern) {
        push(out, label, BlockRecipe{OperatorShape::kXWindow, pattern, 0});
    }
    void z_block_op(std::vector<EncodedOperator> &out, const std::string &label, const BitVector &pattern) {
        push(out, label, BlockRecipe{OperatorShape::kZBlock, pattern, 0});
    }
    void x_rows(std::vector<EncodedOperator> &out, const std::string &name, const Rows &rows) {
        for (size_t i = 0; i < rows.size(); ++i) {
            x_window_op(out, "X(" + name + "[" + std::to_string(i + 1) + "])", rows[i]);
        }
    }
    void z_rows(std::vector<EncodedOperator> &out, const std::string &name, const Rows &rows) {
        for (size_t i = 0; i < rows.size(); ++i) {
            z_block_op(out, "Z(" + name + "[" + std::to_string(i + 1) + "])", rows[i]);
        }
    }
    void ancillas(std::vector<EncodedOperator> &out) {
        for (int row = 0; row < inst_.a_l + inst_.a_r; ++row) {
            push(out, "Z(anc[" + std::to_string(row + 1) + "])",
                 BlockRecipe{OperatorShape::kAncilla, BitVector(inst_.block_length()), row});
        }
    }

   private:
    void push(std::vector<EncodedOperator> &out, const std::string &label, BlockRecipe recipe) {
        PauliOperator op = render(recipe, inst_.block_length(), inst_.a_l, inst_.a_r, 0, inst_.x_source(),
                                  inst_.z_source());
        out.push_back(EncodedOperator{label, std::move(op), std::move(recipe)});
    }

    ExtendedCodeInstance &inst_;
};

void refresh_phases(ExtendedCodeInstance &inst) {
    const BitVector xs = inst.x_source();
    const BitVector zs = inst.z_source();
    for (auto *list : {&inst.stabilizers, &inst.gauges, &inst.logical_x, &inst.logical_z, &inst.translations_b,
                       &inst.translations_c}) {
        for (auto &e : *list) {
            if (e.recipe) {
                e.op = render(*e.recipe, inst.block_length(), inst.a_l, inst.a_r, 0, xs, zs);
            }
        }
    }
}

std::vector<PauliOperator> ops_of(const std::vector<EncodedOperator> &list) {
    std::vector<PauliOperator> out;
    out.reserve(list.size());
    for (const auto &e : list) {
        out.push_back(e.op);
    }
    return out;
}

/// Half of a CSS group: the X-only (or Z-only) elements, projected onto one side of the symplectic row.
Gf2Span css_half(const PauliGroupSpan &group, bool x_side) {
    const int n = group.num_qubits();
    Gf2Span side(2 * n);
    for (int i = 0; i < n; ++i) {
        side.insert(BitVector::unit(2 * n, x_side ? i : n + i));
    }
    Gf2Span common = span_intersection(group.rows(), side);
    Gf2Span out(n);
    for (const auto &row : common.basis()) {
        out.insert(row.slice(x_side ? 0 : n, n));
    }
    return out;
}

int rank_of(const Rows &rows, int length) {
    return Gf2Span::of(length, rows).rank();
}

int compute_observed_window(const ExtendedCodeInstance &inst) {
    const int n = inst.block_length();
    const int c_bits = static_cast<int>(inst.c_vectors.size());
    if (c_bits > 16) {
        return 0;
    }
    std::vector<BitVector> sources;
    sources.reserve(size_t{1} << c_bits);
    for (uint64_t c = 0; c < (uint64_t{1} << c_bits); ++c) {
        sources.push_back(inst.marker ^ combine(inst.c_vectors, BitVector::from_word(c_bits, c), n));
    }
    std::unordered_set<BitVector, BitVectorHash> seen;
    for (int delta = 0; delta < n; ++delta) {
        for (const auto &w : sources) {
            if (!seen.insert(sync_syndrome(inst.provenance.p_tilde, w, delta)).second) {
                return delta;
            }
        }
    }
    return n;
}

void compute_parameters(ExtendedCodeInstance &inst, const BuildOptions &options) {
    PauliGroupSpan inner = inst.inner_stabilizer_group();
    PauliGroupSpan outer = inst.outer_stabilizer_group();
    PauliGroupSpan gauge = inst.inner_gauge_group();
    const int two_r = gauge.rank() - inner.rank();
    require(two_r % 2 == 0, ErrorCode::kConstructionInconsistency, "gauge group rank has odd excess over stabilizers");
    CodeParameters p;
    p.num_qubits = inst.num_qubits;
    p.r = two_r / 2;
    p.m = inner.rank() - outer.rank();
    p.k = inst.num_qubits - inner.rank() - p.r;
    p.d_sync_max = inst.family ? expected_parameters(*inst.family, inst.block_length(), inst.provenance.kc,
                                                     inst.provenance.kd, inst.a_l, inst.a_r, inst.spec.y)
                                     .d_sync_max
                               : 1;
    p.d = inst.provenance.d_d;
    p.d_claimed = true;
    if (options.compute_distance) {
        if (auto d = css_split_distance(outer.centralizer(), gauge)) {
            p.d = *d;
            p.d_claimed = false;
        }
    }
    inst.params = p;
}

CodeProvenance make_provenance(const CyclicCodePair &pair, const PairingBasis &basis) {
    require(basis.n == pair.n(), ErrorCode::kSpecMismatch, "pairing basis was built for a different block length");
    CodeProvenance prov;
    prov.p = pair.c().generator_poly();
    prov.q = pair.d().generator_poly();
    prov.n = pair.n();
    prov.kc = pair.kc();
    prov.kd = pair.kd();
    prov.d_d = pair.d_min_distance();
    prov.basis = basis;
    GeneratorDecomposition dec = pair.decompose_generators();
    prov.p_tilde = dec.p_check;
    prov.q_shifts = dec.q_rows;
    return prov;
}

ExtendedCodeInstance blank_instance(const CodeProvenance &prov, int a_l, int a_r) {
    ExtendedCodeInstance inst;
    inst.provenance = prov;
    inst.a_l = a_l;
    inst.a_r = a_r;
    inst.num_qubits = prov.n + a_l + a_r;
    inst.marker = BitVector(prov.n);
    return inst;
}

void emit_logicals(Emitter &emit, ExtendedCodeInstance &inst) {
    const PairingBasis &b = inst.provenance.basis;
    emit.x_rows(inst.logical_x, "s_x", b.s_x);
    emit.z_rows(inst.logical_z, "s_z", b.s_z);
}

}  // namespace

BitVector ExtendedCodeInstance::x_source() const {
    return combine(b_vectors, message_b, block_length());
}

BitVector ExtendedCodeInstance::z_source() const {
    return marker ^ combine(c_vectors, message_c, block_length());
}

PauliGroupSpan ExtendedCodeInstance::inner_stabilizer_group() const {
    return PauliGroupSpan(num_qubits, ops_of(stabilizers));
}

std::vector<BitVector> ExtendedCodeInstance::message_phase_rows() const {
    const int s = static_cast<int>(stabilizers.size());
    std::vector<BitVector> rows;
    auto add_rows = [&](const Rows &vectors, OperatorShape shape) {
        for (const auto &v : vectors) {
            BitVector row(s);
            for (int i = 0; i < s; ++i) {
                const auto &recipe = stabilizers[static_cast<size_t>(i)].recipe;
                if (recipe && recipe->shape == shape && recipe->pattern.dot(v)) {
                    row.set(i);
                }
            }
            rows.push_back(row);
        }
    };
    add_rows(b_vectors, OperatorShape::kXWindow);
    add_rows(c_vectors, OperatorShape::kZBlock);
    return rows;
}

PauliGroupSpan ExtendedCodeInstance::outer_stabilizer_group() const {
    const int s = static_cast<int>(stabilizers.size());
    const Rows phase_rows = message_phase_rows();
    const int bits = static_cast<int>(phase_rows.size());
    require(bits + s <= BitVector::kCapacity, ErrorCode::kDimensionTooLarge, "too many generators for kernel search");
    // Column i of the phase matrix, followed by a one-hot tag for generator i.
    Gf2Span tagged(bits + s);
    for (int i = 0; i < s; ++i) {
        BitVector v(bits + s);
        for (int b = 0; b < bits; ++b) {
            if (phase_rows[static_cast<size_t>(b)].get(i)) {
                v.set(b);
            }
        }
        v.set(bits + i);
        tagged.insert(v);
    }
    PauliGroupSpan out(num_qubits);
    for (const auto &row : tagged.basis()) {
        if (row.first_one() < bits) {
            continue;
        }
        PauliOperator product(num_qubits);
        for (int i = 0; i < s; ++i) {
            if (row.get(bits + i)) {
                product *= stabilizers[static_cast<size_t>(i)].op;
            }
        }
        out.add(product);
    }
    return out;
}

PauliGroupSpan ExtendedCodeInstance::inner_gauge_group() const {
    PauliGroupSpan out = inner_stabilizer_group();
    for (const auto &g : gauges) {
        out.add(g.op);
    }
    return out;
}

PauliGroupSpan ExtendedCodeInstance::outer_gauge_group() const {
    PauliGroupSpan translations(num_qubits);
    for (const auto *list : {&translations_b, &translations_c}) {
        for (const auto &t : *list) {
            translations.add(t.op);
        }
    }
    PauliGroupSpan out = group_intersection(inner_gauge_group(), translations.centralizer());
    const PauliGroupSpan outer = outer_stabilizer_group();
    for (const auto &s : outer.generators()) {
        out.add(s);
    }
    return out;
}

std::optional<int> css_split_distance(const PauliGroupSpan &a, const PauliGroupSpan &b) {
    require(a.num_qubits() == b.num_qubits(), ErrorCode::kLengthMismatch, "groups act on different qubit counts");
    const Gf2Span ax = css_half(a, true);
    const Gf2Span az = css_half(a, false);
    const Gf2Span bx = css_half(b, true);
    const Gf2Span bz = css_half(b, false);
    if (ax.rank() + az.rank() != a.rank() || bx.rank() + bz.rank() != b.rank()) {
        return std::nullopt;
    }
    auto dx = min_weight_outside_bounded(ax, bx);
    if (!dx) {
        return std::nullopt;
    }
    auto dz = min_weight_outside_bounded(az, bz);
    if (!dz) {
        return std::nullopt;
    }
    return std::min(*dx, *dz);
}

ExtendedCodeInstance build_initial_code(const CyclicCodePair &pair, const PairingBasis &basis, int which,
                                        const BuildOptions &options) {
    require(which >= 1 && which <= 3, ErrorCode::kSpecMismatch, "initial codes exist for Q1, Q2 and Q3 only");
    ExtendedCodeInstance inst = blank_instance(make_provenance(pair, basis), 0, 0);
    inst.name = "Q" + std::to_string(which) + "^0";
    inst.message_b = BitVector(0);
    inst.message_c = BitVector(0);
    Emitter emit(inst);
    const PairingBasis &b = inst.provenance.basis;
    emit.x_rows(inst.stabilizers, "q~", b.q_tilde);
    emit.z_rows(inst.stabilizers, "q~", b.q_tilde);
    switch (which) {
        case 1:
            emit.x_rows(inst.gauges, "t~", b.t_tilde);
            emit.z_rows(inst.gauges, "t~", b.t_tilde);
            emit.x_rows(inst.gauges, "t_x", b.t_x);
            emit.z_rows(inst.gauges, "t_z", b.t_z);
            break;
        case 2:
            emit.z_rows(inst.stabilizers, "t~", b.t_tilde);
            emit.x_rows(inst.gauges, "t~", b.t_tilde);
            emit.z_rows(inst.gauges, "t_z", b.t_z);
            break;
        default:
            emit.x_rows(inst.stabilizers, "t~", b.t_tilde);
            emit.z_rows(inst.stabilizers, "t~", b.t_tilde);
            break;
    }
    emit_logicals(emit, inst);
    compute_parameters(inst, options);
    return inst;
}

ExtendedCodeInstance build_code(const CyclicCodePair &pair, const PairingBasis &basis, const CodeSpec &spec,
                                const BuildOptions &options) {
    const int gap = pair.gap();
    validate_spec(spec, gap);
    const Family f = spec.family;
    ExtendedCodeInstance inst = blank_instance(make_provenance(pair, basis), spec.a_l, spec.a_r);
    inst.name = family_name(f);
    inst.family = f;
    inst.spec = spec;
    const CodeProvenance &prov = inst.provenance;
    const int n = prov.n;

    if (is_synchronizable(f)) {
        inst.marker = pair.marker();
    }
    const int b_len = b_message_length(f, gap);
    const int c_len = c_message_length(f, gap, spec.y);
    const int c_off = c_message_offset(f);
    inst.b_vectors.assign(prov.q_shifts.begin(), prov.q_shifts.begin() + b_len);
    inst.c_vectors.assign(prov.q_shifts.begin() + (c_off - 1), prov.q_shifts.begin() + (c_off - 1 + c_len));
    inst.message_b = spec.message_b.value_or(BitVector(b_len));
    inst.message_c = spec.message_c.value_or(BitVector(c_len));

    Emitter emit(inst);
    const PairingBasis &b = prov.basis;
    switch (f) {
        case Family::kQ1:
            emit.x_rows(inst.stabilizers, "q~", b.q_tilde);
            emit.z_rows(inst.stabilizers, "q~", b.q_tilde);
            emit.x_rows(inst.gauges, "t~", b.t_tilde);
            emit.z_rows(inst.gauges, "t~", b.t_tilde);
            emit.x_rows(inst.gauges, "t_x", b.t_x);
            emit.z_rows(inst.gauges, "t_z", b.t_z);
            break;
        case Family::kQ2:
        case Family::kQ6:
        case Family::kQ7:
            emit.x_rows(inst.stabilizers, "q~", b.q_tilde);
            emit.z_rows(inst.stabilizers, "q~", b.q_tilde);
            emit.z_rows(inst.stabilizers, "p~", prov.p_tilde);
            emit.ancillas(inst.stabilizers);
            emit.x_rows(inst.gauges, "p~", prov.p_tilde);
            emit.z_rows(inst.gauges, "q'", b.q_prime);
            break;
        case Family::kQ3:
        case Family::kQ4:
        case Family::kQ5:
            emit.x_rows(inst.stabilizers, "q~", b.q_tilde);
            emit.x_rows(inst.stabilizers, "p~", prov.p_tilde);
            emit.z_rows(inst.stabilizers, "q~", b.q_tilde);
            emit.z_rows(inst.stabilizers, "p~", prov.p_tilde);
            emit.ancillas(inst.stabilizers);
            break;
    }
    emit_logicals(emit, inst);
    for (int i = 0; i < b_len; ++i) {
        emit.z_block_op(inst.translations_b, "Z(q[" + std::to_string(i + 1) + "])",
                        inst.b_vectors[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < c_len; ++i) {
        emit.x_window_op(inst.translations_c, "X(q[" + std::to_string(i + c_off) + "])",
                         inst.c_vectors[static_cast<size_t>(i)]);
    }
    compute_parameters(inst, options);

    const CodeParameters want = expected_parameters(f, n, prov.kc, prov.kd, spec.a_l, spec.a_r, spec.y);
    const CodeParameters &got = inst.params;
    if (got.num_qubits != want.num_qubits || got.k != want.k || got.m != want.m || got.r != want.r) {
        fail(ErrorCode::kConstructionInconsistency,
             inst.name + " computed (N,k,m,r) = (" + std::to_string(got.num_qubits) + "," + std::to_string(got.k) +
                 "," + std::to_string(got.m) + "," + std::to_string(got.r) + ") but the family row gives (" +
                 std::to_string(want.num_qubits) + "," + std::to_string(want.k) + "," + std::to_string(want.m) + "," +
                 std::to_string(want.r) + ")");
    }
    if (is_synchronizable(f) && options.measure_sync_window) {
        inst.observed_sync_window = compute_observed_window(inst);
    }
    return inst;
}

ExtendedCodeInstance with_messages(const ExtendedCodeInstance &instance, const BitVector &message_b,
                                   const BitVector &message_c) {
    require(message_b.size() == static_cast<int>(instance.b_vectors.size()), ErrorCode::kLengthMismatch,
            "b message has " + std::to_string(message_b.size()) + " bits, expected " +
                std::to_string(instance.b_vectors.size()));
    require(message_c.size() == static_cast<int>(instance.c_vectors.size()), ErrorCode::kLengthMismatch,
            "c message has " + std::to_string(message_c.size()) + " bits, expected " +
                std::to_string(instance.c_vectors.size()));
    ExtendedCodeInstance out = instance;
    out.message_b = message_b;
    out.message_c = message_c;
    out.spec.message_b = message_b.size() > 0 ? std::optional<BitVector>(message_b) : std::nullopt;
    out.spec.message_c = message_c.size() > 0 ? std::optional<BitVector>(message_c) : std::nullopt;
    refresh_phases(out);
    return out;
}

ExtendedCodeInstance gauge_fix(const ExtendedCodeInstance &instance, GaugeFixTarget which) {
    std::string prefix;
    std::string target_name;
    switch (which) {
        case GaugeFixTarget::kZTTilde:
            prefix = "Z(t~[";
            target_name = "Z(t~)";
            break;
        case GaugeFixTarget::kXTTilde:
            prefix = "X(t~[";
            target_name = "X(t~)";
            break;
        case GaugeFixTarget::kXPTildeExtended:
            prefix = "X(p~[";
            target_name = "X(p~)";
            break;
    }
    auto matches = [&](const EncodedOperator &e) { return e.label.rfind(prefix, 0) == 0; };

    ExtendedCodeInstance out = instance;
    out.family.reset();
    out.name = instance.name + " fixed on " + target_name;
    std::vector<EncodedOperator> fixed;
    std::vector<EncodedOperator> remaining;
    for (const auto &g : instance.gauges) {
        (matches(g) ? fixed : remaining).push_back(g);
    }
    if (fixed.empty()) {
        const bool already = std::any_of(instance.stabilizers.begin(), instance.stabilizers.end(), matches);
        fail(ErrorCode::kOperatorNotGauge, target_name + (already ? " is already a stabilizer of " : " is not a gauge "
                                                                                                      "operator of ") +
                                               instance.name);
    }
    for (const auto &f : fixed) {
        auto partner = std::find_if(remaining.begin(), remaining.end(),
                                    [&](const EncodedOperator &g) { return !g.op.commutes_with(f.op); });
        if (partner != remaining.end()) {
            EncodedOperator p = *partner;
            remaining.erase(partner);
            for (auto &g : remaining) {
                if (!g.op.commutes_with(f.op)) {
                    g.op *= p.op;
                    g.label += "*" + p.label;
                    g.recipe.reset();
                }
            }
            out.destabilizers.push_back(p);
        }
        out.stabilizers.push_back(f);
    }
    out.gauges = remaining;
    BuildOptions options;
    options.compute_distance = false;
    compute_parameters(out, options);
    return out;
}

GeneratorView shifted_generator_view(const ExtendedCodeInstance &instance, int alpha) {
    require(alpha >= -instance.a_l && alpha <= instance.a_r, ErrorCode::kOutOfRange,
            "shift " + std::to_string(alpha) + " outside [-" + std::to_string(instance.a_l) + ", " +
                std::to_string(instance.a_r) + "]");
    const BitVector xs = instance.x_source();
    const BitVector zs = instance.z_source();
    GeneratorView view;
    auto fill = [&](const std::vector<EncodedOperator> &from, std::vector<PauliOperator> &to) {
        for (const auto &e : from) {
            require(e.recipe.has_value(), ErrorCode::kSpecMismatch,
                    "operator " + e.label + " has no block layout and cannot be shifted");
            to.push_back(render(*e.recipe, instance.block_length(), instance.a_l, instance.a_r, alpha, xs, zs));
        }
    };
    fill(instance.stabilizers, view.stabilizers);
    fill(instance.gauges, view.gauges);
    return view;
}

bool tradeoff_check(const ExtendedCodeInstance &instance) {
    const CodeParameters &p = instance.params;
    const int gap = instance.gap();
    const bool sync = p.d_sync_max > 1;
    return p.r + p.m + p.d_sync_max == 2 * gap + (sync ? 0 : 1);
}

std::vector<CheckResult> check_instance(const ExtendedCodeInstance &inst) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        out.push_back(CheckResult{std::move(name), ok, std::move(detail)});
    };
    const PauliGroupSpan inner = inst.inner_stabilizer_group();
    const PauliGroupSpan outer = inst.outer_stabilizer_group();
    const PauliGroupSpan gauge = inst.inner_gauge_group();
    const std::vector<PauliOperator> stabs = ops_of(inst.stabilizers);
    const std::vector<PauliOperator> gauges = ops_of(inst.gauges);

    add("stabilizers-abelian", inner.is_abelian() && !inner.contains_nontrivial_scalar());

    bool central = true;
    for (const auto &s : stabs) {
        for (const auto &g : gauges) {
            central = central && s.commutes_with(g);
        }
    }
    const PauliGroupSpan center = group_intersection(gauge, gauge.centralizer());
    add("stabilizers-are-gauge-center", central && center.rank() == inner.rank(),
        "center rank " + std::to_string(center.rank()) + ", stabilizer rank " + std::to_string(inner.rank()));

    bool pairing = inst.logical_x.size() == inst.logical_z.size();
    for (size_t i = 0; pairing && i < inst.logical_x.size(); ++i) {
        for (size_t j = 0; j < inst.logical_x.size(); ++j) {
            pairing = pairing && (inst.logical_x[i].op.commutes_with(inst.logical_z[j].op) == (i != j)) &&
                      inst.logical_x[i].op.commutes_with(inst.logical_x[j].op) &&
                      inst.logical_z[i].op.commutes_with(inst.logical_z[j].op);
        }
    }
    add("logical-pairs-anticommute-diagonally", pairing);

    bool logical_commute = true;
    PauliGroupSpan with_logicals = gauge;
    for (const auto *list : {&inst.logical_x, &inst.logical_z}) {
        for (const auto &l : *list) {
            for (const auto &s : stabs) {
                logical_commute = logical_commute && l.op.commutes_with(s);
            }
            for (const auto &g : gauges) {
                logical_commute = logical_commute && l.op.commutes_with(g);
            }
            with_logicals.add(l.op);
        }
    }
    add("logicals-commute-with-gauge-group", logical_commute);
    add("logicals-independent-of-gauge-group",
        with_logicals.rank() == gauge.rank() + static_cast<int>(2 * inst.logical_x.size()));

    bool translations_ok = true;
    for (const auto *list : {&inst.translations_b, &inst.translations_c}) {
        for (const auto &t : *list) {
            for (const auto &s : outer.independent_generators()) {
                translations_ok = translations_ok && t.op.commutes_with(s);
            }
            bool flips = std::any_of(stabs.begin(), stabs.end(),
                                     [&](const PauliOperator &s) { return !t.op.commutes_with(s); });
            translations_ok = translations_ok && flips;
        }
    }
    add("translations-preserve-outer-code", translations_ok);

    const Rows phase_rows = inst.message_phase_rows();
    const int bits = static_cast<int>(phase_rows.size());
    bool injective = true;
    if (bits <= 12) {
        std::set<BitVector> seen;
        for (uint64_t msg = 0; msg < (uint64_t{1} << bits); ++msg) {
            BitVector phases(static_cast<int>(stabs.size()));
            for (int i = 0; i < bits; ++i) {
                if ((msg >> i) & 1) {
                    phases ^= phase_rows[static_cast<size_t>(i)];
                }
            }
            injective = injective && seen.insert(phases).second;
        }
    } else {
        injective = rank_of(phase_rows, static_cast<int>(stabs.size())) == bits;
    }
    add("messages-give-distinct-phases", injective, std::to_string(bits) + " message bits");

    const CodeParameters &p = inst.params;
    add("parameter-accounting", outer.rank() + p.r + p.k + p.m == inst.num_qubits);
    if (inst.family) {
        const CodeParameters want = expected_parameters(*inst.family, inst.block_length(), inst.provenance.kc,
                                                        inst.provenance.kd, inst.a_l, inst.a_r, inst.spec.y);
        add("parameters-match-family-row",
            want.num_qubits == p.num_qubits && want.k == p.k && want.m == p.m && want.r == p.r &&
                want.d_sync_max == p.d_sync_max);
        add("tradeoff-identity", tradeoff_check(inst),
            std::to_string(p.r) + "+" + std::to_string(p.m) + "+" + std::to_string(p.d_sync_max));
        if (is_synchronizable(*inst.family)) {
            add("sync-window-covers-guarantee", inst.observed_sync_window >= p.d_sync_max,
                "observed " + std::to_string(inst.observed_sync_window));
        }
    }

    std::string stab_detail;
    std::string gauge_detail;
    std::string loose_detail;
    PauliGroupSpan dressed = gauge;
    for (const auto *list : {&inst.logical_x, &inst.logical_z}) {
        for (const auto &l : *list) {
            dressed.add(l.op);
        }
    }
    auto note = [](std::string &detail, int alpha) {
        detail += (detail.empty() ? "differs at alpha " : ", ") + std::to_string(alpha);
    };
    for (int alpha = -inst.a_l; alpha <= inst.a_r; ++alpha) {
        GeneratorView view = shifted_generator_view(inst, alpha);
        PauliGroupSpan s(inst.num_qubits, view.stabilizers);
        PauliGroupSpan g = s;
        for (const auto &op : view.gauges) {
            g.add(op);
        }
        if (!same_group(s, inner, PhaseMode::kExact)) {
            note(stab_detail, alpha);
        }
        if (!same_group(g, gauge, PhaseMode::kIgnore)) {
            note(gauge_detail, alpha);
        }
        if (!dressed.contains_subgroup(g) || g.rank() != gauge.rank()) {
            note(loose_detail, alpha);
        }
    }
    add("shifted-stabilizer-spans-equal", stab_detail.empty(), stab_detail);
    add("shifted-gauge-spans-equal", gauge_detail.empty(), gauge_detail);
    add("shifted-gauge-spans-equal-modulo-logicals", loose_detail.empty(), loose_detail);
    return out;
}

}  // namespace qsync
