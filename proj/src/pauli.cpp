// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/pauli.hpp"

#include <algorithm>
#include <array>

#include "qsync/error.hpp"

namespace qsync {

PauliOperator::PauliOperator(BitVector x, BitVector z, int phase) : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
    require(x_.size() == z_.size(), ErrorCode::kLengthMismatch, "x and z parts differ in length");
}

PauliOperator PauliOperator::from_symplectic_row(const BitVector &row, int phase) {
    require(row.size() % 2 == 0, ErrorCode::kLengthMismatch, "symplectic row must have even length");
    int n = row.size() / 2;
    return PauliOperator(row.slice(0, n), row.slice(n, n), phase);
}

PauliOperator PauliOperator::parse(std::string_view text) {
    int phase = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    int n = static_cast<int>(text.size() - pos);
    PauliOperator op(n);
    for (int q = 0; q < n; ++q) {
        switch (text[pos + static_cast<size_t>(q)]) {
            case 'I':
            case '_':
                break;
            case 'X':
                op.x_.set(q);
                break;
            case 'Z':
                op.z_.set(q);
                break;
            case 'Y':
                op.x_.set(q);
                op.z_.set(q);
                break;
            default:
                fail(ErrorCode::kParse, "bad Pauli character in '" + std::string(text) + "'");
        }
    }
    op.phase_ = phase & 3;
    return op;
}

std::string PauliOperator::to_string() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (int q = 0; q < num_qubits(); ++q) {
        bool xb = x_.get(q);
        bool zb = z_.get(q);
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

bool symplectic_product(const PauliOperator &a, const PauliOperator &b) {
    require(a.num_qubits() == b.num_qubits(), ErrorCode::kLengthMismatch, "symplectic product length mismatch");
    return a.x().dot(b.z()) ^ a.z().dot(b.x());
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    return !symplectic_product(*this, other);
}

PauliOperator PauliOperator::with_phase(int phase) const {
    PauliOperator out = *this;
    out.phase_ = phase & 3;
    return out;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    require(num_qubits() == rhs.num_qubits(), ErrorCode::kLengthMismatch, "product of Paulis of different length");
    const BitVector anti = (x_ & rhs.z_) ^ (z_ & rhs.x_);
    const BitVector y_then_z = x_ & z_ & (rhs.z_ ^ (rhs.x_ & rhs.z_));
    const BitVector x_then_y = (x_ ^ (x_ & z_)) & rhs.x_ & rhs.z_;
    const BitVector z_then_x = (z_ ^ (x_ & z_)) & (rhs.x_ ^ (rhs.x_ & rhs.z_));
    const int cyclic = (y_then_z & anti).weight() + (x_then_y & anti).weight() + (z_then_x & anti).weight();
    phase_ = (phase_ + rhs.phase_ + 2 * cyclic - anti.weight()) & 3;
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

PauliOperator PauliOperator::conjugated_by_cnot(int control, int target) const {
    require(control != target, ErrorCode::kOutOfRange, "CNOT control equals target");
    PauliOperator out = *this;
    const bool xc = x_.get(control);
    const bool zc = z_.get(control);
    const bool xt = x_.get(target);
    const bool zt = z_.get(target);
    if (xc && zt && (xt == zc)) {
        out.phase_ = (out.phase_ + 2) & 3;
    }
    out.x_.set(target, xt ^ xc);
    out.z_.set(control, zc ^ zt);
    return out;
}

PauliOperator PauliOperator::conjugated_by(const PauliOperator &q) const {
    return symplectic_product(*this, q) ? negated() : *this;
}

PauliOperator PauliOperator::padded(int left, int right) const {
    BitVector xl(left);
    BitVector xr(right);
    return PauliOperator(xl.concat(x_).concat(xr), xl.concat(z_).concat(xr), phase_);
}

PauliGroupSpan::PauliGroupSpan(int num_qubits, const std::vector<PauliOperator> &generators)
    : PauliGroupSpan(num_qubits) {
    for (const auto &g : generators) {
        add(g);
    }
}

void PauliGroupSpan::add(const PauliOperator &op) {
    require(op.num_qubits() == num_qubits_, ErrorCode::kLengthMismatch,
            "generator on " + std::to_string(op.num_qubits()) + " qubits added to a group on " +
                std::to_string(num_qubits_));
    generators_.push_back(op);
    if (op.is_scalar()) {
        scalar_found_ = scalar_found_ || op.phase() != 0;
        return;
    }
    auto rep = representative(op);
    if (rep) {
        scalar_found_ = scalar_found_ || rep->phase() != op.phase();
        return;
    }
    rows_.insert(op.symplectic_row());
    independent_.push_back(op);
}

std::optional<std::vector<int>> PauliGroupSpan::decompose(const PauliOperator &op) const {
    require(op.num_qubits() == num_qubits_, ErrorCode::kLengthMismatch, "membership test length mismatch");
    auto combo = rows_.decompose(op.symplectic_row());
    if (!combo) {
        return std::nullopt;
    }
    std::vector<int> out;
    for (int i = 0; i < combo->size(); ++i) {
        if (combo->get(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::optional<PauliOperator> PauliGroupSpan::representative(const PauliOperator &op) const {
    auto idx = decompose(op);
    if (!idx) {
        return std::nullopt;
    }
    PauliOperator product(num_qubits_);
    for (int i : *idx) {
        product *= independent_[static_cast<size_t>(i)];
    }
    return product;
}

bool PauliGroupSpan::contains(const PauliOperator &op, PhaseMode mode) const {
    if (mode == PhaseMode::kIgnore) {
        return rows_.contains(op.symplectic_row());
    }
    auto rep = representative(op);
    return rep.has_value() && rep->phase() == op.phase();
}

bool PauliGroupSpan::is_abelian() const {
    for (size_t i = 0; i < generators_.size(); ++i) {
        for (size_t j = i + 1; j < generators_.size(); ++j) {
            if (symplectic_product(generators_[i], generators_[j])) {
                return false;
            }
        }
    }
    return true;
}

bool PauliGroupSpan::contains_nontrivial_scalar() const {
    return scalar_found_;
}

bool PauliGroupSpan::contains_subgroup(const PauliGroupSpan &other, PhaseMode mode) const {
    if (other.num_qubits_ != num_qubits_) {
        return false;
    }
    for (const auto &g : other.generators_) {
        if (!g.is_scalar() && !contains(g, mode)) {
            return false;
        }
    }
    return true;
}

PauliGroupSpan PauliGroupSpan::centralizer() const {
    Gf2Span swapped(2 * num_qubits_);
    for (const auto &g : independent_) {
        swapped.insert(g.z().concat(g.x()));
    }
    PauliGroupSpan out(num_qubits_);
    for (const auto &row : swapped.orthogonal_complement().basis()) {
        out.add(PauliOperator::from_symplectic_row(row));
    }
    return out;
}

bool same_group(const PauliGroupSpan &a, const PauliGroupSpan &b, PhaseMode mode) {
    return a.contains_subgroup(b, mode) && b.contains_subgroup(a, mode);
}

PauliGroupSpan group_union(const PauliGroupSpan &a, const PauliGroupSpan &b) {
    PauliGroupSpan out = a;
    for (const auto &g : b.generators()) {
        out.add(g);
    }
    return out;
}

PauliGroupSpan group_intersection(const PauliGroupSpan &a, const PauliGroupSpan &b) {
    PauliGroupSpan out(a.num_qubits());
    for (const auto &row : span_intersection(a.rows(), b.rows()).basis()) {
        out.add(PauliOperator::from_symplectic_row(row));
    }
    return out;
}

namespace {

struct PackedPauli {
    std::array<uint64_t, 2> x{};
    std::array<uint64_t, 2> z{};
};

PackedPauli pack(const BitVector &row, int n) {
    PackedPauli p;
    for (int q = 0; q < n; ++q) {
        if (row.get(q)) {
            p.x[static_cast<size_t>(q >> 6)] |= uint64_t{1} << (q & 63);
        }
        if (row.get(n + q)) {
            p.z[static_cast<size_t>(q >> 6)] |= uint64_t{1} << (q & 63);
        }
    }
    return p;
}

}  // namespace

int min_weight_in_set_difference(const PauliGroupSpan &a, const PauliGroupSpan &b) {
    require(a.num_qubits() == b.num_qubits(), ErrorCode::kLengthMismatch, "groups act on different qubit counts");
    require(a.num_qubits() <= 128, ErrorCode::kDimensionTooLarge, "weight search supports at most 128 qubits");
    require(a.rank() <= kMaxEnumerationRank, ErrorCode::kDimensionTooLarge,
            "exhaustive Pauli weight search over rank " + std::to_string(a.rank()) + " exceeds " +
                std::to_string(kMaxEnumerationRank));
    const int n = a.num_qubits();
    Gf2Span common = span_intersection(a.rows(), b.rows());
    std::vector<BitVector> rows = common.basis();
    const int shared = static_cast<int>(rows.size());
    Gf2Span grown = common;
    for (const auto &v : a.rows().basis()) {
        if (grown.insert(v)) {
            rows.push_back(v);
        }
    }
    const int total = static_cast<int>(rows.size());
    if (total == shared) {
        return kInfiniteWeight;
    }
    std::vector<PackedPauli> packed;
    for (const auto &r : rows) {
        packed.push_back(pack(r, n));
    }
    PackedPauli cur;
    int best = kInfiniteWeight;
    for (uint64_t i = 1; i < (uint64_t{1} << total); ++i) {
        const PackedPauli &step = packed[static_cast<size_t>(std::countr_zero(i))];
        cur.x[0] ^= step.x[0];
        cur.x[1] ^= step.x[1];
        cur.z[0] ^= step.z[0];
        cur.z[1] ^= step.z[1];
        if (((i ^ (i >> 1)) >> shared) == 0) {
            continue;
        }
        int w = std::popcount(cur.x[0] | cur.z[0]) + std::popcount(cur.x[1] | cur.z[1]);
        if (w < best) {
            best = w;
            if (best == 1) {
                break;
            }
        }
    }
    return best;
}

}  // namespace qsync
