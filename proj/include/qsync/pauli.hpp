// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_PAULI_HPP
#define QSYNC_PAULI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsync/bit_vector.hpp"
#include "qsync/gf2_span.hpp"

namespace qsync {

/// i^phase times a tensor product of I, X, Y, Z. A qubit with both the x and
/// the z bit set carries the Hermitian Y, so Hermitian operators have phase
/// 0 or 2.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(int num_qubits) : x_(num_qubits), z_(num_qubits) {
    }
    PauliOperator(BitVector x, BitVector z, int phase = 0);

    static PauliOperator x_type(const BitVector &support, int phase = 0) {
        return PauliOperator(support, BitVector(support.size()), phase);
    }
    static PauliOperator z_type(const BitVector &support, int phase = 0) {
        return PauliOperator(BitVector(support.size()), support, phase);
    }
    /// Parses "+XIZY", "-ZZ", "+iX" or "-iY"; the sign prefix is optional.
    static PauliOperator parse(std::string_view text);

    int num_qubits() const noexcept {
        return x_.size();
    }
    const BitVector &x() const noexcept {
        return x_;
    }
    const BitVector &z() const noexcept {
        return z_;
    }
    int phase() const noexcept {
        return phase_;
    }
    bool is_hermitian() const noexcept {
        return (phase_ & 1) == 0;
    }
    /// True for +-I and +-iI.
    bool is_scalar() const noexcept {
        return x_.none() && z_.none();
    }
    int weight() const noexcept {
        return (x_ | z_).weight();
    }
    bool commutes_with(const PauliOperator &other) const;

    PauliOperator with_phase(int phase) const;
    PauliOperator negated() const {
        return with_phase(phase_ + 2);
    }
    /// The x|z bits as one vector of length 2N.
    BitVector symplectic_row() const {
        return x_.concat(z_);
    }
    static PauliOperator from_symplectic_row(const BitVector &row, int phase = 0);

    PauliOperator &operator*=(const PauliOperator &rhs);
    friend PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs) {
        return lhs *= rhs;
    }
    bool operator==(const PauliOperator &other) const noexcept = default;
    bool equal_up_to_phase(const PauliOperator &other) const {
        return x_ == other.x_ && z_ == other.z_;
    }

    /// Returns C P C^dagger for C = CNOT(control, target).
    PauliOperator conjugated_by_cnot(int control, int target) const;
    /// Returns Q P Q^dagger for a Pauli Q.
    PauliOperator conjugated_by(const PauliOperator &q) const;
    /// Pads with identity on `left` new leading and `right` new trailing qubits.
    PauliOperator padded(int left, int right) const;

    std::string to_string() const;

   private:
    BitVector x_;
    BitVector z_;
    int phase_ = 0;
};

/// 0 when the operators commute, 1 when they anticommute.
bool symplectic_product(const PauliOperator &a, const PauliOperator &b);

enum class PhaseMode { kIgnore, kExact };

/// Subgroup of the Pauli group given by generators. Membership is decided by
/// GF(2) elimination on the x|z rows; exact-phase membership also rebuilds
/// the product of the generators found and compares phases.
class PauliGroupSpan {
   public:
    explicit PauliGroupSpan(int num_qubits = 0) : num_qubits_(num_qubits), rows_(2 * num_qubits) {
    }
    PauliGroupSpan(int num_qubits, const std::vector<PauliOperator> &generators);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    /// Rank of the x|z rows, i.e. the number of independent generators
    /// ignoring phases.
    int rank() const noexcept {
        return rows_.rank();
    }
    const std::vector<PauliOperator> &generators() const noexcept {
        return generators_;
    }
    /// Generators that enlarged the phase-free span, in insertion order.
    const std::vector<PauliOperator> &independent_generators() const noexcept {
        return independent_;
    }
    const Gf2Span &rows() const noexcept {
        return rows_;
    }

    void add(const PauliOperator &op);
    /// Indices into independent_generators() whose product matches op up to phase.
    std::optional<std::vector<int>> decompose(const PauliOperator &op) const;
    /// Product of independent generators (in index order) matching op up to phase.
    std::optional<PauliOperator> representative(const PauliOperator &op) const;
    bool contains(const PauliOperator &op, PhaseMode mode = PhaseMode::kIgnore) const;

    bool is_abelian() const;
    /// True when some product of generators equals -I or +-iI; meaningful
    /// for Abelian groups.
    bool contains_nontrivial_scalar() const;
    bool contains_subgroup(const PauliGroupSpan &other, PhaseMode mode = PhaseMode::kIgnore) const;

    /// All Paulis commuting with every generator, with +1 phases.
    PauliGroupSpan centralizer() const;

   private:
    int num_qubits_;
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> independent_;
    Gf2Span rows_;
    bool scalar_found_ = false;
};

bool same_group(const PauliGroupSpan &a, const PauliGroupSpan &b, PhaseMode mode = PhaseMode::kIgnore);
PauliGroupSpan group_union(const PauliGroupSpan &a, const PauliGroupSpan &b);
/// Phase-free intersection, returned with +1 phases.
PauliGroupSpan group_intersection(const PauliGroupSpan &a, const PauliGroupSpan &b);

/// Minimum weight over elements of span(a) not in span(b), phases ignored.
/// Requires rank(a) <= 24; returns kInfiniteWeight when span(a) lies in span(b).
int min_weight_in_set_difference(const PauliGroupSpan &a, const PauliGroupSpan &b);

}  // namespace qsync

#endif
