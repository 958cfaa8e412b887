// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_GF2_SPAN_HPP
#define QSYNC_GF2_SPAN_HPP

#include <climits>
#include <optional>
#include <vector>

#include "qsync/bit_vector.hpp"

namespace qsync {

/// Returned by weight searches over an empty set.
inline constexpr int kInfiniteWeight = INT_MAX;

/// Largest rank enumerated exhaustively by the weight searches.
inline constexpr int kMaxEnumerationRank = 24;

/// Subspace of GF(2)^length kept in fully reduced row echelon form. The pivot
/// of each row is its lowest set coordinate, so reduce() returns the
/// lexicographically smallest member of a coset.
class Gf2Span {
   public:
    explicit Gf2Span(int length = 0);
    static Gf2Span of(int length, const std::vector<BitVector> &vectors);

    int length() const noexcept {
        return length_;
    }
    int rank() const noexcept {
        return static_cast<int>(rows_.size());
    }

    /// Returns true when the vector enlarged the span.
    bool insert(const BitVector &v);
    bool contains(const BitVector &v) const;
    BitVector reduce(const BitVector &v) const;

    /// Coefficients over generators() reproducing v, if v lies in the span.
    std::optional<BitVector> decompose(const BitVector &v) const;

    /// Reduced rows ordered by pivot.
    std::vector<BitVector> basis() const;
    /// The independent vectors accepted by insert(), in insertion order.
    const std::vector<BitVector> &generators() const noexcept {
        return generators_;
    }
    std::vector<int> pivots() const;

    Gf2Span orthogonal_complement() const;
    bool is_subspace_of(const Gf2Span &other) const;
    bool operator==(const Gf2Span &other) const;

    /// Every member of the span; requires rank() <= 24.
    std::vector<BitVector> enumerate() const;

   private:
    struct Row {
        BitVector bits;
        BitVector combo;
        int pivot;
    };
    int length_;
    std::vector<Row> rows_;
    std::vector<BitVector> generators_;
};

Gf2Span span_sum(const Gf2Span &a, const Gf2Span &b);
Gf2Span span_intersection(const Gf2Span &a, const Gf2Span &b);

}  // namespace qsync

#endif
