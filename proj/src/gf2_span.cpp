// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/gf2_span.hpp"

#include <algorithm>

#include "qsync/error.hpp"

namespace qsync {

Gf2Span::Gf2Span(int length) : length_(length) {
    require(length >= 0 && length <= BitVector::kCapacity, ErrorCode::kOutOfRange,
            "span length " + std::to_string(length) + " out of range");
}

Gf2Span Gf2Span::of(int length, const std::vector<BitVector> &vectors) {
    Gf2Span s(length);
    for (const auto &v : vectors) {
        s.insert(v);
    }
    return s;
}

BitVector Gf2Span::reduce(const BitVector &v) const {
    require(v.size() == length_, ErrorCode::kLengthMismatch,
            "vector of size " + std::to_string(v.size()) + " against span of length " + std::to_string(length_));
    BitVector r = v;
    for (const auto &row : rows_) {
        if (r.get(row.pivot)) {
            r ^= row.bits;
        }
    }
    return r;
}

bool Gf2Span::contains(const BitVector &v) const {
    return reduce(v).none();
}

bool Gf2Span::insert(const BitVector &v) {
    require(v.size() == length_, ErrorCode::kLengthMismatch,
            "vector of size " + std::to_string(v.size()) + " against span of length " + std::to_string(length_));
    BitVector r = v;
    BitVector combo(BitVector::kCapacity);
    for (const auto &row : rows_) {
        if (r.get(row.pivot)) {
            r ^= row.bits;
            combo ^= row.combo;
        }
    }
    if (r.none()) {
        return false;
    }
    combo.flip(static_cast<int>(generators_.size()));
    generators_.push_back(v);
    int pivot = r.first_one();
    for (auto &row : rows_) {
        if (row.bits.get(pivot)) {
            row.bits ^= r;
            row.combo ^= combo;
        }
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Row &row, int p) { return row.pivot < p; });
    rows_.insert(pos, Row{r, combo, pivot});
    return true;
}

std::optional<BitVector> Gf2Span::decompose(const BitVector &v) const {
    require(v.size() == length_, ErrorCode::kLengthMismatch, "decompose length mismatch");
    BitVector r = v;
    BitVector combo(BitVector::kCapacity);
    for (const auto &row : rows_) {
        if (r.get(row.pivot)) {
            r ^= row.bits;
            combo ^= row.combo;
        }
    }
    if (r.any()) {
        return std::nullopt;
    }
    return combo.resized(static_cast<int>(generators_.size()));
}

std::vector<BitVector> Gf2Span::basis() const {
    std::vector<BitVector> out;
    out.reserve(rows_.size());
    for (const auto &row : rows_) {
        out.push_back(row.bits);
    }
    return out;
}

std::vector<int> Gf2Span::pivots() const {
    std::vector<int> out;
    for (const auto &row : rows_) {
        out.push_back(row.pivot);
    }
    return out;
}

Gf2Span Gf2Span::orthogonal_complement() const {
    std::vector<bool> is_pivot(static_cast<size_t>(length_), false);
    for (const auto &row : rows_) {
        is_pivot[static_cast<size_t>(row.pivot)] = true;
    }
    Gf2Span out(length_);
    for (int col = 0; col < length_; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) {
            continue;
        }
        BitVector v = BitVector::unit(length_, col);
        for (const auto &row : rows_) {
            if (row.bits.get(col)) {
                v.set(row.pivot);
            }
        }
        out.insert(v);
    }
    return out;
}

bool Gf2Span::is_subspace_of(const Gf2Span &other) const {
    if (length_ != other.length_) {
        return false;
    }
    for (const auto &row : rows_) {
        if (!other.contains(row.bits)) {
            return false;
        }
    }
    return true;
}

bool Gf2Span::operator==(const Gf2Span &other) const {
    return length_ == other.length_ && rank() == other.rank() && is_subspace_of(other);
}

std::vector<BitVector> Gf2Span::enumerate() const {
    require(rank() <= 24, ErrorCode::kDimensionTooLarge,
            "refusing to enumerate a span of rank " + std::to_string(rank()));
    std::vector<BitVector> out;
    out.reserve(size_t{1} << rank());
    BitVector cur(length_);
    out.push_back(cur);
    for (uint64_t i = 1; i < (uint64_t{1} << rank()); ++i) {
        cur ^= rows_[static_cast<size_t>(std::countr_zero(i))].bits;
        out.push_back(cur);
    }
    return out;
}

Gf2Span span_sum(const Gf2Span &a, const Gf2Span &b) {
    require(a.length() == b.length(), ErrorCode::kLengthMismatch, "sum of spans with different lengths");
    Gf2Span out = a;
    for (const auto &v : b.basis()) {
        out.insert(v);
    }
    return out;
}

Gf2Span span_intersection(const Gf2Span &a, const Gf2Span &b) {
    return span_sum(a.orthogonal_complement(), b.orthogonal_complement()).orthogonal_complement();
}

}  // namespace qsync
