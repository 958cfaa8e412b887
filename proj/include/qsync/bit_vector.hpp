// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_BIT_VECTOR_HPP
#define QSYNC_BIT_VECTOR_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace qsync {

/// Fixed-capacity vector over GF(2). Bit i is coordinate i; coordinate 0 is
/// the constant coefficient when the vector holds a polynomial.
class BitVector {
   public:
    static constexpr int kWords = 4;
    static constexpr int kCapacity = 64 * kWords;

    BitVector() = default;
    explicit BitVector(int size);

    static BitVector unit(int size, int index);
    static BitVector from_string(std::string_view bits);
    static BitVector from_word(int size, uint64_t word);

    int size() const noexcept {
        return size_;
    }
    bool get(int index) const;
    void set(int index, bool value = true);
    void flip(int index);
    bool any() const noexcept;
    bool none() const noexcept {
        return !any();
    }
    int weight() const noexcept;
    /// Lowest set coordinate, or -1 for the zero vector.
    int first_one() const noexcept;
    /// Highest set coordinate, or -1 for the zero vector.
    int last_one() const noexcept;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }
    bool operator==(const BitVector &other) const noexcept = default;

    /// Orders by coordinate 0 first, then coordinate 1, and so on.
    bool lex_less(const BitVector &other) const;

    /// Standard dot product over GF(2); sizes must agree.
    bool dot(const BitVector &other) const;

    /// Right cyclic shift: result[(i + amount) mod size] = this[i].
    BitVector cyclic_shift(int amount) const;
    BitVector slice(int begin, int count) const;
    BitVector concat(const BitVector &tail) const;
    BitVector first_bits(int count) const {
        return slice(0, count);
    }
    BitVector last_bits(int count) const {
        return slice(size_ - count, count);
    }
    BitVector resized(int size) const;
    /// Moves coordinate i to i + amount, dropping coordinates past the end.
    BitVector shifted_up(int amount) const;

    uint64_t word(int index) const {
        return words_[index];
    }
    /// Low 64 coordinates packed into a word; requires size() <= 64.
    uint64_t to_word() const;
    std::string to_string() const;
    size_t hash() const noexcept;

   private:
    void check_index(int index) const;
    void clear_tail() noexcept;

    std::array<uint64_t, kWords> words_{};
    int size_ = 0;
};

inline bool BitVector::get(int index) const {
    check_index(index);
    return (words_[index >> 6] >> (index & 63)) & 1;
}

inline bool operator<(const BitVector &a, const BitVector &b) {
    return a.lex_less(b);
}

struct BitVectorHash {
    size_t operator()(const BitVector &v) const noexcept {
        return v.hash();
    }
};

}  // namespace qsync

#endif
