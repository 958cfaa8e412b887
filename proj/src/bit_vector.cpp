// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/bit_vector.hpp"

#include "qsync/error.hpp"

namespace qsync {

BitVector::BitVector(int size) : size_(size) {
    require(size >= 0 && size <= kCapacity, ErrorCode::kOutOfRange,
            "bit vector size " + std::to_string(size) + " exceeds capacity " + std::to_string(kCapacity));
}

BitVector BitVector::unit(int size, int index) {
    BitVector v(size);
    v.set(index);
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(static_cast<int>(i));
        } else if (bits[i] != '0') {
            fail(ErrorCode::kParse, "bit string may contain only 0 and 1: '" + std::string(bits) + "'");
        }
    }
    return v;
}

BitVector BitVector::from_word(int size, uint64_t word) {
    BitVector v(size);
    v.words_[0] = word;
    v.clear_tail();
    return v;
}

void BitVector::check_index(int index) const {
    if (index < 0 || index >= size_) {
        fail(ErrorCode::kOutOfRange,
             "bit index " + std::to_string(index) + " outside vector of size " + std::to_string(size_));
    }
}

void BitVector::clear_tail() noexcept {
    for (int w = 0; w < kWords; ++w) {
        int lo = 64 * w;
        if (size_ <= lo) {
            words_[w] = 0;
        } else if (size_ < lo + 64) {
            words_[w] &= (uint64_t{1} << (size_ - lo)) - 1;
        }
    }
}

void BitVector::set(int index, bool value) {
    check_index(index);
    uint64_t mask = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

void BitVector::flip(int index) {
    check_index(index);
    words_[index >> 6] ^= uint64_t{1} << (index & 63);
}

bool BitVector::any() const noexcept {
    return (words_[0] | words_[1] | words_[2] | words_[3]) != 0;
}

int BitVector::weight() const noexcept {
    int total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

int BitVector::first_one() const noexcept {
    for (int w = 0; w < kWords; ++w) {
        if (words_[w]) {
            return 64 * w + std::countr_zero(words_[w]);
        }
    }
    return -1;
}

int BitVector::last_one() const noexcept {
    for (int w = kWords - 1; w >= 0; --w) {
        if (words_[w]) {
            return 64 * w + 63 - std::countl_zero(words_[w]);
        }
    }
    return -1;
}

static void check_same_size(const BitVector &a, const BitVector &b, const char *op) {
    if (a.size() != b.size()) {
        fail(ErrorCode::kLengthMismatch, std::string(op) + " of vectors with sizes " + std::to_string(a.size()) +
                                             " and " + std::to_string(b.size()));
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    check_same_size(*this, other, "xor");
    for (int w = 0; w < kWords; ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    check_same_size(*this, other, "and");
    for (int w = 0; w < kWords; ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    check_same_size(*this, other, "or");
    for (int w = 0; w < kWords; ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

bool BitVector::lex_less(const BitVector &other) const {
    check_same_size(*this, other, "comparison");
    for (int w = 0; w < kWords; ++w) {
        uint64_t diff = words_[w] ^ other.words_[w];
        if (diff) {
            uint64_t low = diff & -diff;
            return (other.words_[w] & low) != 0;
        }
    }
    return false;
}

bool BitVector::dot(const BitVector &other) const {
    check_same_size(*this, other, "dot product");
    uint64_t acc = 0;
    for (int w = 0; w < kWords; ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

BitVector BitVector::cyclic_shift(int amount) const {
    BitVector out(size_);
    if (size_ == 0) {
        return out;
    }
    int s = ((amount % size_) + size_) % size_;
    for (int i = 0; i < size_; ++i) {
        if ((words_[i >> 6] >> (i & 63)) & 1) {
            int j = i + s < size_ ? i + s : i + s - size_;
            out.words_[j >> 6] |= uint64_t{1} << (j & 63);
        }
    }
    return out;
}

BitVector BitVector::slice(int begin, int count) const {
    require(begin >= 0 && count >= 0 && begin + count <= size_, ErrorCode::kOutOfRange,
            "slice [" + std::to_string(begin) + ", " + std::to_string(begin + count) + ") of size " +
                std::to_string(size_));
    BitVector out(count);
    for (int i = 0; i < count; ++i) {
        if ((words_[(begin + i) >> 6] >> ((begin + i) & 63)) & 1) {
            out.words_[i >> 6] |= uint64_t{1} << (i & 63);
        }
    }
    return out;
}

BitVector BitVector::concat(const BitVector &tail) const {
    BitVector out(size_ + tail.size_);
    out.words_ = words_;
    for (int i = 0; i < tail.size_; ++i) {
        if (tail.get(i)) {
            out.set(size_ + i);
        }
    }
    return out;
}

BitVector BitVector::resized(int size) const {
    BitVector out(size);
    out.words_ = words_;
    out.clear_tail();
    return out;
}

BitVector BitVector::shifted_up(int amount) const {
    require(amount >= 0, ErrorCode::kOutOfRange, "negative shift");
    BitVector out(size_);
    int word_shift = amount / 64;
    int bit_shift = amount % 64;
    for (int w = kWords - 1; w >= word_shift; --w) {
        uint64_t v = words_[w - word_shift] << bit_shift;
        if (bit_shift && w - word_shift - 1 >= 0) {
            v |= words_[w - word_shift - 1] >> (64 - bit_shift);
        }
        out.words_[w] = v;
    }
    out.clear_tail();
    return out;
}

uint64_t BitVector::to_word() const {
    require(size_ <= 64, ErrorCode::kOutOfRange, "vector of size " + std::to_string(size_) + " does not fit a word");
    return words_[0];
}

std::string BitVector::to_string() const {
    std::string s(static_cast<size_t>(size_), '0');
    for (int i = 0; i < size_; ++i) {
        if (get(i)) {
            s[static_cast<size_t>(i)] = '1';
        }
    }
    return s;
}

size_t BitVector::hash() const noexcept {
    size_t h = std::hash<int>{}(size_);
    for (uint64_t w : words_) {
        h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace qsync
