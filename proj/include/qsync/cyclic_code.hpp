// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_CYCLIC_CODE_HPP
#define QSYNC_CYCLIC_CODE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qsync/bit_vector.hpp"
#include "qsync/gf2_span.hpp"
#include "qsync/polynomial.hpp"

namespace qsync {

/// Binary linear code stored in reduced row echelon form, so two codes are
/// equal exactly when their canonical generator lists are equal.
class LinearCode {
   public:
    explicit LinearCode(int length = 0) : span_(length) {
    }
    LinearCode(int length, const std::vector<BitVector> &generators) : span_(Gf2Span::of(length, generators)) {
    }
    explicit LinearCode(Gf2Span span) : span_(std::move(span)) {
    }
    static LinearCode full(int length);

    int length() const noexcept {
        return span_.length();
    }
    int dimension() const noexcept {
        return span_.rank();
    }
    bool contains(const BitVector &word) const {
        return span_.contains(word);
    }
    std::vector<BitVector> generators() const {
        return span_.basis();
    }
    const Gf2Span &span() const noexcept {
        return span_;
    }

    LinearCode dual() const {
        return LinearCode(span_.orthogonal_complement());
    }
    bool is_subcode_of(const LinearCode &other) const {
        return span_.is_subspace_of(other.span_);
    }
    bool operator==(const LinearCode &other) const {
        return span_ == other.span_;
    }

    /// Minimum weight of a nonzero codeword. Enumerates codewords when the
    /// dimension is at most 24 and otherwise searches small column subsets
    /// of a check matrix when the redundancy is at most 24.
    int min_distance() const;
    /// Minimum weight of a codeword outside `excluded`.
    int min_weight_excluding(const LinearCode &excluded) const;

   private:
    Gf2Span span_;
};

LinearCode code_sum(const LinearCode &a, const LinearCode &b);
LinearCode code_intersection(const LinearCode &a, const LinearCode &b);

/// Minimum Hamming weight over span(a) minus span(b); requires rank(a) <= 24.
int min_weight_outside(const Gf2Span &a, const Gf2Span &b);
/// Same quantity without the rank limit: enumerates when rank(a) <= 24 and
/// otherwise grows candidate supports against the check rows of a. Returns
/// nullopt when neither search fits its budget.
std::optional<int> min_weight_outside_bounded(const Gf2Span &a, const Gf2Span &b);

/// Smallest number of columns of the given check rows that sum to zero.
int min_dependent_columns(const std::vector<BitVector> &check_rows, int length);

class CyclicCode {
   public:
    static CyclicCode from_generator_poly(int n, const BinaryPolynomial &generator);

    int length() const noexcept {
        return n_;
    }
    int dimension() const noexcept {
        return k_;
    }
    const BinaryPolynomial &generator_poly() const noexcept {
        return generator_;
    }
    /// (x^n - 1) / p(x).
    const BinaryPolynomial &check_poly() const noexcept {
        return check_;
    }
    /// Coefficients of the check polynomial reversed over degrees 0..k.
    const BinaryPolynomial &reversed_check_poly() const noexcept {
        return reversed_check_;
    }

    /// Rows p_1..p_k: shifts 0..k-1 of the generator polynomial.
    std::vector<BitVector> generator_rows() const;
    /// Rows of the check matrix: shifts 0..n-k-1 of the reversed check polynomial.
    std::vector<BitVector> check_rows() const;

    CyclicCode dual() const;
    bool contains(const BitVector &word) const;
    LinearCode as_linear() const;
    int min_distance() const {
        return as_linear().min_distance();
    }

   private:
    CyclicCode() = default;
    int n_ = 0;
    int k_ = 0;
    BinaryPolynomial generator_;
    BinaryPolynomial check_;
    BinaryPolynomial reversed_check_;
};

/// The four generator families that rebuild D-perp, C-perp, C and D in turn.
struct GeneratorDecomposition {
    std::vector<BitVector> q_check;  // shifts of D's reversed check polynomial, n - k_d rows
    std::vector<BitVector> p_check;  // shifts of C's reversed check polynomial, k_d - k_c rows
    std::vector<BitVector> p_rows;   // shifts of p(x), 2k_c - n rows
    std::vector<BitVector> q_rows;   // shifts of q(x), k_d - k_c rows
};

/// Nested cyclic codes with C-perp inside C inside D, all strict.
class CyclicCodePair {
   public:
    static CyclicCodePair make(int n, const BinaryPolynomial &p, const BinaryPolynomial &q);

    int n() const noexcept {
        return c_.length();
    }
    const CyclicCode &c() const noexcept {
        return c_;
    }
    const CyclicCode &d() const noexcept {
        return d_;
    }
    int kc() const noexcept {
        return c_.dimension();
    }
    int kd() const noexcept {
        return d_.dimension();
    }
    /// k_d - k_c: the number of gauge, message or synchronization slots.
    int gap() const noexcept {
        return kd() - kc();
    }
    /// 2k_c - n: the number of logical qubits.
    int logical_count() const noexcept {
        return 2 * kc() - n();
    }
    /// p(x) / q(x).
    const BinaryPolynomial &quotient() const noexcept {
        return quotient_;
    }

    std::vector<BitVector> p_rows() const {
        return c_.generator_rows();
    }
    std::vector<BitVector> p_check_rows() const {
        return c_.check_rows();
    }
    std::vector<BitVector> q_rows() const {
        return d_.generator_rows();
    }
    std::vector<BitVector> q_check_rows() const {
        return d_.check_rows();
    }
    /// q_1 = V(q(x)), the synchronization marker.
    BitVector marker() const {
        return d_.generator_poly().vectorize(n());
    }

    /// Truncated generator families with every span equality asserted.
    GeneratorDecomposition decompose_generators() const;

    /// Minimum distance of D, computed on first use and shared by every copy of this pair.
    int d_min_distance() const;

   private:
    struct DistanceCache {
        std::once_flag once;
        int value = 0;
    };

    CyclicCodePair(CyclicCode c, CyclicCode d, BinaryPolynomial quotient)
        : c_(std::move(c)),
          d_(std::move(d)),
          quotient_(std::move(quotient)),
          d_distance_(std::make_shared<DistanceCache>()) {
    }
    CyclicCode c_;
    CyclicCode d_;
    BinaryPolynomial quotient_;
    std::shared_ptr<DistanceCache> d_distance_;
};

/// Irreducible factors of x^n - 1 with multiplicity, in increasing order of
/// (degree, coefficient word).
std::vector<BinaryPolynomial> factor_cyclic_modulus(int n);

/// Every divisor of x^n - 1, sorted by (degree, coefficient word).
std::vector<BinaryPolynomial> cyclic_divisors(int n);

struct PairCandidate {
    BinaryPolynomial p;
    BinaryPolynomial q;
    int kc;
    int kd;
};

/// All divisor pairs q | p | x^n - 1 meeting the nesting conditions, ordered
/// by (k_c, k_d, p, q).
std::vector<PairCandidate> search_pairs(int n);

}  // namespace qsync

#endif
