// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_POLYNOMIAL_HPP
#define QSYNC_POLYNOMIAL_HPP

#include <climits>
#include <string>
#include <string_view>
#include <utility>

#include "qsync/bit_vector.hpp"

namespace qsync {

inline constexpr int kDegreeNegInf = INT_MIN;

/// Polynomial over GF(2) with degree below BitVector::kCapacity. Coefficient
/// of x^i is bit i.
class BinaryPolynomial {
   public:
    BinaryPolynomial() : coeffs_(BitVector::kCapacity) {
    }
    explicit BinaryPolynomial(const BitVector &coefficients);

    static BinaryPolynomial monomial(int exponent);
    /// x^n + 1.
    static BinaryPolynomial cyclic_modulus(int n);
    /// Accepts forms such as "1+x+x^3", "x^2 + 1" and "0".
    static BinaryPolynomial parse(std::string_view text);

    int degree() const noexcept;
    bool is_zero() const noexcept {
        return coeffs_.none();
    }
    bool coefficient(int exponent) const {
        return exponent >= 0 && exponent < BitVector::kCapacity && coeffs_.get(exponent);
    }
    int weight() const noexcept {
        return coeffs_.weight();
    }
    const BitVector &coefficients() const noexcept {
        return coeffs_;
    }

    /// Coefficients of degrees 0..n-1 as a length-n vector.
    BitVector vectorize(int n) const;
    static BinaryPolynomial devectorize(const BitVector &v);

    /// Reverses coefficients 0..span: result coefficient i = coefficient (span - i).
    BinaryPolynomial reversed(int span) const;

    std::string format() const;

    friend BinaryPolynomial operator+(const BinaryPolynomial &a, const BinaryPolynomial &b);
    friend BinaryPolynomial operator*(const BinaryPolynomial &a, const BinaryPolynomial &b);
    bool operator==(const BinaryPolynomial &other) const noexcept = default;
    bool divides(const BinaryPolynomial &other) const;

   private:
    friend std::pair<BinaryPolynomial, BinaryPolynomial> poly_divmod(const BinaryPolynomial &a,
                                                                     const BinaryPolynomial &b);
    BitVector coeffs_;
};

/// Quotient and remainder; throws on a zero divisor.
std::pair<BinaryPolynomial, BinaryPolynomial> poly_divmod(const BinaryPolynomial &a, const BinaryPolynomial &b);

/// Product in GF(2)[x]/(x^n - 1), returned reduced to degree below n.
BinaryPolynomial poly_mul_mod(const BinaryPolynomial &a, const BinaryPolynomial &b, int n);

}  // namespace qsync

#endif
