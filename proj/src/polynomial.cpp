// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/polynomial.hpp"

#include <cctype>
#include <set>

#include "qsync/error.hpp"

namespace qsync {

BinaryPolynomial::BinaryPolynomial(const BitVector &coefficients) : coeffs_(coefficients.resized(BitVector::kCapacity)) {
    require(coefficients.last_one() < BitVector::kCapacity, ErrorCode::kOutOfRange, "polynomial degree too large");
}

BinaryPolynomial BinaryPolynomial::monomial(int exponent) {
    require(exponent >= 0 && exponent < BitVector::kCapacity, ErrorCode::kOutOfRange,
            "monomial exponent " + std::to_string(exponent) + " out of range");
    BinaryPolynomial p;
    p.coeffs_.set(exponent);
    return p;
}

BinaryPolynomial BinaryPolynomial::cyclic_modulus(int n) {
    require(n >= 1 && n < BitVector::kCapacity, ErrorCode::kInvalidModulus,
            "block length " + std::to_string(n) + " out of range");
    BinaryPolynomial p = monomial(n);
    p.coeffs_.flip(0);
    return p;
}

int BinaryPolynomial::degree() const noexcept {
    int d = coeffs_.last_one();
    return d < 0 ? kDegreeNegInf : d;
}

BitVector BinaryPolynomial::vectorize(int n) const {
    require(n >= 0 && n <= BitVector::kCapacity, ErrorCode::kOutOfRange, "vectorize length out of range");
    require(degree() < n, ErrorCode::kOutOfRange,
            "polynomial of degree " + std::to_string(degree()) + " does not fit length " + std::to_string(n));
    return coeffs_.resized(n);
}

BinaryPolynomial BinaryPolynomial::devectorize(const BitVector &v) {
    return BinaryPolynomial(v);
}

BinaryPolynomial BinaryPolynomial::reversed(int span) const {
    require(span >= 0 && span < BitVector::kCapacity, ErrorCode::kOutOfRange, "reverse span out of range");
    require(degree() <= span, ErrorCode::kOutOfRange,
            "cannot reverse degree " + std::to_string(degree()) + " within span " + std::to_string(span));
    BinaryPolynomial out;
    for (int i = 0; i <= span; ++i) {
        if (coeffs_.get(i)) {
            out.coeffs_.set(span - i);
        }
    }
    return out;
}

BinaryPolynomial operator+(const BinaryPolynomial &a, const BinaryPolynomial &b) {
    return BinaryPolynomial(a.coeffs_ ^ b.coeffs_);
}

BinaryPolynomial operator*(const BinaryPolynomial &a, const BinaryPolynomial &b) {
    if (a.is_zero() || b.is_zero()) {
        return BinaryPolynomial();
    }
    require(a.degree() + b.degree() < BitVector::kCapacity, ErrorCode::kOutOfRange, "product degree too large");
    BinaryPolynomial out;
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs_.get(i)) {
            out.coeffs_ ^= b.coeffs_.shifted_up(i);
        }
    }
    return out;
}

std::pair<BinaryPolynomial, BinaryPolynomial> poly_divmod(const BinaryPolynomial &a, const BinaryPolynomial &b) {
    require(!b.is_zero(), ErrorCode::kDivisionByZero, "polynomial division by zero");
    BitVector quotient(BitVector::kCapacity);
    BitVector remainder = a.coeffs_;
    const int db = b.degree();
    for (int top = remainder.last_one(); top >= db; top = remainder.last_one()) {
        quotient.set(top - db);
        remainder ^= b.coeffs_.shifted_up(top - db);
    }
    return {BinaryPolynomial(quotient), BinaryPolynomial(remainder)};
}

bool BinaryPolynomial::divides(const BinaryPolynomial &other) const {
    return poly_divmod(other, *this).second.is_zero();
}

BinaryPolynomial poly_mul_mod(const BinaryPolynomial &a, const BinaryPolynomial &b, int n) {
    require(n >= 1 && n < BitVector::kCapacity, ErrorCode::kInvalidModulus,
            "modulus x^" + std::to_string(n) + " - 1 out of range");
    BitVector acc(n);
    BitVector av = poly_divmod(a, BinaryPolynomial::cyclic_modulus(n)).second.vectorize(n);
    BitVector bv = poly_divmod(b, BinaryPolynomial::cyclic_modulus(n)).second.vectorize(n);
    for (int i = 0; i < n; ++i) {
        if (av.get(i)) {
            acc ^= bv.cyclic_shift(i);
        }
    }
    return BinaryPolynomial(acc);
}

std::string BinaryPolynomial::format() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        if (!coeffs_.get(i)) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (i == 0) {
            out += "1";
        } else if (i == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            compact += c;
        }
    }
    auto bad = [&](const std::string &why) {
        fail(ErrorCode::kParse, "cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    if (compact.empty()) {
        bad("empty input");
    }
    if (compact == "0") {
        return BinaryPolynomial();
    }
    BinaryPolynomial out;
    std::set<int> seen;
    size_t pos = 0;
    while (pos <= compact.size()) {
        size_t end = compact.find('+', pos);
        if (end == std::string::npos) {
            end = compact.size();
        }
        std::string term = compact.substr(pos, end - pos);
        int exponent = -1;
        if (term == "1") {
            exponent = 0;
        } else if (term == "x") {
            exponent = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            std::string digits = term.substr(2);
            if (digits.size() > 4) {
                bad("exponent too large");
            }
            for (char c : digits) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    bad("malformed term '" + term + "'");
                }
            }
            exponent = std::stoi(digits);
        } else {
            bad("malformed term '" + term + "'");
        }
        if (exponent >= BitVector::kCapacity) {
            bad("exponent too large");
        }
        if (!seen.insert(exponent).second) {
            bad("repeated term '" + term + "'");
        }
        out.coeffs_.set(exponent);
        pos = end + 1;
    }
    return out;
}

}  // namespace qsync
