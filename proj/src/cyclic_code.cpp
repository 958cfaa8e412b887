// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/cyclic_code.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "qsync/error.hpp"

namespace qsync {

LinearCode LinearCode::full(int length) {
    LinearCode code(length);
    for (int i = 0; i < length; ++i) {
        code.span_.insert(BitVector::unit(length, i));
    }
    return code;
}

int min_weight_outside(const Gf2Span &a, const Gf2Span &b) {
    require(a.length() == b.length(), ErrorCode::kLengthMismatch, "weight search over spans of different length");
    require(a.rank() <= kMaxEnumerationRank, ErrorCode::kDimensionTooLarge,
            "exhaustive weight search over rank " + std::to_string(a.rank()) + " exceeds " +
                std::to_string(kMaxEnumerationRank));
    Gf2Span common = span_intersection(a, b);
    std::vector<BitVector> rows = common.basis();
    const int shared = static_cast<int>(rows.size());
    Gf2Span grown = common;
    for (const auto &v : a.basis()) {
        if (grown.insert(v)) {
            rows.push_back(v);
        }
    }
    const int total = static_cast<int>(rows.size());
    if (total == shared) {
        return kInfiniteWeight;
    }
    int best = kInfiniteWeight;
    BitVector current(a.length());
    for (uint64_t i = 1; i < (uint64_t{1} << total); ++i) {
        current ^= rows[static_cast<size_t>(std::countr_zero(i))];
        uint64_t gray = i ^ (i >> 1);
        if ((gray >> shared) != 0) {
            best = std::min(best, current.weight());
            if (best == 1) {
                break;
            }
        }
    }
    return best;
}

namespace {

bool find_dependent_subset(const std::vector<BitVector> &columns, int start, int remaining, const BitVector &acc) {
    if (remaining == 0) {
        return acc.none();
    }
    for (int i = start; i + remaining <= static_cast<int>(columns.size()); ++i) {
        if (find_dependent_subset(columns, i + 1, remaining - 1, acc ^ columns[static_cast<size_t>(i)])) {
            return true;
        }
    }
    return false;
}

}  // namespace

int min_dependent_columns(const std::vector<BitVector> &check_rows, int length) {
    const int redundancy = static_cast<int>(check_rows.size());
    require(redundancy <= kMaxEnumerationRank, ErrorCode::kDimensionTooLarge,
            "column search with " + std::to_string(redundancy) + " check rows exceeds the bound");
    std::vector<BitVector> columns(static_cast<size_t>(length), BitVector(redundancy));
    for (int r = 0; r < redundancy; ++r) {
        require(check_rows[static_cast<size_t>(r)].size() == length, ErrorCode::kLengthMismatch,
                "check row length mismatch");
        for (int c = 0; c < length; ++c) {
            if (check_rows[static_cast<size_t>(r)].get(c)) {
                columns[static_cast<size_t>(c)].set(r);
            }
        }
    }
    for (int w = 1; w <= length; ++w) {
        if (find_dependent_subset(columns, 0, w, BitVector(redundancy))) {
            return w;
        }
    }
    return kInfiniteWeight;
}

int LinearCode::min_distance() const {
    if (dimension() == 0) {
        return kInfiniteWeight;
    }
    if (dimension() <= kMaxEnumerationRank) {
        return min_weight_outside(span_, Gf2Span(length()));
    }
    if (length() - dimension() <= kMaxEnumerationRank) {
        return min_dependent_columns(dual().generators(), length());
    }
    fail(ErrorCode::kDimensionTooLarge, "minimum distance of a [" + std::to_string(length()) + ", " +
                                            std::to_string(dimension()) + "] code is beyond exhaustive search");
}

namespace {

constexpr uint64_t kSupportSearchBudget = 40'000'000;

struct SupportSearch {
    std::vector<uint64_t> columns;
    const Gf2Span *excluded = nullptr;
    int length = 0;
    uint64_t visited = 0;
    std::vector<int> chosen;

    bool run(int start, int remaining, uint64_t syndrome) {
        if (remaining == 0) {
            if (syndrome != 0) {
                return false;
            }
            BitVector word(length);
            for (int i : chosen) {
                word.set(i);
            }
            return !excluded->contains(word);
        }
        for (int i = start; i + remaining <= length; ++i) {
            if (++visited > kSupportSearchBudget) {
                return false;
            }
            chosen.push_back(i);
            const bool found = run(i + 1, remaining - 1, syndrome ^ columns[static_cast<size_t>(i)]);
            chosen.pop_back();
            if (found) {
                return true;
            }
        }
        return false;
    }
};

/// min weight of a \ b by growing support size; a is given through its check rows.
std::optional<int> support_search(const Gf2Span &a, const Gf2Span &b) {
    const int n = a.length();
    if (a.is_subspace_of(b)) {
        return kInfiniteWeight;
    }
    std::vector<BitVector> checks = a.orthogonal_complement().basis();
    if (checks.size() > 64) {
        return std::nullopt;
    }
    SupportSearch search;
    search.columns.assign(static_cast<size_t>(n), 0);
    for (size_t r = 0; r < checks.size(); ++r) {
        for (int i = 0; i < n; ++i) {
            if (checks[r].get(i)) {
                search.columns[static_cast<size_t>(i)] |= uint64_t{1} << r;
            }
        }
    }
    search.excluded = &b;
    search.length = n;
    for (int w = 1; w <= n; ++w) {
        if (search.run(0, w, 0)) {
            return w;
        }
        if (search.visited > kSupportSearchBudget) {
            return std::nullopt;
        }
    }
    return kInfiniteWeight;
}

}  // namespace

std::optional<int> min_weight_outside_bounded(const Gf2Span &a, const Gf2Span &b) {
    if (a.rank() <= kMaxEnumerationRank) {
        return min_weight_outside(a, b);
    }
    return support_search(a, b);
}

int LinearCode::min_weight_excluding(const LinearCode &excluded) const {
    return min_weight_outside(span_, excluded.span_);
}

LinearCode code_sum(const LinearCode &a, const LinearCode &b) {
    return LinearCode(span_sum(a.span(), b.span()));
}

LinearCode code_intersection(const LinearCode &a, const LinearCode &b) {
    return LinearCode(span_intersection(a.span(), b.span()));
}

CyclicCode CyclicCode::from_generator_poly(int n, const BinaryPolynomial &generator) {
    require(n >= 1 && n < BitVector::kCapacity, ErrorCode::kInvalidModulus,
            "block length " + std::to_string(n) + " out of range");
    require(!generator.is_zero(), ErrorCode::kNotAGenerator, "the zero polynomial generates no cyclic code");
    auto [check, remainder] = poly_divmod(BinaryPolynomial::cyclic_modulus(n), generator);
    require(remainder.is_zero(), ErrorCode::kNotAGenerator,
            generator.format() + " does not divide x^" + std::to_string(n) + "+1");
    CyclicCode code;
    code.n_ = n;
    code.k_ = n - generator.degree();
    code.generator_ = generator;
    code.check_ = check;
    code.reversed_check_ = check.reversed(code.k_);
    return code;
}

std::vector<BitVector> CyclicCode::generator_rows() const {
    std::vector<BitVector> rows;
    if (k_ == 0) {
        return rows;
    }
    BitVector base = generator_.vectorize(n_);
    for (int i = 0; i < k_; ++i) {
        rows.push_back(base.cyclic_shift(i));
    }
    return rows;
}

std::vector<BitVector> CyclicCode::check_rows() const {
    std::vector<BitVector> rows;
    if (k_ == n_) {
        return rows;
    }
    BitVector base = reversed_check_.vectorize(n_);
    for (int i = 0; i < n_ - k_; ++i) {
        rows.push_back(base.cyclic_shift(i));
    }
    return rows;
}

CyclicCode CyclicCode::dual() const {
    return from_generator_poly(n_, reversed_check_);
}

bool CyclicCode::contains(const BitVector &word) const {
    require(word.size() == n_, ErrorCode::kLengthMismatch, "word length differs from block length");
    return poly_divmod(BinaryPolynomial::devectorize(word), generator_).second.is_zero();
}

LinearCode CyclicCode::as_linear() const {
    return LinearCode(n_, generator_rows());
}

CyclicCodePair CyclicCodePair::make(int n, const BinaryPolynomial &p, const BinaryPolynomial &q) {
    CyclicCode c = CyclicCode::from_generator_poly(n, p);
    CyclicCode d = CyclicCode::from_generator_poly(n, q);
    auto [quotient, remainder] = poly_divmod(p, q);
    require(remainder.is_zero(), ErrorCode::kPairInvariant, q.format() + " does not divide " + p.format());
    require(c.dimension() < d.dimension(), ErrorCode::kPairInvariant,
            "C must be a strict subcode of D (k_c = " + std::to_string(c.dimension()) +
                ", k_d = " + std::to_string(d.dimension()) + ")");
    require(2 * c.dimension() - n >= 1, ErrorCode::kPairInvariant,
            "2k_c - n must be positive (k_c = " + std::to_string(c.dimension()) + ", n = " + std::to_string(n) + ")");
    require(p.divides(c.reversed_check_poly()), ErrorCode::kPairInvariant,
            "the dual of C is not contained in C");
    return CyclicCodePair(std::move(c), std::move(d), quotient);
}

int CyclicCodePair::d_min_distance() const {
    std::call_once(d_distance_->once, [this] { d_distance_->value = d_.min_distance(); });
    return d_distance_->value;
}

GeneratorDecomposition CyclicCodePair::decompose_generators() const {
    const int n = this->n();
    GeneratorDecomposition out;
    out.q_check = d_.check_rows();
    auto p_check = c_.check_rows();
    out.p_check.assign(p_check.begin(), p_check.begin() + gap());
    auto p_rows = c_.generator_rows();
    out.p_rows.assign(p_rows.begin(), p_rows.begin() + logical_count());
    auto q_rows = d_.generator_rows();
    out.q_rows.assign(q_rows.begin(), q_rows.begin() + gap());

    Gf2Span acc(n);
    auto extend_and_check = [&](const std::vector<BitVector> &rows, const LinearCode &target, const char *what) {
        for (const auto &r : rows) {
            require(acc.insert(r), ErrorCode::kPairInvariant, std::string("dependent generator while building ") + what);
        }
        require(acc == target.span(), ErrorCode::kPairInvariant, std::string("generator span differs from ") + what);
    };
    extend_and_check(out.q_check, d_.as_linear().dual(), "the dual of D");
    extend_and_check(out.p_check, c_.as_linear().dual(), "the dual of C");
    extend_and_check(out.p_rows, c_.as_linear(), "C");
    extend_and_check(out.q_rows, d_.as_linear(), "D");
    return out;
}

namespace {

bool poly_order(const BinaryPolynomial &a, const BinaryPolynomial &b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coefficient(i) != b.coefficient(i)) {
            return b.coefficient(i);
        }
    }
    return false;
}

BinaryPolynomial from_word(uint64_t word) {
    return BinaryPolynomial(BitVector::from_word(BitVector::kCapacity, word));
}

}  // namespace

std::vector<BinaryPolynomial> factor_cyclic_modulus(int n) {
    require(n >= 1 && n <= 63, ErrorCode::kInvalidModulus, "factorization supports 1 <= n <= 63");
    std::vector<BinaryPolynomial> factors;
    BinaryPolynomial rest = BinaryPolynomial::cyclic_modulus(n);
    int degree = 1;
    while (rest.degree() > 0) {
        bool found = false;
        for (; 2 * degree <= rest.degree() && !found; ++degree) {
            for (uint64_t w = (uint64_t{1} << degree) | 1; w < (uint64_t{1} << (degree + 1)); w += 2) {
                BinaryPolynomial f = from_word(w);
                auto [quot, rem] = poly_divmod(rest, f);
                if (rem.is_zero()) {
                    factors.push_back(f);
                    rest = quot;
                    found = true;
                    break;
                }
            }
            if (found) {
                break;
            }
        }
        if (!found) {
            factors.push_back(rest);
            break;
        }
    }
    std::sort(factors.begin(), factors.end(), poly_order);
    return factors;
}

std::vector<BinaryPolynomial> cyclic_divisors(int n) {
    std::vector<std::pair<BinaryPolynomial, int>> grouped;
    for (const auto &f : factor_cyclic_modulus(n)) {
        if (!grouped.empty() && grouped.back().first == f) {
            ++grouped.back().second;
        } else {
            grouped.emplace_back(f, 1);
        }
    }
    std::vector<BinaryPolynomial> divisors{BinaryPolynomial::monomial(0)};
    for (const auto &[factor, multiplicity] : grouped) {
        std::vector<BinaryPolynomial> next;
        for (const auto &d : divisors) {
            BinaryPolynomial power = d;
            next.push_back(power);
            for (int e = 1; e <= multiplicity; ++e) {
                power = power * factor;
                next.push_back(power);
            }
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end(), poly_order);
    return divisors;
}

std::vector<PairCandidate> search_pairs(int n) {
    auto divisors = cyclic_divisors(n);
    std::vector<PairCandidate> out;
    for (const auto &p : divisors) {
        int kc = n - p.degree();
        if (2 * kc - n < 1) {
            continue;
        }
        CyclicCode c = CyclicCode::from_generator_poly(n, p);
        if (!p.divides(c.reversed_check_poly())) {
            continue;
        }
        for (const auto &q : divisors) {
            if (q.degree() >= p.degree() || !q.divides(p)) {
                continue;
            }
            out.push_back(PairCandidate{p, q, kc, n - q.degree()});
        }
    }
    std::sort(out.begin(), out.end(), [](const PairCandidate &a, const PairCandidate &b) {
        if (a.kc != b.kc) {
            return a.kc < b.kc;
        }
        if (a.kd != b.kd) {
            return a.kd < b.kd;
        }
        if (!(a.p == b.p)) {
            return poly_order(a.p, b.p);
        }
        return poly_order(a.q, b.q);
    });
    return out;
}

}  // namespace qsync
