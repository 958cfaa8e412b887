// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_VERIFY_HPP
#define QSYNC_VERIFY_HPP

#include <string>
#include <vector>

#include "qsync/code_family.hpp"
#include "qsync/cyclic_code.hpp"
#include "qsync/pairing.hpp"

namespace qsync {

/// Lengths whose valid pairs make up the reference corpus.
const std::vector<int> &corpus_lengths();

struct CorpusPair {
    CyclicCodePair pair;
    PairingBasis basis;
    std::string label;  // "n=7 p=1+x+x^3 q=1"
};

std::vector<CorpusPair> corpus_pairs(const std::vector<int> &lengths);

/// Every (family, a_l, a_r, y) accepted by validate_spec for a pair with this gap, messages left at zero.
std::vector<CodeSpec> admissible_specs(int gap);

/// One named property aggregated over every case it was evaluated on.
struct SuiteCheck {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool passed() const noexcept {
        return failures == 0;
    }
};

struct VerifyReport {
    std::string label;
    std::vector<SuiteCheck> checks;

    bool all_passed() const;
    const SuiteCheck *find(const std::string &name) const;
};

struct VerifyOptions {
    bool encoding_circuit = true;
    bool css_correspondence = true;
};

/// Runs the pairing, lookup-table, trade-off, shift, encoder, block and CSS suites on one pair.
/// The basis is taken as given, so a corrupted basis shows up as named failures.
VerifyReport verify_pair(const CyclicCodePair &pair, const PairingBasis &basis, const VerifyOptions &options = {});

}  // namespace qsync

#endif
