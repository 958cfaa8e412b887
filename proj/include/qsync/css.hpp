// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_CSS_HPP
#define QSYNC_CSS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsync/check.hpp"
#include "qsync/code_family.hpp"
#include "qsync/cyclic_code.hpp"
#include "qsync/pauli.hpp"

namespace qsync {

struct CssInput {
    LinearCode c_x;
    LinearCode c_z;
    std::optional<LinearCode> d_x;
    std::optional<LinearCode> d_z;
};

enum class CssKind { kStabilizer, kSubsystem, kHybrid, kHybridSubsystem };

std::string css_kind_name(CssKind kind);

struct CssParameters {
    int n = 0;
    int k = 0;
    int m = 0;
    int r = 0;
    std::optional<int> d_x;
    std::optional<int> d_z;
    std::optional<int> d;
};

struct CssCodeInstance {
    CssKind kind = CssKind::kStabilizer;
    CssInput input;
    int r_x = 0;  // dim(C_x + C_z^perp)
    int r_z = 0;  // dim(C_z + C_x^perp)

    PauliGroupSpan inner_stabilizer;
    PauliGroupSpan outer_stabilizer;
    PauliGroupSpan inner_gauge;
    PauliGroupSpan outer_gauge;

    std::vector<PauliOperator> translations_x;
    std::vector<PauliOperator> translations_z;
    /// Rank of the translation -> inner stabilizer phase map. Equal to m for non-degenerate input.
    int phase_rank = 0;
    bool classical_degenerate = false;

    CssParameters params;
};

struct CssOptions {
    bool compute_distance = true;
};

CssCodeInstance css_code(const LinearCode &c_x, const LinearCode &c_z, const CssOptions &options = {});
CssCodeInstance css_subsystem(const LinearCode &c_x, const LinearCode &c_z, const CssOptions &options = {});
CssCodeInstance css_hybrid(const LinearCode &c_x, const LinearCode &c_z, const LinearCode &d_x, const LinearCode &d_z,
                           const CssOptions &options = {});
CssCodeInstance css_hybrid_subsystem(const LinearCode &c_x, const LinearCode &c_z, const LinearCode &d_x,
                                     const LinearCode &d_z, const CssOptions &options = {});

/// Generators of `super` modulo `sub`, each the lexicographically smallest member of its coset.
std::vector<BitVector> coset_representatives(const LinearCode &super, const LinearCode &sub);

/// "n,k,m,r,d_x,d_z,d"; distances not computed are written as "-".
std::string css_csv_header();
std::string css_csv_row(const CssCodeInstance &instance);

/// Classical inputs whose CSS construction reproduces Q1, Q5 or Q7 from the pairing basis.
CssInput correspondence_input(const PairingBasis &basis, Family family);

/// Builds the CSS code for Q1 / Q5 / Q7 and compares all four groups and (k, m, r) with build_code.
std::vector<CheckResult> check_correspondence(const CyclicCodePair &pair, const PairingBasis &basis, Family family);

/// Distance taken as min weight over (C(S0) \ G0) together with every product t_i C(S0) t_j for
/// distinct classical translation cosets t_i, t_j. nullopt when C(S) has rank above 24.
std::optional<int> translation_coset_distance(const PauliGroupSpan &inner_stabilizer,
                                              const PauliGroupSpan &outer_stabilizer,
                                              const PauliGroupSpan &inner_gauge);

/// Structural checks on a CSS instance: commutation, containments, parameter counts,
/// the |C_x cap C_z^perp| = 2^(n - r_z) count (n <= 16) and the two-sided distance agreement.
std::vector<CheckResult> check_css_instance(const CssCodeInstance &instance);

}  // namespace qsync

#endif
