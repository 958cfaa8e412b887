// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_PAIRING_HPP
#define QSYNC_PAIRING_HPP

#include <vector>

#include "qsync/bit_vector.hpp"
#include "qsync/check.hpp"
#include "qsync/cyclic_code.hpp"

namespace qsync {

struct LogicalPairs {
    std::vector<BitVector> s_x;
    std::vector<BitVector> s_z;
};

struct GaugeTriples {
    std::vector<BitVector> t_tilde;
    std::vector<BitVector> t_x;
    std::vector<BitVector> t_z;
};

/// Vectors whose X and Z operators split the logical, gauge and stabilizer
/// roles of the code pair.
struct PairingBasis {
    int n = 0;
    std::vector<BitVector> q_tilde;
    std::vector<BitVector> t_tilde;
    std::vector<BitVector> s_x;
    std::vector<BitVector> s_z;
    std::vector<BitVector> t_x;
    std::vector<BitVector> t_z;
    std::vector<BitVector> q_prime;
};

/// Symplectic Gram-Schmidt over the shifts of p(x), producing pure X / pure Z
/// logical pairs with s_x[l] . s_z[l'] = [l == l'].
LogicalPairs pair_logicals(const std::vector<BitVector> &p_vectors);

/// q'_m = q_m + sum_l (q_m . s_x[l]) s_z[l].
std::vector<BitVector> project_out_logicals(const std::vector<BitVector> &q_rows, const LogicalPairs &logicals);
/// The same projection with the roles of s_x and s_z exchanged.
std::vector<BitVector> project_out_logicals_swapped(const std::vector<BitVector> &q_rows,
                                                    const LogicalPairs &logicals);

/// Pairs each check-row combination with a partner drawn from q'.
GaugeTriples pair_gauges(const std::vector<BitVector> &p_check, const std::vector<BitVector> &q_prime);

/// Runs the decomposition and both pairing passes, then asserts every
/// property through check_pairing_properties.
PairingBasis build_pairing_basis(const CyclicCodePair &pair);

/// Named checks "property-1" .. "property-8", "n0-anticommutation" and
/// "q-prime-symmetry".
std::vector<CheckResult> check_pairing_properties(const CyclicCodePair &pair, const PairingBasis &basis);

}  // namespace qsync

#endif
