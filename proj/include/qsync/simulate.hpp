// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_SIMULATE_HPP
#define QSYNC_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsync/channel.hpp"

namespace qsync {

struct SimulationConfig {
    ChannelModel channel;
    uint64_t trials = 1000;
    uint64_t seed = 1;
    /// Draw fresh b and c for every trial instead of using the instance's messages.
    bool random_messages = false;
    /// 0 picks the hardware concurrency.
    int threads = 0;
};

struct TrialRecord {
    uint64_t trial = 0;
    int alpha = 0;
    int x_errors = 0;
    int z_errors = 0;
    BitVector message_b;
    BitVector message_c;
    DecodeReport report;
};

struct SimulationSummary {
    uint64_t trials = 0;
    uint64_t sync_successes = 0;
    uint64_t classical_successes = 0;
    uint64_t quantum_successes = 0;
    uint64_t full_successes = 0;
    uint64_t uncorrectable_sync = 0;
};

struct SimulationResult {
    std::vector<TrialRecord> records;  // ordered by trial index
    SimulationSummary summary;
};

/// Runs independent trials, each seeded by (seed, trial), and reduces them in trial order.
SimulationResult run_simulation(const ExtendedCodeInstance &instance, const SimulationConfig &config);

}  // namespace qsync

#endif
