// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsync/simulate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "qsync/error.hpp"

namespace qsync {

namespace {

BitVector random_word(std::mt19937_64 &rng, int size) {
    return size == 0 ? BitVector(0) : BitVector::from_word(size, rng() & ((size >= 64) ? ~0ULL : ((1ULL << size) - 1)));
}

}  // namespace

SimulationResult run_simulation(const ExtendedCodeInstance &instance, const SimulationConfig &config) {
    require(instance.message_b.size() <= 64 && instance.message_c.size() <= 64, ErrorCode::kDimensionTooLarge,
            "message registers above 64 bits");
    const Decoder decoder(instance);
    auto fixed_block = encode_block(instance);

    SimulationResult result;
    result.records.resize(static_cast<size_t>(config.trials));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const uint64_t workers =
        std::min<uint64_t>(config.threads > 0 ? static_cast<uint64_t>(config.threads) : hw, std::max<uint64_t>(1, config.trials));

    auto work = [&](uint64_t first) {
        std::map<std::string, std::shared_ptr<const EncodedBlock>> blocks;
        for (uint64_t t = first; t < config.trials; t += workers) {
            std::shared_ptr<const EncodedBlock> block = fixed_block;
            if (config.random_messages) {
                std::seed_seq seq{static_cast<uint32_t>(config.seed), static_cast<uint32_t>(config.seed >> 32),
                                  static_cast<uint32_t>(t), static_cast<uint32_t>(t >> 32), 0x6d5u};
                std::mt19937_64 rng(seq);
                const BitVector b = random_word(rng, instance.message_b.size());
                const BitVector c = random_word(rng, instance.message_c.size());
                const std::string key = b.to_string() + "|" + c.to_string();
                auto it = blocks.find(key);
                if (it == blocks.end()) {
                    it = blocks.emplace(key, encode_block(with_messages(instance, b, c))).first;
                }
                block = it->second;
            }
            const FrameState frame = transmit(block, config.channel, config.seed, t);
            TrialRecord &rec = result.records[static_cast<size_t>(t)];
            rec.trial = t;
            rec.alpha = frame.true_alpha;
            rec.x_errors = frame.e_x.weight();
            rec.z_errors = frame.e_z.weight();
            rec.message_b = frame.encoded_b;
            rec.message_c = frame.encoded_c;
            rec.report = decoder.decode(frame);
        }
    };

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                work(w);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    SimulationSummary &s = result.summary;
    s.trials = config.trials;
    for (const auto &rec : result.records) {
        const DecodeReport &r = rec.report;
        s.sync_successes += r.sync_success ? 1 : 0;
        s.classical_successes += r.classical_success ? 1 : 0;
        s.quantum_successes += r.quantum_success ? 1 : 0;
        s.full_successes += (r.sync_success && r.classical_success && r.quantum_success) ? 1 : 0;
        s.uncorrectable_sync += r.uncorrectable_sync ? 1 : 0;
    }
    return result;
}

}  // namespace qsync
