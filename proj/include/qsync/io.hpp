// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_IO_HPP
#define QSYNC_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "qsync/channel.hpp"
#include "qsync/code_family.hpp"
#include "qsync/css.hpp"
#include "qsync/simulate.hpp"
#include "qsync/verify.hpp"

namespace qsync {

inline constexpr int kSchemaVersion = 1;

std::string sha256_hex(std::string_view data);

/// Digest of n, p(x), q(x) and every pairing-basis vector, in a fixed text layout.
std::string provenance_digest(const CodeProvenance &provenance);

/// "((N,k,r,d)) m=M d_sync=S", with d written as "-" when it was not computed.
std::string parameter_line(const ExtendedCodeInstance &instance);

nlohmann::json instance_to_json(const ExtendedCodeInstance &instance);
nlohmann::json verify_report_to_json(const VerifyReport &report);
nlohmann::json sync_table_to_json(const SyncLookupTable &table);
nlohmann::json simulation_summary_to_json(const ExtendedCodeInstance &instance, const SimulationConfig &config,
                                          const SimulationSummary &summary);

/// Header documenting the per-trial CSV produced by simulation_csv.
std::string simulation_csv_header();
std::string simulation_csv(const SimulationResult &result);

/// Writes text to path; a failure throws std::runtime_error naming the path.
void write_text_file(const std::string &path, const std::string &text);

}  // namespace qsync

#endif
