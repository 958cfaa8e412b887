// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_TOOLS_CLI_HPP
#define QSYNC_TOOLS_CLI_HPP

#include <map>
#include <ostream>
#include <string>

namespace qsync::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Flat key = value settings; '#' starts a comment.
using RunConfig = std::map<std::string, std::string>;

/// Parses config text, rejecting unknown keys and duplicates (qsync::Error with kUsage).
RunConfig parse_config_text(const std::string &text);

/// Entry point shared by the qsync binary and the tests.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qsync::cli

#endif
