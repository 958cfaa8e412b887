// Copyright 2026 The qsync Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QSYNC_CHECK_HPP
#define QSYNC_CHECK_HPP

#include <string>
#include <vector>

namespace qsync {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline bool all_passed(const std::vector<CheckResult> &checks) {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

}  // namespace qsync

#endif
