// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mox::acceptance {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::vector<std::string> details;  // measured values, one per line
};

struct Options {
    int threads = 1;
};

// Runs the full verification suite; when `live` is non-null a pass/fail line
// with measured values is printed as each criterion finishes.
std::vector<CriterionResult> run_all(const Options& opts, std::ostream* live);

// true when every criterion passed
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace mox::acceptance
