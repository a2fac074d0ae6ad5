// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/parallel.hpp"

#include <cstdlib>

namespace mox {

int default_threads() {
    if (const char* env = std::getenv("MOX_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace mox
