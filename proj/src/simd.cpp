// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace mox::simd {

const Ops& active_ops() {
    static const Ops* chosen = [] {
        if (const char* env = std::getenv("MOX_SIMD")) {
            if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
        }
        if (const Ops* v = avx2_ops()) return v;
        return &scalar_ops();
    }();
    return *chosen;
}

}  // namespace mox::simd
