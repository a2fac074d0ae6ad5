// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mox/types.hpp"

namespace mox {

// Riemann zeta by Euler-Maclaurin with |Im s|-adaptive truncation; the main
// Dirichlet block runs through the SIMD backend. Validated to ~1e-9 relative
// on the critical line up to |Im s| = 5000 (usable to 1e4).
// Throws PoleError at s = 1, DomainError outside the validated band.
Cx zeta(Cx s);

}  // namespace mox
