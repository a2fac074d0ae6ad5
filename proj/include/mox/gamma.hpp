// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mox/types.hpp"

namespace mox {

// Gamma function on the cut plane. Lanczos rational approximation for
// moderate arguments, Stirling series beyond (the two are cross-checked in
// tests over the switch band). Validated region: |z| <= 50, |Im z| <= 200,
// relative accuracy ~1e-12.
// Throws PoleError at nonpositive integers, OverflowError when |Gamma| is
// not representable (use log_gamma instead).
Cx gamma(Cx z);

// Principal branch of log Gamma, Re z > 0 only; continuous along vertical
// lines. Throws DomainError for Re z <= 0.
Cx log_gamma(Cx z);

// log(sin(pi z)) up to a multiple of 2 pi i (safe to exponentiate); avoids
// overflow for large |Im z|.
Cx log_sin_pi(Cx z);

}  // namespace mox
