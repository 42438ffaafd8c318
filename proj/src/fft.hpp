// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "nfsar/axis.hpp"

namespace nfsar::detail {

/// In-place unnormalized 1-D DFT of n points. sign = -1 forward, +1 backward.
/// Plans are cached per (n, sign); not thread-safe.
void fft_inplace(cplx* data, std::size_t n, int sign);

}  // namespace nfsar::detail
