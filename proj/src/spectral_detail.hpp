// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace nfsar::detail {

/// Calls fn(base, stride) for every 1-D line along `dim` of a row-major array.
void for_each_line(const std::vector<std::size_t>& shape, std::size_t dim,
                   const std::function<void(std::size_t base, std::size_t stride)>& fn);

}  // namespace nfsar::detail
