// SPDX-License-Identifier: Apache-2.0
#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

namespace nfsar::detail {

namespace {

struct Plan {
    std::size_t n = 0;
    fftw_complex* buf = nullptr;
    fftw_plan plan = nullptr;

    Plan(std::size_t size, int sign) : n(size)
    {
        buf = fftw_alloc_complex(n);
        plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    ~Plan()
    {
        fftw_destroy_plan(plan);
        fftw_free(buf);
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
};

std::map<std::pair<std::size_t, int>, std::unique_ptr<Plan>>& cache()
{
    static std::map<std::pair<std::size_t, int>, std::unique_ptr<Plan>> plans;
    return plans;
}

}  // namespace

void fft_inplace(cplx* data, std::size_t n, int sign)
{
    if (n <= 1) return;
    auto& slot = cache()[{n, sign < 0 ? -1 : 1}];
    if (!slot) slot = std::make_unique<Plan>(n, sign);
    auto* buf = reinterpret_cast<cplx*>(slot->buf);
    std::copy(data, data + n, buf);
    fftw_execute(slot->plan);
    std::copy(buf, buf + n, data);
}

}  // namespace nfsar::detail
