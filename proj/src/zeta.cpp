// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#include "mox/zeta.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <vector>

#include "mox/simd.hpp"

namespace mox {
namespace {

// B_{2k} / (2k)! for the Euler-Maclaurin correction terms.
constexpr double kBernFact[12] = {
    8.3333333333333333e-2,  -1.3888888888888889e-3, 3.3068783068783069e-5,
    -8.2671957671957672e-7, 2.0876756987868099e-8,  -5.2841901386874932e-10,
    1.3382536530684679e-11, -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18, -1.3954464685812523e-19};

// Shared ln(n) table for the Dirichlet block. Fixed capacity so the data
// pointer stays valid across concurrent growth.
class LogTable {
  public:
    static constexpr std::size_t kCapacity = 16500;

    const double* ensure(std::size_t n) {
        if (n > kCapacity) throw DomainError("zeta: internal log table exceeded");
        std::size_t have = size_.load(std::memory_order_acquire);
        if (have >= n) return data_.data();
        std::lock_guard<std::mutex> lock(mu_);
        have = size_.load(std::memory_order_relaxed);
        for (std::size_t i = have; i < n; ++i)
            data_[i] = std::log(double(i + 1));
        size_.store(n, std::memory_order_release);
        return data_.data();
    }

  private:
    std::vector<double> data_ = std::vector<double>(kCapacity);
    std::atomic<std::size_t> size_{0};
    std::mutex mu_;
};

LogTable& log_table() {
    static LogTable t;
    return t;
}

}  // namespace

Cx zeta(Cx s) {
    const double sigma = s.real(), t = s.imag();
    if (std::abs(s - Cx(1.0, 0.0)) < 1e-12) throw PoleError("zeta: pole at s = 1");
    if (std::abs(t) > 1.0e4) throw DomainError("zeta: |Im s| beyond validated range");
    if (sigma < -10.0) throw DomainError("zeta: Re s below validated range");

    const std::size_t N = std::size_t(std::max(16.0, std::ceil(1.25 * std::abs(t)) + 8.0));
    const double* logs = log_table().ensure(N - 1);

    double re = 0.0, im = 0.0;
    simd::active_ops().exp_cis_sum(logs, N - 1, -sigma, -t, &re, &im);
    Cx acc(re, im);

    const double logN = std::log(double(N));
    const Cx Nms = std::exp(-s * logN);  // N^{-s}
    acc += Nms * double(N) / (s - 1.0) + 0.5 * Nms;

    // correction terms C_k * N^{1-s-2k} * s(s+1)...(s+2k-2)
    Cx pochhammer = s;
    Cx npow = Nms / double(N);  // N^{-s-1}
    const double n2 = double(N) * double(N);
    for (int k = 1; k <= 12; ++k) {
        const Cx term = kBernFact[k - 1] * npow * pochhammer;
        acc += term;
        if (std::abs(term) <= 1e-17 * std::abs(acc) && sigma + 2.0 * k + 1.0 > 2.0) break;
        pochhammer *= (s + double(2 * k - 1)) * (s + double(2 * k));
        npow /= n2;
    }
    return acc;
}

}  // namespace mox
