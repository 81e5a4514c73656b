// SPDX-License-Identifier: Apache-2.0
//
// ipred - interference prediction for URLLC link adaptation
// Copyright (C) 2026 The ipred authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IPRED_INTERFERENCE_MODEL_HPP
#define IPRED_INTERFERENCE_MODEL_HPP

#include "ipred/random.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace ipred {

/// Closed range in dB, min <= max.
struct DbRange {
    double min_db = 0.0;
    double max_db = 0.0;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/*
 * N interferers with fixed mean INRs (linear) and Rayleigh block-fading
 * complex gains evolving as a first-order Gauss-Markov process:
 *
 *   g' = rho * g + sqrt(1 - rho^2) * w,   w ~ CN(0, 1)
 *
 * |g|^2 is unit-mean exponential in steady state for any rho in [0, 1);
 * rho = 0 gives independent draws every slot.
 */
class InterfererSet {
public:
    /// Gains start from the steady-state distribution.
    InterfererSet(std::vector<double> mean_inrs, double correlation, RandomStream& rng);

    /// Explicit gains, mainly for tests.
    InterfererSet(std::vector<double> mean_inrs, double correlation,
                  std::vector<std::complex<double>> gains);

    const std::vector<double>& mean_inrs() const { return mean_inrs_; }
    const std::vector<std::complex<double>>& gains() const { return gains_; }
    double correlation() const { return correlation_; }
    std::size_t size() const { return mean_inrs_.size(); }

    /// Advances every gain by one slot.
    void step_fading(RandomStream& rng);

    /// 1 + sum_k mean_inr_k * |g_k|^2, i.e. (interference + noise) / noise.
    double aggregate_interference() const;

private:
    std::vector<double> mean_inrs_;
    double correlation_;
    double innovation_scale_;
    std::vector<std::complex<double>> gains_;
};

/// Desired link with perfectly known instantaneous SNR.
struct DesiredLink {
    double mean_snr = 1.0; ///< linear

    /// Unit-mean exponential draw scaled by mean_snr.
    double sample_snr(RandomStream& rng) const;
};

/// n mean INRs, each 10^(x/10) with x uniform in the dB range.
/// Throws std::invalid_argument on an inverted range.
std::vector<double> sample_mean_inrs(std::size_t n, DbRange inr_range, RandomStream& rng);

/// Returns the advanced copy; the input is untouched.
InterfererSet step_fading(InterfererSet set, RandomStream& rng);

double aggregate_interference(const InterfererSet& set);

double sample_desired_snr(const DesiredLink& link, RandomStream& rng);

} // namespace ipred

#endif // IPRED_INTERFERENCE_MODEL_HPP
