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

#include "ipred/fbl.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace ipred::fbl {

namespace {

constexpr double inv_ln2_sq = 1.0 / (std::numbers::ln2 * std::numbers::ln2);

void check_sinr(double sinr)
{
    if (!(sinr >= 0.0))
        throw std::invalid_argument("SINR must be non-negative");
}

void check_request(double payload_bits, double target_error, double predicted_sinr)
{
    if (!(payload_bits >= 1.0) || !std::isfinite(payload_bits))
        throw std::invalid_argument("payload must be at least one bit");
    if (!(target_error > 0.0 && target_error <= 0.5))
        throw std::invalid_argument("target error must lie in (0, 0.5]");
    check_sinr(predicted_sinr);
    if (predicted_sinr == 0.0)
        throw InfeasibleAllocation("zero SINR: no blocklength carries the payload");
}

// Acklam's rational approximation of the standard normal quantile,
// relative error about 1.15e-9 before refinement.
double normal_quantile_guess(double p)
{
    static constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02,
                                             -2.759285104469687e+02, 1.383577518672690e+02,
                                             -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02,
                                             -1.556989798598866e+02, 6.680131188771972e+01,
                                             -1.328068155288572e+01};
    static constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01,
                                             -2.400758277161838e+00, -2.549732539343734e+00,
                                             4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr std::array<double, 4> d{7.784695709041462e-03, 3.224671290700398e-01,
                                             2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

} // namespace

double shannon_capacity(double sinr)
{
    check_sinr(sinr);
    return std::log1p(sinr) / std::numbers::ln2;
}

double channel_dispersion(double sinr)
{
    check_sinr(sinr);
    if (sinr > 1e8) {
        const double inv = 1.0 / (1.0 + sinr);
        return inv_ln2_sq * (1.0 - inv * inv);
    }
    // 1 - 1/(1+g)^2 rewritten without the cancellation at small g.
    const double denom = (1.0 + sinr) * (1.0 + sinr);
    return inv_ln2_sq * (sinr * (2.0 + sinr) / denom);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double inverse_q(double eps)
{
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("inverse_q: probability must lie in (0, 1)");
    if (eps == 0.5)
        return 0.0;

    // Q^{-1}(eps) = -Phi^{-1}(eps); refine Phi^{-1} with Halley steps on the
    // lower tail, where erfc keeps full relative precision.
    double z = normal_quantile_guess(eps);
    const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
    for (int iter = 0; iter < 3; ++iter) {
        const double e = normal_cdf(z) - eps;
        const double u = e * sqrt_2pi * std::exp(0.5 * z * z);
        z -= u / (1.0 + 0.5 * z * u);
    }
    return -z;
}

double required_blocklength(const AllocationRequest& request)
{
    return required_blocklength(request.payload_bits, request.target_error, request.predicted_sinr);
}

double required_blocklength(double payload_bits, double target_error, double predicted_sinr)
{
    check_request(payload_bits, target_error, predicted_sinr);
    return Allocator(payload_bits, target_error).blocklength(predicted_sinr);
}

double required_blocklength_ceiled(const AllocationRequest& request)
{
    return std::ceil(required_blocklength(request));
}

double realized_error(double payload_bits, double blocklength, double actual_sinr)
{
    if (!(blocklength > 0.0))
        throw std::invalid_argument("realized_error: blocklength must be positive");
    if (!(payload_bits >= 1.0))
        throw std::invalid_argument("realized_error: payload must be at least one bit");
    check_sinr(actual_sinr);

    const double capacity = shannon_capacity(actual_sinr);
    const double dispersion = channel_dispersion(actual_sinr);
    const double margin = blocklength * capacity - payload_bits;
    if (dispersion == 0.0)
        return margin < 0.0 ? 1.0 : 0.0;
    return q_function(margin / std::sqrt(blocklength * dispersion));
}

AllocationResult allocate(const AllocationRequest& request, double actual_sinr)
{
    AllocationResult result;
    result.blocklength = required_blocklength(request);
    result.realized_error = realized_error(request.payload_bits, result.blocklength, actual_sinr);
    return result;
}

Allocator::Allocator(double payload_bits, double target_error)
    : payload_bits_(payload_bits), target_error_(target_error)
{
    check_request(payload_bits, target_error, 1.0);
    q_inv_ = inverse_q(target_error);
}

double Allocator::blocklength(double predicted_sinr) const
{
    check_sinr(predicted_sinr);
    if (predicted_sinr == 0.0)
        throw InfeasibleAllocation("zero SINR: no blocklength carries the payload");
    if (q_inv_ == 0.0)
        return payload_bits_ / shannon_capacity(predicted_sinr);

    const double r = detail::blocklength_as_written(payload_bits_, q_inv_, predicted_sinr);
    if (std::isfinite(r))
        return r;
    return detail::blocklength_root_form(payload_bits_, q_inv_, predicted_sinr);
}

namespace detail {

double blocklength_as_written(double payload_bits, double q_inv, double sinr)
{
    const double capacity = shannon_capacity(sinr);
    const double a = q_inv * q_inv * channel_dispersion(sinr);
    return payload_bits / capacity +
           a / (2.0 * capacity * capacity) * (1.0 + std::sqrt(1.0 + 4.0 * payload_bits * capacity / a));
}

double blocklength_root_form(double payload_bits, double q_inv, double sinr)
{
    const double capacity = shannon_capacity(sinr);
    const double b = q_inv * std::sqrt(channel_dispersion(sinr));
    const double s = (b + std::sqrt(b * b + 4.0 * payload_bits * capacity)) / (2.0 * capacity);
    return s * s;
}

} // namespace detail

} // namespace ipred::fbl
