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

#include "ipred/interference_model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ipred {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

namespace {

void check_set(const std::vector<double>& mean_inrs, double correlation)
{
    if (!(correlation >= 0.0 && correlation < 1.0))
        throw std::invalid_argument("InterfererSet: correlation must lie in [0, 1)");
    for (double inr : mean_inrs)
        if (!(inr >= 0.0) || !std::isfinite(inr))
            throw std::invalid_argument("InterfererSet: mean INR must be finite and non-negative");
}

} // namespace

InterfererSet::InterfererSet(std::vector<double> mean_inrs, double correlation, RandomStream& rng)
    : mean_inrs_(std::move(mean_inrs)), correlation_(correlation)
{
    check_set(mean_inrs_, correlation_);
    innovation_scale_ = std::sqrt(1.0 - correlation_ * correlation_);
    gains_.reserve(mean_inrs_.size());
    for (std::size_t k = 0; k < mean_inrs_.size(); ++k)
        gains_.push_back(rng.complex_normal());
}

InterfererSet::InterfererSet(std::vector<double> mean_inrs, double correlation,
                             std::vector<std::complex<double>> gains)
    : mean_inrs_(std::move(mean_inrs)), correlation_(correlation), gains_(std::move(gains))
{
    check_set(mean_inrs_, correlation_);
    if (gains_.size() != mean_inrs_.size())
        throw std::invalid_argument("InterfererSet: one gain per interferer required");
    innovation_scale_ = std::sqrt(1.0 - correlation_ * correlation_);
}

void InterfererSet::step_fading(RandomStream& rng)
{
    for (auto& g : gains_)
        g = correlation_ * g + innovation_scale_ * rng.complex_normal();
}

double InterfererSet::aggregate_interference() const
{
    double total = 1.0;
    for (std::size_t k = 0; k < gains_.size(); ++k)
        total += mean_inrs_[k] * std::norm(gains_[k]);
    return total;
}

double DesiredLink::sample_snr(RandomStream& rng) const { return mean_snr * rng.exponential(); }

std::vector<double> sample_mean_inrs(std::size_t n, DbRange inr_range, RandomStream& rng)
{
    if (inr_range.min_db > inr_range.max_db)
        throw std::invalid_argument("sample_mean_inrs: INR range is inverted");
    std::vector<double> inrs;
    inrs.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        inrs.push_back(db_to_linear(rng.uniform(inr_range.min_db, inr_range.max_db)));
    return inrs;
}

InterfererSet step_fading(InterfererSet set, RandomStream& rng)
{
    set.step_fading(rng);
    return set;
}

double aggregate_interference(const InterfererSet& set) { return set.aggregate_interference(); }

double sample_desired_snr(const DesiredLink& link, RandomStream& rng) { return link.sample_snr(rng); }

} // namespace ipred
