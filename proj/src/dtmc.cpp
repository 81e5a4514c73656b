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

#include "ipred/dtmc.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ipred::dtmc {

// ---- state space ---------------------------------------------------------

InterferenceStateSpace InterferenceStateSpace::from_warmup(std::span<const double> warmup,
                                                           std::size_t state_count)
{
    if (state_count < 2)
        throw std::invalid_argument("state space needs at least 2 states");
    if (warmup.empty())
        throw std::invalid_argument("state space needs a non-empty warm-up trace");
    const auto [lo, hi] = std::minmax_element(warmup.begin(), warmup.end());
    if (!(*lo < *hi))
        throw std::invalid_argument("state space needs at least two distinct warm-up samples");
    if (*lo < 0.0 || !std::isfinite(*hi))
        throw std::invalid_argument("warm-up samples must be finite and non-negative");

    const double i_max = *hi;
    const double levels = static_cast<double>(state_count);
    std::vector<double> boundaries(state_count + 1);
    boundaries.front() = 0.0;
    for (std::size_t l = 1; l < state_count; ++l)
        boundaries[l] = i_max * std::sqrt(static_cast<double>(l) / levels);
    boundaries.back() = std::numeric_limits<double>::infinity();
    return InterferenceStateSpace(std::move(boundaries));
}

InterferenceStateSpace::InterferenceStateSpace(std::vector<double> boundaries)
    : boundaries_(std::move(boundaries))
{
    if (boundaries_.size() < 3)
        throw std::invalid_argument("state space needs at least 2 states");
    if (boundaries_.front() != 0.0 || boundaries_.back() != std::numeric_limits<double>::infinity())
        throw std::invalid_argument("state space must span [0, inf)");
    for (std::size_t l = 1; l < boundaries_.size(); ++l)
        if (!(boundaries_[l - 1] < boundaries_[l]))
            throw std::invalid_argument("state boundaries must be strictly increasing");
}

std::size_t InterferenceStateSpace::state_of(double interference) const
{
    if (!(interference >= 0.0))
        throw std::invalid_argument("interference must be non-negative");
    // First boundary strictly above the value closes its half-open state.
    const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), interference);
    const auto idx = static_cast<std::size_t>(it - boundaries_.begin()) - 1;
    return std::min(idx, state_count() - 1);
}

double InterferenceStateSpace::right_endpoint(std::size_t j) const
{
    const std::size_t top = state_count() - 1;
    if (j > top)
        throw std::out_of_range("state index out of range");
    if (j != top)
        return boundaries_[j + 1];
    return 2.0 * boundaries_[top] - boundaries_[top - 1];
}

// ---- transition model ----------------------------------------------------

TransitionModel::TransitionModel(std::size_t state_count, double learning_scale, double learning_rate_cap)
    : state_count_(state_count),
      learning_scale_(learning_scale),
      learning_rate_cap_(learning_rate_cap),
      probs_(state_count * state_count, state_count ? 1.0 / static_cast<double>(state_count) : 0.0),
      visits_(state_count, 0)
{
    if (state_count < 2)
        throw std::invalid_argument("transition model needs at least 2 states");
    if (!(learning_scale > 0.0))
        throw std::invalid_argument("learning scale must be positive");
    if (!(learning_rate_cap >= 0.0 && learning_rate_cap < 1.0))
        throw std::invalid_argument("learning rate cap must lie in [0, 1)");
}

TransitionModel TransitionModel::estimate(std::span<const std::size_t> states, std::size_t state_count,
                                          double learning_scale, double learning_rate_cap)
{
    if (states.size() < 2)
        throw std::invalid_argument("transition estimate needs at least 2 samples");
    TransitionModel model(state_count, learning_scale, learning_rate_cap);

    std::vector<std::uint64_t> counts(state_count * state_count, 0);
    for (std::size_t t = 0; t + 1 < states.size(); ++t) {
        const std::size_t i = states[t];
        const std::size_t j = states[t + 1];
        if (i >= state_count || j >= state_count)
            throw std::invalid_argument("state index out of range");
        ++counts[i * state_count + j];
        ++model.visits_[i];
    }
    for (std::size_t i = 0; i < state_count; ++i) {
        const std::uint64_t n = model.visits_[i];
        if (n == 0)
            continue;
        for (std::size_t j = 0; j < state_count; ++j)
            model.probs_[i * state_count + j] =
                static_cast<double>(counts[i * state_count + j]) / static_cast<double>(n);
    }
    return model;
}

std::span<const double> TransitionModel::row(std::size_t i) const
{
    if (i >= state_count_)
        throw std::out_of_range("state index out of range");
    return std::span<const double>(probs_).subspan(i * state_count_, state_count_);
}

double TransitionModel::learning_rate(std::size_t i) const
{
    const auto n = std::max<std::uint64_t>(visits_.at(i), 1);
    return std::min(learning_scale_ / static_cast<double>(n), learning_rate_cap_);
}

void TransitionModel::update(std::size_t i, std::size_t j) { update(i, j, learning_rate(i)); }

void TransitionModel::update(std::size_t i, std::size_t j, double rate)
{
    if (i >= state_count_ || j >= state_count_)
        throw std::out_of_range("state index out of range");
    double* row = probs_.data() + i * state_count_;
    row[j] += rate;
    // Divide by the recomputed sum, not 1 + rate, so rounding error does not
    // accumulate over millions of updates.
    double sum = 0.0;
    for (std::size_t l = 0; l < state_count_; ++l)
        sum += row[l];
    for (std::size_t l = 0; l < state_count_; ++l)
        row[l] /= sum;
    ++visits_[i];
}

std::size_t TransitionModel::quantile_state(std::size_t i, double eta) const
{
    const auto r = row(i);
    double cumulative = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        cumulative += r[j];
        if (cumulative >= eta)
            return j;
    }
    // Rounding can leave the total a hair below eta close to 1.
    return r.size() - 1;
}

void TransitionModel::write_csv(std::ostream& out) const
{
    const auto old_precision = out.precision(15);
    for (std::size_t i = 0; i < state_count_; ++i) {
        for (std::size_t j = 0; j < state_count_; ++j) {
            if (j)
                out << ',';
            out << probs_[i * state_count_ + j];
        }
        out << '\n';
    }
    out.precision(old_precision);
}

TransitionModel estimate_transition_matrix(std::span<const double> trace, const InterferenceStateSpace& space,
                                           double learning_scale)
{
    std::vector<std::size_t> states;
    states.reserve(trace.size());
    for (double value : trace)
        states.push_back(space.state_of(value));
    return TransitionModel::estimate(states, space.state_count(), learning_scale);
}

double predict_next(const TransitionModel& model, std::size_t current_state, double eta,
                    const InterferenceStateSpace& space)
{
    return space.right_endpoint(model.quantile_state(current_state, eta));
}

// ---- online predictor ----------------------------------------------------

namespace {

double checked_eta(double eta)
{
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("confidence eta must lie in (0, 1)");
    return eta;
}

} // namespace

Predictor::Predictor(std::span<const double> warmup, std::size_t state_count, double eta, double learning_scale)
    : space_(InterferenceStateSpace::from_warmup(warmup, state_count)),
      model_(estimate_transition_matrix(warmup, space_, learning_scale)),
      eta_(checked_eta(eta)),
      current_(space_.state_of(warmup.back()))
{
}

double Predictor::predict() const { return predict_next(model_, current_, eta_, space_); }

void Predictor::observe(double interference)
{
    const std::size_t next = space_.state_of(interference);
    model_.update(current_, next);
    current_ = next;
}

} // namespace ipred::dtmc
