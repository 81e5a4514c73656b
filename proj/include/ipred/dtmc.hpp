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

#ifndef IPRED_DTMC_HPP
#define IPRED_DTMC_HPP

// Markov-chain interference predictor.
//
// The interference axis is cut into L states whose squared boundaries are
// equally spaced, so states get narrower as interference grows. A transition
// matrix is estimated from a warm-up trace, updated online, and the next
// interference level is predicted as the upper end of the smallest state
// whose cumulative transition probability reaches the confidence eta.
//
// State indices are zero-based: state l covers [boundary(l), boundary(l+1)).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace ipred::dtmc {

class InterferenceStateSpace {
public:
    /*
     * Interior boundaries I_max * sqrt(l / L), l = 1..L-1, with I_max the
     * largest warm-up sample; the outer boundaries are 0 and +infinity.
     * Throws std::invalid_argument for L < 2, an empty warm-up, or a warm-up
     * without two distinct values.
     */
    static InterferenceStateSpace from_warmup(std::span<const double> warmup, std::size_t state_count);

    /// Boundaries must start at 0, end at +inf and be strictly increasing.
    explicit InterferenceStateSpace(std::vector<double> boundaries);

    std::size_t state_count() const { return boundaries_.size() - 1; }
    const std::vector<double>& boundaries() const { return boundaries_; }
    double boundary(std::size_t l) const { return boundaries_.at(l); }

    /// Throws std::invalid_argument for negative or NaN input.
    std::size_t state_of(double interference) const;

    /// Predicted level for state j; the unbounded top state gets the
    /// finite stand-in 2 I_{L-1} - I_{L-2}.
    double right_endpoint(std::size_t j) const;

private:
    std::vector<double> boundaries_;
};

inline constexpr double default_learning_scale = 1.0;
inline constexpr double default_learning_rate_cap = 0.1;

class TransitionModel {
public:
    /// Uniform rows, zero visits.
    explicit TransitionModel(std::size_t state_count, double learning_scale = default_learning_scale,
                             double learning_rate_cap = default_learning_rate_cap);

    /*
     * Empirical transition frequencies of a state sequence: row i holds the
     * counts of i -> j divided by the visits to i among all but the last
     * element. Unvisited rows stay uniform. Throws std::invalid_argument for
     * sequences shorter than 2 or states out of range.
     */
    static TransitionModel estimate(std::span<const std::size_t> states, std::size_t state_count,
                                    double learning_scale = default_learning_scale,
                                    double learning_rate_cap = default_learning_rate_cap);

    std::size_t state_count() const { return state_count_; }
    double probability(std::size_t i, std::size_t j) const { return probs_[i * state_count_ + j]; }
    std::span<const double> row(std::size_t i) const;
    std::uint64_t visits(std::size_t i) const { return visits_.at(i); }
    double learning_scale() const { return learning_scale_; }
    double learning_rate_cap() const { return learning_rate_cap_; }

    /// min(c / max(n_i, 1), cap).
    double learning_rate(std::size_t i) const;

    /// p_ij += w_i, then row i is renormalized and n_i incremented.
    void update(std::size_t i, std::size_t j);

    /// Same, with an explicit learning rate.
    void update(std::size_t i, std::size_t j, double rate);

    /// Smallest j with sum_{l <= j} p_il >= eta.
    std::size_t quantile_state(std::size_t i, double eta) const;

    /// L rows of L comma-separated values, 15 significant digits.
    void write_csv(std::ostream& out) const;

private:
    std::size_t state_count_;
    double learning_scale_;
    double learning_rate_cap_;
    std::vector<double> probs_;
    std::vector<std::uint64_t> visits_;
};

/// Maps a trace onto states and estimates the transition matrix from it.
TransitionModel estimate_transition_matrix(std::span<const double> trace, const InterferenceStateSpace& space,
                                           double learning_scale = default_learning_scale);

/// Predicted interference from state i at confidence eta.
double predict_next(const TransitionModel& model, std::size_t current_state, double eta,
                    const InterferenceStateSpace& space);

/*
 * Online predictor: a frozen state space plus a transition matrix that
 * learns from every fed-back sample.
 */
class Predictor {
public:
    /// Builds the state space and batch estimate from the warm-up trace; the
    /// last warm-up sample becomes the current state.
    Predictor(std::span<const double> warmup, std::size_t state_count, double eta,
              double learning_scale = default_learning_scale);

    double eta() const { return eta_; }
    const InterferenceStateSpace& space() const { return space_; }
    const TransitionModel& model() const { return model_; }
    std::size_t current_state() const { return current_; }

    /// Interference bound for the next slot.
    double predict() const;

    /// Feeds back the interference experienced in the last slot.
    void observe(double interference);

private:
    InterferenceStateSpace space_;
    TransitionModel model_;
    double eta_;
    std::size_t current_;
};

} // namespace ipred::dtmc

#endif // IPRED_DTMC_HPP
