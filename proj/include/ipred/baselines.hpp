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

#ifndef IPRED_BASELINES_HPP
#define IPRED_BASELINES_HPP

#include <stdexcept>

namespace ipred::baseline {

/*
 * First-order IIR (exponential moving average) interference estimate,
 * the conventional link-adaptation filter:
 *
 *   estimate <- alpha * observed + (1 - alpha) * estimate
 *
 * Seeded with the first observation.
 */
class IirState {
public:
    IirState(double forgetting_factor, double first_observation)
        : alpha_(forgetting_factor), estimate_(first_observation)
    {
        if (!(forgetting_factor > 0.0 && forgetting_factor < 1.0))
            throw std::invalid_argument("IIR forgetting factor must lie in (0, 1)");
        if (!(first_observation >= 0.0))
            throw std::invalid_argument("IIR observation must be non-negative");
    }

    double forgetting_factor() const { return alpha_; }
    double estimate() const { return estimate_; }

    void update(double observed)
    {
        if (!(observed >= 0.0))
            throw std::invalid_argument("IIR observation must be non-negative");
        estimate_ = alpha_ * observed + (1.0 - alpha_) * estimate_;
    }

private:
    double alpha_;
    double estimate_;
};

inline IirState iir_update(IirState state, double observed)
{
    state.update(observed);
    return state;
}

/// Perfect a-priori knowledge: the prediction is the actual value.
constexpr double genie_predict(double actual_next) { return actual_next; }

} // namespace ipred::baseline

#endif // IPRED_BASELINES_HPP
