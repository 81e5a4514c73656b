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

#include "ipred/baselines.hpp"
#include "ipred/random.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace ipred::baseline;

TEST_CASE("iir_update")
{
    SUBCASE("single step")
    {
        const auto next = iir_update(IirState(0.5, 2.0), 4.0);
        CHECK(next.estimate() == 3.0);
    }
    SUBCASE("seeded with the first observation")
    {
        CHECK(IirState(0.01, 7.5).estimate() == 7.5);
    }
    SUBCASE("converges to a constant input")
    {
        IirState s(0.01, 0.0);
        for (int k = 0; k < 10'000; ++k)
            s.update(5.0);
        CHECK(std::abs(s.estimate() - 5.0) < 1e-6 * 5.0);
    }
    SUBCASE("stays inside the hull of its inputs")
    {
        ipred::RandomStream rng(8);
        IirState s(0.3, 1.0);
        double lo = 1.0;
        double hi = 1.0;
        for (int k = 0; k < 10'000; ++k) {
            const double x = 1.0 + 20.0 * rng.exponential();
            lo = std::min(lo, x);
            hi = std::max(hi, x);
            s.update(x);
            REQUIRE(s.estimate() >= lo);
            REQUIRE(s.estimate() <= hi);
        }
    }
    SUBCASE("smooths white noise by alpha / (2 - alpha)")
    {
        ipred::RandomStream rng(9);
        constexpr double alpha = 0.01;
        IirState s(alpha, 1.0);
        std::vector<double> input;
        std::vector<double> output;
        for (int k = 0; k < 400'000; ++k) {
            const double x = rng.exponential();
            s.update(x);
            if (k >= 2000) {
                input.push_back(x);
                output.push_back(s.estimate());
            }
        }
        const double ratio = ipred::test::variance(output) / ipred::test::variance(input);
        CHECK(ratio == doctest::Approx(alpha / (2.0 - alpha)).epsilon(0.1));
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(IirState(0.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(IirState(1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(IirState(0.5, -1.0), std::invalid_argument);
        IirState s(0.5, 1.0);
        CHECK_THROWS_AS(s.update(-2.0), std::invalid_argument);
    }
}

TEST_CASE("genie_predict")
{
    static_assert(genie_predict(3.25) == 3.25);
    for (double x : {1.0, 1.5, 1e6})
        CHECK(genie_predict(x) == x);
}
