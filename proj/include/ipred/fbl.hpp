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

#ifndef IPRED_FBL_HPP
#define IPRED_FBL_HPP

// Finite-blocklength (normal approximation) coding over an AWGN channel.
//
//   D = R C(g) - Qinv(eps) sqrt(R V(g))          (log2 R term dropped)
//
// required_blocklength() solves this for R, realized_error() for eps, so
// the two are exact inverses of each other.

#include <stdexcept>

namespace ipred::fbl {

/// Thrown when the SINR is zero and no blocklength can carry the payload.
class InfeasibleAllocation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct AllocationRequest {
    double payload_bits = 0.0;   ///< D >= 1
    double target_error = 0.0;   ///< eps in (0, 0.5]
    double predicted_sinr = 0.0; ///< linear, > 0
};

struct AllocationResult {
    double blocklength = 0.0;    ///< channel uses, real valued
    double realized_error = 0.0;
};

/// log2(1 + sinr), bits per channel use.
double shannon_capacity(double sinr);

/// (1 - 1/(1+sinr)^2) / ln(2)^2, squared bits per channel use.
double channel_dispersion(double sinr);

/// Gaussian tail probability Q(x) = P[Z > x].
double q_function(double x);

/// Inverse of q_function on (0, 1), |Q(x) - eps| / eps < 1e-10.
double inverse_q(double eps);

/*
 * Channel uses needed to deliver `payload_bits` at error `target_error`
 * with SINR `predicted_sinr`:
 *
 *   R = D/C + q^2 V / (2 C^2) * [1 + sqrt(1 + 4 D C / (q^2 V))],  q = Qinv(eps)
 *
 * eps = 0.5 collapses to the Shannon limit D/C. Throws InfeasibleAllocation
 * for zero SINR and std::invalid_argument for out-of-range inputs.
 */
double required_blocklength(const AllocationRequest& request);

double required_blocklength(double payload_bits, double target_error, double predicted_sinr);

/// Same as required_blocklength() with the blocklength rounded up.
double required_blocklength_ceiled(const AllocationRequest& request);

/// Q((R C(g) - D) / sqrt(R V(g))) with the degenerate V = 0 cases mapped
/// to 0 or 1. Throws std::invalid_argument for R <= 0.
double realized_error(double payload_bits, double blocklength, double actual_sinr);

/// Allocates for the request and evaluates the result at `actual_sinr`.
AllocationResult allocate(const AllocationRequest& request, double actual_sinr);

namespace detail {

/// The blocklength closed form evaluated literally; overflows to inf once
/// q_inv^2 V underflows against 4 D C.
double blocklength_as_written(double payload_bits, double q_inv, double sinr);

/// Same quantity as the positive root s of C s^2 - q_inv sqrt(V) s - D = 0,
/// squared. Finite for every q_inv >= 0.
double blocklength_root_form(double payload_bits, double q_inv, double sinr);

} // namespace detail

/*
 * Allocation with Qinv(eps) precomputed, for the per-slot loop where the
 * target is fixed and only the SINR changes.
 */
class Allocator {
public:
    Allocator(double payload_bits, double target_error);

    double payload_bits() const { return payload_bits_; }
    double target_error() const { return target_error_; }

    double blocklength(double predicted_sinr) const;

private:
    double payload_bits_;
    double target_error_;
    double q_inv_;
};

} // namespace ipred::fbl

#endif // IPRED_FBL_HPP
