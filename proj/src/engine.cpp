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

#include "ipred/engine.hpp"

#include "ipred/baselines.hpp"
#include "ipred/dtmc.hpp"
#include "ipred/fbl.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <future>
#include <optional>
#include <sstream>

namespace ipred {

std::string_view to_string(PredictorKind kind)
{
    switch (kind) {
    case PredictorKind::dtmc: return "dtmc";
    case PredictorKind::iir: return "iir";
    case PredictorKind::genie: return "genie";
    }
    return "unknown";
}

PredictorKind parse_predictor_kind(std::string_view name)
{
    if (name == "dtmc")
        return PredictorKind::dtmc;
    if (name == "iir")
        return PredictorKind::iir;
    if (name == "genie")
        return PredictorKind::genie;
    throw std::invalid_argument("unknown predictor '" + std::string(name) + "' (expected dtmc, iir or genie)");
}

std::string PredictorSpec::label() const
{
    if (kind != PredictorKind::dtmc)
        return std::string(to_string(kind));
    std::ostringstream out;
    out << "dtmc@" << eta;
    return out.str();
}

// ---- configuration -------------------------------------------------------

void ScenarioConfig::validate() const
{
    if (!std::isfinite(mean_snr_db))
        throw ValidationError("mean_snr_db", "must be finite");
    if (!std::isfinite(inr_range_db.min_db) || !std::isfinite(inr_range_db.max_db))
        throw ValidationError("inr_range_db", "must be finite");
    if (inr_range_db.min_db > inr_range_db.max_db)
        throw ValidationError("inr_range_db", "minimum exceeds maximum");
    if (n_interferers > 0 && mean_snr_db < inr_range_db.max_db)
        throw ValidationError("mean_snr_db", "must be at least the strongest mean INR");
    if (!(payload_bits >= 1.0) || !std::isfinite(payload_bits))
        throw ValidationError("payload_bits", "must be at least 1");
    if (state_count < 2)
        throw ValidationError("state_count", "must be at least 2");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw ValidationError("confidence", "must lie in (0, 1)");
    if (!(iir_alpha > 0.0 && iir_alpha < 1.0))
        throw ValidationError("iir_alpha", "must lie in (0, 1)");
    if (!(correlation >= 0.0 && correlation < 1.0))
        throw ValidationError("correlation", "must lie in [0, 1)");
    if (!(learning_scale > 0.0) || !std::isfinite(learning_scale))
        throw ValidationError("learning_scale", "must be positive");
    if (warmup_length < 2)
        throw ValidationError("warmup_length", "must be at least 2");
    if (measured_slots < 1)
        throw ValidationError("measured_slots", "must be at least 1");
    if (target_errors.empty())
        throw ValidationError("target_errors", "must not be empty");
    for (std::size_t k = 0; k < target_errors.size(); ++k)
        if (!(target_errors[k] > 0.0 && target_errors[k] <= 0.5))
            throw ValidationError("target_errors[" + std::to_string(k) + "]", "must lie in (0, 0.5]");
}

namespace {

constexpr std::array<std::string_view, 4> preset_names{
    "table1", "strong-snr-strong-interference", "strong-snr-weak-interference", "weak-snr-weak-interference"};

} // namespace

std::span<const std::string_view> scenario_preset_names() { return preset_names; }

bool apply_scenario_preset(std::string_view name, ScenarioConfig& config)
{
    if (name == "table1") {
        config.mean_snr_db = 20.0;
        config.inr_range_db = {-10.0, 5.0};
    } else if (name == "strong-snr-strong-interference") {
        config.mean_snr_db = 20.0;
        config.inr_range_db = {0.0, 20.0};
    } else if (name == "strong-snr-weak-interference") {
        config.mean_snr_db = 20.0;
        config.inr_range_db = {-5.0, 5.0};
    } else if (name == "weak-snr-weak-interference") {
        config.mean_snr_db = 5.0;
        config.inr_range_db = {-5.0, 5.0};
    } else {
        return false;
    }
    return true;
}

const TargetMetrics& RunMetrics::at_target(double target_error) const
{
    for (const auto& t : targets)
        if (t.target_error == target_error)
            return t;
    throw std::out_of_range("no metrics for the requested target error");
}

// ---- channel realization -------------------------------------------------

namespace {

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t fnv_prime = 0x100000001b3ULL;

std::uint64_t fnv_mix(std::uint64_t hash, double value)
{
    auto bits = std::bit_cast<std::uint64_t>(value);
    for (int b = 0; b < 8; ++b) {
        hash ^= bits & 0xffU;
        hash *= fnv_prime;
        bits >>= 8;
    }
    return hash;
}

InterfererSet make_interferers(const ScenarioConfig& config, RandomStream& rng)
{
    auto inrs = sample_mean_inrs(config.n_interferers, config.inr_range_db, rng);
    return InterfererSet(std::move(inrs), config.correlation, rng);
}

} // namespace

ChannelRealization::ChannelRealization(const ScenarioConfig& config)
    : rng_(config.seed),
      interferers_(make_interferers(config, rng_)),
      desired_{db_to_linear(config.mean_snr_db)},
      checksum_(fnv_offset)
{
}

ChannelRealization::Slot ChannelRealization::next()
{
    interferers_.step_fading(rng_);
    Slot slot{interferers_.aggregate_interference(), desired_.sample_snr(rng_)};
    checksum_ = fnv_mix(fnv_mix(checksum_, slot.interference), slot.snr);
    return slot;
}

// ---- simulation loop -----------------------------------------------------

namespace {

// The three predictors behind one predict/observe surface.
class SlotPredictor {
public:
    SlotPredictor(const ScenarioConfig& config, const PredictorSpec& spec, std::span<const double> warmup)
        : kind_(spec.kind)
    {
        switch (kind_) {
        case PredictorKind::dtmc:
            dtmc_.emplace(warmup, config.state_count, spec.eta, config.learning_scale);
            break;
        case PredictorKind::iir:
            iir_.emplace(config.iir_alpha, warmup.front());
            for (std::size_t t = 1; t < warmup.size(); ++t)
                iir_->update(warmup[t]);
            break;
        case PredictorKind::genie:
            break;
        }
    }

    // Only the genie looks at the actual value.
    double predict(double actual_next) const
    {
        switch (kind_) {
        case PredictorKind::dtmc: return dtmc_->predict();
        case PredictorKind::iir: return iir_->estimate();
        case PredictorKind::genie: return baseline::genie_predict(actual_next);
        }
        return actual_next;
    }

    void observe(double interference)
    {
        if (dtmc_)
            dtmc_->observe(interference);
        else if (iir_)
            iir_->update(interference);
    }

private:
    PredictorKind kind_;
    std::optional<dtmc::Predictor> dtmc_;
    std::optional<baseline::IirState> iir_;
};

struct TargetAccumulator {
    fbl::Allocator allocator;
    double error_sum = 0.0;
    double ru_sum = 0.0;
    double genie_ru_sum = 0.0;
    double excess_sq_sum = 0.0;
    std::uint64_t feasible = 0;
    std::uint64_t infeasible = 0;
};

} // namespace

RunMetrics run_scenario(const ScenarioConfig& config, const SlotObserver& observer)
{
    return run_predictor(config, config.predictor_spec(), observer);
}

RunMetrics run_predictor(const ScenarioConfig& config, const PredictorSpec& spec, const SlotObserver& observer)
{
    config.validate();
    if (spec.kind == PredictorKind::dtmc && !(spec.eta > 0.0 && spec.eta < 1.0))
        throw ValidationError("confidence", "must lie in (0, 1)");

    ChannelRealization channel(config);

    std::vector<double> warmup(config.warmup_length);
    for (auto& sample : warmup)
        sample = channel.next().interference;
    SlotPredictor predictor(config, spec, warmup);

    std::vector<TargetAccumulator> acc;
    acc.reserve(config.target_errors.size());
    for (double eps : config.target_errors)
        acc.push_back({fbl::Allocator(config.payload_bits, eps)});

    SlotRecord record;
    record.blocklength.resize(acc.size());
    record.realized_error.resize(acc.size());
    std::uint64_t covered = 0;

    for (std::uint64_t t = 0; t < config.measured_slots; ++t) {
        const auto slot = channel.next();
        const double predicted = predictor.predict(slot.interference);
        const double predicted_sinr = slot.snr / predicted;
        const double actual_sinr = slot.snr / slot.interference;
        if (slot.interference <= predicted)
            ++covered;

        for (std::size_t k = 0; k < acc.size(); ++k) {
            auto& a = acc[k];
            if (predicted_sinr > 0.0) {
                const double r = a.allocator.blocklength(predicted_sinr);
                const double eps = fbl::realized_error(config.payload_bits, r, actual_sinr);
                a.error_sum += eps;
                a.ru_sum += r;
                const double r_genie = a.allocator.blocklength(actual_sinr);
                a.genie_ru_sum += r_genie;
                a.excess_sq_sum += (r - r_genie) * (r - r_genie);
                ++a.feasible;
                record.blocklength[k] = r;
                record.realized_error[k] = eps;
            } else {
                a.error_sum += 1.0;
                ++a.infeasible;
                record.blocklength[k] = 0.0;
                record.realized_error[k] = 1.0;
            }
        }

        if (observer) {
            record.t = t;
            record.actual_interference = slot.interference;
            record.predicted_interference = predicted;
            record.snr = slot.snr;
            record.predicted_sinr = predicted_sinr;
            record.actual_sinr = actual_sinr;
            observer(record);
        }

        predictor.observe(slot.interference);
    }

    RunMetrics metrics;
    metrics.predictor = spec;
    metrics.slots = config.measured_slots;
    metrics.seed = config.seed;
    metrics.realization_checksum = channel.checksum();
    const auto slots = static_cast<double>(config.measured_slots);
    metrics.quantile_coverage = static_cast<double>(covered) / slots;
    for (const auto& a : acc) {
        TargetMetrics tm;
        tm.target_error = a.allocator.target_error();
        tm.achieved_outage = a.error_sum / slots;
        tm.infeasible_slots = a.infeasible;
        if (a.feasible > 0) {
            tm.mean_ru = a.ru_sum / static_cast<double>(a.feasible);
            const auto n = static_cast<double>(a.feasible);
            tm.genie_mean_ru = a.genie_ru_sum / n;
            if (a.feasible > 1) {
                const double excess = tm.mean_ru - tm.genie_mean_ru;
                const double variance = std::max(0.0, (a.excess_sq_sum / n - excess * excess) * n / (n - 1.0));
                tm.ru_excess_stderr = std::sqrt(variance / n);
            }
        }
        metrics.targets.push_back(tm);
    }
    return metrics;
}

std::vector<RunMetrics> compare_predictors(const ScenarioConfig& config, std::span<const PredictorSpec> specs)
{
    config.validate();
    std::vector<std::future<RunMetrics>> jobs;
    jobs.reserve(specs.size());
    for (const auto& spec : specs)
        jobs.push_back(std::async(std::launch::async, [&config, spec] { return run_predictor(config, spec); }));

    std::vector<RunMetrics> results;
    results.reserve(jobs.size());
    for (auto& job : jobs)
        results.push_back(job.get());
    return results;
}

std::vector<RunMetrics> sweep_eta(const ScenarioConfig& config, std::span<const double> etas)
{
    std::vector<PredictorSpec> specs;
    specs.reserve(etas.size());
    for (double eta : etas)
        specs.push_back({PredictorKind::dtmc, eta});
    return compare_predictors(config, specs);
}

} // namespace ipred
