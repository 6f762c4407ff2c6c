// Copyright 2026 the ssi authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssi::cli {

struct RunFlags {
    std::string model;
    std::string algo = "ssi";  // ssi | pf
    int particles = 1;
    int steps = 500;
    std::uint64_t seed = 0;
    std::string out;    // CSV path; stdout summary only when empty
    bool trace = false; // print the swap/sample log
    std::string dot;    // dump particle-0 state graph after step 1
};

struct SweepFlags {
    std::string model;
    std::string algo = "ssi";
    std::vector<int> particle_counts;
    int steps = 500;
    std::uint64_t seed = 0;  // base seed; runs use seed .. seed+seeds-1
    int seeds = 1;
    std::string out;
};

inline constexpr const char* kRunCsvHeader =
    "step,estimate_mean,estimate_var,truth,sq_error,ess,draw_count_cum,"
    "step_latency_ns";

inline constexpr const char* kSweepCsvHeader =
    "model,algo,particles,seeds,mse_median,mse_q10,mse_q90,"
    "latency_ns_median,latency_ns_q10,latency_ns_q90";

/// Runs one benchmark configuration, writing a per-step CSV. Returns the
/// process exit code.
int cmd_run(const RunFlags& flags);

/// Runs a particle-count sweep over several seeds and reports quantiles of
/// the final-horizon MSE and per-step latency.
int cmd_sweep(const SweepFlags& flags);

}  // namespace ssi::cli
