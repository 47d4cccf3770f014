#pragma once

// Monte Carlo validation of the closed-form predictions: plant a noisy
// duplicate among M uniform points, run the hash-with-retry search, and
// compare the measured statistics with the analytic ones.

#include <cstdint>
#include <string>
#include <vector>

#include "codelsh/codes.hpp"

namespace codelsh {

struct ExperimentConfig {
    BlockCode code;
    std::uint64_t M = 2;          ///< dataset size (>= 2)
    double gamma = 0.0;           ///< per-bit duplication error rate
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint32_t max_retries = 0;  ///< 0 = ceil(4 / P^C(gamma))
};

struct ExperimentReport {
    // planted pair, round 1
    double empirical_p1 = 0.0;  ///< fraction of trials where the pair collided on round 1
    double predicted_p1 = 0.0;  ///< P^C(gamma) from the zero-set ddf

    // query bucket, round 1
    double empirical_bucket_mean = 0.0;  ///< mean #dataset points sharing the query's label
    double predicted_bucket = 0.0;       ///< M / 2^k

    // shift-retry rounds: histogram[r-1] = trials that first succeeded on round r
    std::vector<std::uint64_t> rounds_histogram;
    std::uint64_t censored = 0;  ///< trials that hit the retry cap without success

    double rho_estimate = 0.0;  ///< lg(1/p~1) / lg(2^k)
    double rho_analytic = 0.0;  ///< E^C(gamma) / R

    std::uint64_t trials = 0;
    std::uint32_t retry_cap = 0;
    std::string rng_name = "mt19937_64";

    // echo of the config, for reproduction
    std::string code_label;
    std::uint64_t M = 0;
    double gamma = 0.0;
    std::uint64_t seed = 0;

    std::string to_json() const;
};

/// Per trial: draw M uniform points, duplicate one of them through the
/// error channel, hash everything; on a round-1 miss keep rehashing the
/// planted pair under fresh uniform shifts until the cap. Deterministic:
/// trial streams derive from (seed, trial index), so results are
/// independent of scheduling.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Convenience wrapper: the rho estimate of a fresh experiment.
/// Throws std::runtime_error when no round-1 collision was observed.
double estimate_rho(const ExperimentConfig& cfg);

/// One CSV row per trial: trial,round1_collision,bucket_count,success_round.
void write_trials_csv(const ExperimentConfig& cfg, std::ostream& out);

}  // namespace codelsh
