#include "codelsh/harness.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "codelsh/distdist.hpp"

namespace codelsh {

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(seed + 0x9e3779b97f4a7c15ull * (trial + 1)));
}

std::uint64_t uniform_index(std::uint64_t bound, std::mt19937_64& rng) {
    // multiply-shift; bias is < 2^-40 for the dataset sizes in play
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

struct TrialOutcome {
    bool collided_round1 = false;
    std::uint64_t bucket_count = 0;
    std::uint32_t success_round = 0;  // 0 = censored
};

TrialOutcome run_trial(const ExperimentConfig& cfg, std::uint64_t trial, std::uint32_t cap) {
    std::mt19937_64 rng = trial_rng(cfg.seed, trial);
    unsigned n = cfg.code.length();

    std::uint64_t planted = uniform_index(cfg.M, rng);
    Word x(n);
    TrialOutcome out;

    // round 1: stream the dataset, bucket-by-comparison against the query label
    std::vector<Word> deferred;  // labels can't be compared before y is known; store points' labels
    deferred.reserve(cfg.M);
    for (std::uint64_t i = 0; i < cfg.M; ++i) {
        Word p = sample_uniform(n, rng);
        if (i == planted) x = p;
        deferred.push_back(cfg.code.hash_label(p));
    }
    Word e = sample_error(n, cfg.gamma, rng);
    Word y = x ^ e;
    Word label_y = cfg.code.hash_label(y);
    for (const auto& lp : deferred)
        if (lp == label_y) ++out.bucket_count;
    out.collided_round1 = (deferred[planted] == label_y);

    if (out.collided_round1) {
        out.success_round = 1;
        return out;
    }
    for (std::uint32_t round = 2; round <= cap; ++round) {
        Word shift = sample_uniform(n, rng);
        if (cfg.code.hash_label(x ^ shift) == cfg.code.hash_label(y ^ shift)) {
            out.success_round = round;
            return out;
        }
    }
    return out;  // censored
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.M < 2) throw std::invalid_argument("experiment needs M >= 2");
    if (cfg.trials < 1) throw std::invalid_argument("experiment needs trials >= 1");
    if (!(cfg.gamma >= 0.0 && cfg.gamma < 0.5))
        throw std::domain_error("error probability must lie in [0, 1/2)");

    ExperimentReport rep;
    rep.predicted_p1 = collision_probability(cfg.code.zero_set_distribution(), cfg.gamma);
    rep.predicted_bucket = static_cast<double>(cfg.M) / std::ldexp(1.0, static_cast<int>(cfg.code.dimension()));
    std::uint32_t cap = cfg.max_retries ? cfg.max_retries
                                        : static_cast<std::uint32_t>(std::ceil(4.0 / rep.predicted_p1));
    rep.retry_cap = cap;
    rep.trials = cfg.trials;
    rep.code_label = cfg.code.label();
    rep.M = cfg.M;
    rep.gamma = cfg.gamma;
    rep.seed = cfg.seed;

    std::uint64_t collisions = 0, bucket_total = 0;
    rep.rounds_histogram.assign(cap, 0);
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        TrialOutcome out = run_trial(cfg, trial, cap);
        collisions += out.collided_round1 ? 1 : 0;
        bucket_total += out.bucket_count;
        if (out.success_round == 0) ++rep.censored;
        else ++rep.rounds_histogram[out.success_round - 1];
    }
    rep.empirical_p1 = static_cast<double>(collisions) / static_cast<double>(cfg.trials);
    rep.empirical_bucket_mean = static_cast<double>(bucket_total) / static_cast<double>(cfg.trials);
    if (rep.empirical_p1 > 0.0)
        rep.rho_estimate = std::log2(1.0 / rep.empirical_p1) / static_cast<double>(cfg.code.dimension());
    rep.rho_analytic = error_exponent(rep.predicted_p1, cfg.code.length()) / cfg.code.rate();
    return rep;
}

double estimate_rho(const ExperimentConfig& cfg) {
    ExperimentReport rep = run_experiment(cfg);
    if (rep.empirical_p1 <= 0.0)
        throw std::runtime_error("no round-1 collision observed; increase trials");
    return rep.rho_estimate;
}

void write_trials_csv(const ExperimentConfig& cfg, std::ostream& out) {
    if (cfg.M < 2) throw std::invalid_argument("experiment needs M >= 2");
    double p1 = collision_probability(cfg.code.zero_set_distribution(), cfg.gamma);
    std::uint32_t cap = cfg.max_retries ? cfg.max_retries : static_cast<std::uint32_t>(std::ceil(4.0 / p1));
    out << "trial,round1_collision,bucket_count,success_round\n";
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        TrialOutcome t = run_trial(cfg, trial, cap);
        out << trial << "," << (t.collided_round1 ? 1 : 0) << "," << t.bucket_count << ","
            << t.success_round << "\n";
    }
}

std::string ExperimentReport::to_json() const {
    nlohmann::json j;
    j["empirical_p1"] = empirical_p1;
    j["predicted_p1"] = predicted_p1;
    j["empirical_bucket_mean"] = empirical_bucket_mean;
    j["predicted_bucket"] = predicted_bucket;
    j["rounds_histogram"] = rounds_histogram;
    j["censored"] = censored;
    j["rho_estimate"] = rho_estimate;
    j["rho_analytic"] = rho_analytic;
    j["trials"] = trials;
    j["retry_cap"] = retry_cap;
    j["rng"] = rng_name;
    j["code"] = code_label;
    j["M"] = M;
    j["gamma"] = gamma;
    j["seed"] = seed;
    return j.dump(2);
}

}  // namespace codelsh
