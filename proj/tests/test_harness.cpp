#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "codelsh/harness.hpp"

using namespace codelsh;

TEST_CASE("zero noise always collides on round 1") {
    ExperimentConfig cfg{hamming_code(3), 32, 0.0, 500, 42, 0};
    ExperimentReport rep = run_experiment(cfg);
    CHECK(rep.empirical_p1 == 1.0);
    CHECK(rep.predicted_p1 == 1.0);
    CHECK(rep.censored == 0);
    CHECK(rep.rounds_histogram[0] == 500);
}

TEST_CASE("identical config and seed give byte-identical reports") {
    ExperimentConfig cfg{golay_code(), 64, 0.25, 300, 777, 0};
    CHECK(run_experiment(cfg).to_json() == run_experiment(cfg).to_json());
    ExperimentConfig other = cfg;
    other.seed = 778;
    CHECK(run_experiment(cfg).to_json() != run_experiment(other).to_json());
}

TEST_CASE("planted-pair collisions track the analytic probability") {
    ExperimentConfig cfg{golay_code(), 16, 0.3, 20000, 4242, 0};
    ExperimentReport rep = run_experiment(cfg);
    double p = rep.predicted_p1;
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(cfg.trials));
    CHECK(std::abs(rep.empirical_p1 - p) <= 4 * sigma);
    // retry bookkeeping is complete
    std::uint64_t accounted = rep.censored;
    for (auto h : rep.rounds_histogram) accounted += h;
    CHECK(accounted == cfg.trials);
    CHECK(rep.retry_cap == static_cast<std::uint32_t>(std::ceil(4.0 / p)));
}

TEST_CASE("bucket sizes match M / 2^k") {
    // golay has k = 12; with M = 2^12 a bucket holds about one point
    ExperimentConfig cfg{golay_code(), 1 << 12, 0.3, 10000, 9, 0};
    ExperimentReport rep = run_experiment(cfg);
    CHECK(rep.predicted_bucket == 1.0);
    CHECK(std::abs(rep.empirical_bucket_mean - 1.0) <= 0.05);
}

TEST_CASE("rho estimates") {
    // projection: analytic rho = -lg(1 - gamma)
    ExperimentConfig proj{projection_code(16, 8), 16, 0.2, 4000, 5, 0};
    ExperimentReport rep = run_experiment(proj);
    CHECK(rep.rho_analytic == doctest::Approx(-std::log2(0.8)).epsilon(1e-12));
    CHECK(std::abs(rep.rho_estimate - rep.rho_analytic) <= 0.05);

    // golay beats 12-projection above the crossover
    ExperimentConfig gol{golay_code(), 16, 0.3, 20000, 4242, 0};
    ExperimentReport grep = run_experiment(gol);
    double rho_proj = -std::log2(0.7);
    CHECK(grep.rho_analytic < rho_proj);
    CHECK(estimate_rho(gol) == doctest::Approx(grep.rho_estimate));
    CHECK(grep.rho_estimate < rho_proj);
}

TEST_CASE("censoring at the retry cap") {
    ExperimentConfig cfg{hamming_code(3), 8, 0.2, 4000, 1, 2};  // cap after one retry
    ExperimentReport rep = run_experiment(cfg);
    CHECK(rep.retry_cap == 2);
    CHECK(rep.censored > 0);  // weight >= 3 errors can never collide for this code
    CHECK(rep.rounds_histogram.size() == 2);
}

TEST_CASE("per-trial CSV stream") {
    ExperimentConfig cfg{hamming_code(3), 8, 0.1, 25, 3, 0};
    std::ostringstream out;
    write_trials_csv(cfg, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "trial,round1_collision,bucket_count,success_round");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 25);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(run_experiment({hamming_code(3), 1, 0.1, 10, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment({hamming_code(3), 8, 0.1, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment({hamming_code(3), 8, 0.6, 10, 0, 0}), std::domain_error);
}
