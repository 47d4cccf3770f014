#include <doctest.h>

#include <cmath>
#include <random>

#include "codelsh/analysis.hpp"
#include "codelsh/codes.hpp"

using namespace codelsh;

TEST_CASE("crossover: Hamming m=4 against 11-projection") {
    auto sphere = hamming_code(4).zero_set_distribution();
    auto cube = subcube_distribution(15, 4);
    auto rep = crossover(sphere, cube);
    REQUIRE(rep.points.size() == 1);
    CHECK(std::abs(rep.points[0].gamma - 0.2826) <= 1e-4);
    CHECK(rep.points[0].bracket_hi - rep.points[0].bracket_lo <= 1e-6);
}

TEST_CASE("crossover: Golay against P_{23,12}") {
    auto rep = crossover(golay_code().zero_set_distribution(), subcube_distribution(23, 11));
    REQUIRE(rep.points.size() == 1);
    CHECK(std::abs(rep.points[0].gamma - 0.2555) <= 1e-4);
}

TEST_CASE("crossover: a set against itself is none") {
    auto dd = hamming_code(3).zero_set_distribution();
    CHECK(crossover(dd, dd).none());
}

TEST_CASE("crossover across different dimensions") {
    // the subcube of P_{46,12} has the same collision law as P_{23,12}
    auto rep = crossover(golay_code().zero_set_distribution(), subcube_distribution(46, 34));
    REQUIRE(rep.points.size() == 1);
    CHECK(std::abs(rep.points[0].gamma - 0.2555) <= 1e-4);
}

TEST_CASE("crossover reports every sign change") {
    // difference polynomial -100 z^4 + 180 z^3 - 92 z^2 + 12 z vanishes at
    // z = 0.2 and z = 0.6, i.e. gamma = 1/6 and 3/8
    DistDist a(4, 30, {30, 312, 92, 266, 200});
    DistDist b(4, 30, {30, 300, 184, 86, 300});
    auto rep = crossover(a, b);
    REQUIRE(rep.points.size() == 2);
    CHECK(std::abs(rep.points[0].gamma - 1.0 / 6.0) <= 1e-7);
    CHECK(std::abs(rep.points[1].gamma - 0.375) <= 1e-7);
}

TEST_CASE("exact sign evaluation") {
    DistDist a(4, 30, {30, 312, 92, 266, 200});
    DistDist b(4, 30, {30, 300, 184, 86, 300});
    CHECK(collision_probability_sign(a, b, 1, 10) > 0);   // gamma = 0.1 < 1/6
    CHECK(collision_probability_sign(a, b, 1, 4) < 0);    // 1/6 < 0.25 < 3/8
    CHECK(collision_probability_sign(a, b, 2, 5) > 0);    // 0.4 > 3/8
    CHECK(collision_probability_sign(a, b, 1, 6) == 0);   // exactly on the root
    CHECK_THROWS_AS(collision_probability_sign(a, b, 3, 4), std::domain_error);
}

TEST_CASE("hamming alpha roots") {
    // coefficients: exactly one negative coefficient, at zeta^2
    for (unsigned m = 4; m <= 10; ++m) {
        auto c = hamming_difference_coeffs(m);
        CHECK(c[0] == 0);
        CHECK(c[1] > 0);
        CHECK(c[2] < 0);
        for (unsigned i = 3; i <= m; ++i) CHECK(c[i] > 0);
        // f_m(1) = 0: the known root
        std::int64_t at_one = 0;
        for (auto v : c) at_one += v;
        CHECK(at_one == 0);
    }

    // the gamma values are Table I's crossover probabilities
    CHECK(std::abs(hamming_alpha(4).gamma - 0.2826) <= 1e-4);
    CHECK(std::abs(hamming_alpha(5).gamma - 0.1518) <= 1e-4);
    CHECK(std::abs(hamming_alpha(6).gamma - 0.0838) <= 1e-4);
    CHECK(std::abs(hamming_alpha(7).gamma - 0.0468) <= 1e-4);

    // crossover gamma lies in ((m-2)/2^m, m/2^m) for m >= 5
    for (unsigned m = 5; m <= 7; ++m) {
        auto a = hamming_alpha(m);
        auto [lo, hi] = hamming_alpha_interval(m);
        CHECK(a.gamma > lo);
        CHECK(a.gamma < hi);
        CHECK(a.bracket_hi - a.bracket_lo <= 1e-9);
        CHECK(a.alpha / (1 + a.alpha) == doctest::Approx(a.gamma));
    }

    CHECK_THROWS_AS(hamming_alpha(3), std::invalid_argument);
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(std::abs(binary_entropy(0.11) - 0.499916) <= 1e-6);
    CHECK(binary_entropy(0.25) == doctest::Approx(binary_entropy(0.75)).epsilon(1e-14));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("epsilon_max") {
    // gamma -> 1/2 degenerates to 2 delta (1-delta)
    for (double delta : {0.1, 0.3, 0.45})
        CHECK(epsilon_max(0.4999999, delta) == doctest::Approx(2 * delta * (1 - delta)).epsilon(1e-5));

    // delta = 0.1, gamma = 0.25: positive root of 8 e^2 + 2 e - 0.36
    double em = epsilon_max(0.25, 0.1);
    CHECK(em == doctest::Approx(0.1212214450449026).epsilon(1e-12));
    CHECK(8 * em * em + 2 * em - 0.36 == doctest::Approx(0.0).epsilon(0).scale(1e-12));
    // substitute into the defining equation (2d-e)(2(1-d)-e)/e^2 = ((1-g)/g)^2
    double lhs = (0.2 - em) * (1.8 - em) / (em * em);
    CHECK(lhs == doctest::Approx(9.0).epsilon(1e-10));

    // increasing in gamma for fixed delta
    for (int di = 1; di < 100; ++di) {
        double delta = 0.005 * di;
        if (delta >= 0.5) break;
        double prev = 0.0;
        for (int gi = 1; gi <= 100; ++gi) {
            double gamma = 0.005 * gi - 0.0025;
            double v = epsilon_max(gamma, delta);
            CHECK(v > prev);
            CHECK(v < 0.5);
            CHECK(v < 2 * delta);
            prev = v;
        }
    }

    CHECK_THROWS_AS(epsilon_max(0.5, 0.1), std::domain_error);
    CHECK_THROWS_AS(epsilon_max(0.1, 0.0), std::domain_error);
}

TEST_CASE("exponent gap positivity, stationarity, limits") {
    // D > 0 at eps_max over a coarse grid (the acceptance suite runs 50x50)
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            double gamma = 0.02 + (0.48 - 0.02) * i / 19.0;
            double delta = 0.02 + (0.48 - 0.02) * j / 19.0;
            CHECK(exponent_gap(gamma, delta, epsilon_max(gamma, delta)) > 0.0);
        }
    }
    // stationary in eps at eps_max
    double em = epsilon_max(0.3, 0.2);
    double h = 1e-6;
    double deriv = (exponent_gap(0.3, 0.2, em + h) - exponent_gap(0.3, 0.2, em - h)) / (2 * h);
    CHECK(std::abs(deriv) <= 1e-4);

    // vanishing limits at both ends of gamma
    CHECK(std::abs(exponent_gap(1e-4, 0.25, epsilon_max(1e-4, 0.25))) < 1e-2);
    CHECK(std::abs(exponent_gap(0.5 - 1e-4, 0.25, epsilon_max(0.5 - 1e-4, 0.25))) < 1e-2);

    CHECK_THROWS_AS(exponent_gap(0.3, 0.1, 0.25), std::domain_error);  // eps > 2 delta
}

TEST_CASE("critical gamma") {
    double cg = critical_gamma(0.11);
    CHECK(cg == doctest::Approx(0.2833680775506).epsilon(1e-10));

    // consistency: eps_max(g*, d) = g* H(d)
    for (double delta : {0.05, 0.11, 0.2, 0.35}) {
        double g = critical_gamma(delta);
        CHECK(g > 0.0);
        CHECK(g < 0.5);
        CHECK(epsilon_max(g, delta) == doctest::Approx(g * binary_entropy(delta)).epsilon(1e-8));
        // argmax of gamma -> D(gamma, delta, eps_max)
        double at_star = exponent_gap(g, delta, epsilon_max(g, delta));
        for (int gi = 1; gi < 50; ++gi) {
            double gamma = 0.01 * gi;
            if (gamma >= 0.5) break;
            CHECK(at_star >= exponent_gap(gamma, delta, epsilon_max(gamma, delta)) - 1e-12);
        }
    }
}

TEST_CASE("random-code collision lower bound") {
    CHECK(random_code_collision_lower_bound(100, 0.11, 0.0) == 1.0);
    // d = 0: single term (1-gamma)^n
    CHECK(random_code_collision_lower_bound(50, 0.01, 0.2) ==
          doctest::Approx(std::pow(0.8, 50)).epsilon(1e-12));

    // independent route: exact binomials + long-double powers
    for (unsigned n : {20u, 46u, 55u}) {
        double delta = 0.11, gamma = 0.1;
        unsigned d = static_cast<unsigned>(delta * n);
        long double total = 0.0L;
        auto binom = [](unsigned top, unsigned bot) {
            long double r = 1.0L;
            for (unsigned i = 0; i < bot; ++i) r = r * (top - i) / (i + 1);
            return r;
        };
        for (unsigned i = 0; i <= d; ++i)
            total += binom(d, i) * binom(n - d, i) * powl(0.1L, 2 * i) * powl(0.9L, n - 2 * i);
        CHECK(random_code_collision_lower_bound(n, delta, gamma) ==
              doctest::Approx(static_cast<double>(total)).epsilon(1e-10));
    }

    // the bound overtakes projection at the Gilbert-Varshamov rate once n is
    // large enough to absorb the polynomial factors (n = 200 suffices at
    // delta = 0.11, gamma = 0.1; n = 46 does not)
    double delta = 0.11, gamma = 0.1;
    double rate = 1 - binary_entropy(delta);
    auto projection = [&](unsigned n) { return std::pow(1 - gamma, n * rate); };
    CHECK(random_code_collision_lower_bound(200, delta, gamma) > projection(200));
    CHECK(random_code_collision_lower_bound(400, delta, gamma) > projection(400));
    // and the exponent gap keeps widening
    double r200 = random_code_collision_lower_bound(200, delta, gamma) / projection(200);
    double r400 = random_code_collision_lower_bound(400, delta, gamma) / projection(400);
    CHECK(r400 > r200);
}
