#pragma once

// Crossover solvers (where one hash's collision probability overtakes
// another's) and the asymptotic random-code bounds. Crossover brackets are
// certified by exact integer-polynomial sign evaluation in
// zeta = gamma/(1-gamma).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codelsh/distdist.hpp"

namespace codelsh {

struct CrossoverPoint {
    double gamma = 0.0;        ///< midpoint of the certified bracket
    double bracket_lo = 0.0;   ///< P difference has opposite exact signs at the ends
    double bracket_hi = 0.0;
};

struct CrossoverReport {
    std::string lhs, rhs;
    std::vector<CrossoverPoint> points;  ///< empty = "none"; multiple = several regime boundaries

    bool none() const { return points.empty(); }
};

/// All gamma in (1e-8, 1/2 - 1e-8) where P_A(gamma) - P_B(gamma) changes
/// sign. Grid scan at resolution 1e-3, then bisection to 1e-8 with exact
/// rational sign evaluation. The two distributions may live in different
/// dimensions (the comparison multiplies through by (1+zeta)^(N-n)).
CrossoverReport crossover(const DistDist& a, const DistDist& b,
                          std::string lhs_label = "lhs", std::string rhs_label = "rhs");

/// Exact sign of P_A - P_B at gamma = num/den (0 < num < den/2).
int collision_probability_sign(const DistDist& a, const DistDist& b,
                               std::int64_t num, std::int64_t den);

struct HammingAlpha {
    double alpha = 0.0;       ///< the unique root of f_m in zeta-space, (0,1)
    double gamma = 0.0;       ///< alpha/(1+alpha): the crossover error probability
    double bracket_lo = 0.0;  ///< certified zeta bracket around alpha
    double bracket_hi = 0.0;
};

/// f_m(zeta) = 2^m (1+zeta)^m - (2^m + 2(2^m-1) zeta + (2^m-1)(2^m-2) zeta^2):
/// the cube-minus-sphere distribution difference in dimension 2^m - 1.
std::vector<std::int64_t> hamming_difference_coeffs(unsigned m);

/// The unique root of f_m in (0,1), bisected to 1e-10. Requires m >= 4.
HammingAlpha hamming_alpha(unsigned m);

/// ((m-2)/2^m, m/2^m): the interval the crossover error probability is
/// checked against for m >= 5.
std::pair<double, double> hamming_alpha_interval(unsigned m);

/// H(delta) = -delta lg delta - (1-delta) lg(1-delta), H(0) = H(1) = 0.
double binary_entropy(double delta);

/// Positive root of (K^2-1) e^2 + 2 e - 4 delta (1-delta) = 0, K = (1-gamma)/gamma;
/// the maximizer of the random-code exponent bound. 0 < gamma, delta < 1/2.
double epsilon_max(double gamma, double delta);

/// D(gamma, delta, eps): lower bound on E^projection - E^random-code at rate
/// R = 1 - H(delta). Requires eps <= 2*delta.
double exponent_gap(double gamma, double delta, double eps);

/// gamma* = (4 d (1-d) - H^2) / (2 (H - H^2)): stationary point of
/// gamma -> D(gamma, delta, eps_max).
double critical_gamma(double delta);

/// sum_{i=0}^{d} C(d,i) C(n-d,i) gamma^{2i} (1-gamma)^{n-2i}, d = floor(delta n);
/// log-domain accumulation. A lower bound on the random-code collision
/// probability.
double random_code_collision_lower_bound(unsigned n, double delta, double gamma);

}  // namespace codelsh
