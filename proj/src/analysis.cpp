#include "codelsh/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace codelsh {

namespace {

using boost::multiprecision::cpp_int;

// Integer polynomial in zeta whose sign matches sign(P_A - P_B):
//   s_B (1+zeta)^(N-n_A) A(zeta) - s_A (1+zeta)^(N-n_B) B(zeta),  N = max(n_A, n_B).
std::vector<cpp_int> difference_poly(const DistDist& a, const DistDist& b) {
    unsigned big_n = std::max(a.n, b.n);
    auto lift = [&](const DistDist& d, std::int64_t scale) {
        std::vector<cpp_int> poly(d.coeffs.size());
        for (std::size_t i = 0; i < d.coeffs.size(); ++i) poly[i] = cpp_int(d.coeffs[i]) * scale;
        for (unsigned rep = 0; rep < big_n - d.n; ++rep) {  // multiply by (1+zeta)
            poly.push_back(0);
            for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] += poly[i - 1];
        }
        return poly;
    };
    auto pa = lift(a, b.size);
    auto pb = lift(b, a.size);
    std::vector<cpp_int> diff(big_n + 1);
    for (std::size_t i = 0; i <= big_n; ++i) diff[i] = pa[i] - pb[i];
    return diff;
}

// sign of poly(num/den) for den > num > 0
int poly_sign_at_rational(const std::vector<cpp_int>& poly, std::int64_t num, std::int64_t den) {
    cpp_int value = 0;
    cpp_int den_pow = 1;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        value = value * num + *it * den_pow;
        den_pow *= den;
    }
    // one den_pow factor too many was accumulated on the last step; sign unaffected
    return value == 0 ? 0 : (value > 0 ? 1 : -1);
}

struct Rational {
    std::int64_t num = 0, den = 1;  // gamma = num/den
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// zeta = gamma/(1-gamma) = num/(den-num)
int sign_at_gamma(const std::vector<cpp_int>& diff, const Rational& g) {
    return poly_sign_at_rational(diff, g.num, g.den - g.num);
}

}  // namespace

int collision_probability_sign(const DistDist& a, const DistDist& b, std::int64_t num, std::int64_t den) {
    if (num <= 0 || 2 * num >= den) throw std::domain_error("gamma = num/den must lie in (0, 1/2)");
    auto diff = difference_poly(a, b);
    return sign_at_gamma(diff, Rational{num, den});
}

CrossoverReport crossover(const DistDist& a, const DistDist& b, std::string lhs_label,
                          std::string rhs_label) {
    CrossoverReport report;
    report.lhs = std::move(lhs_label);
    report.rhs = std::move(rhs_label);

    auto diff = difference_poly(a, b);
    if (std::all_of(diff.begin(), diff.end(), [](const cpp_int& c) { return c == 0; }))
        return report;  // identical probability functions: none

    // scan at gamma = j/1000; doubles are plenty to spot the sign pattern,
    // ambiguous points fall back to the exact sign
    constexpr std::int64_t kGrid = 1000;
    std::vector<int> sign(kGrid / 2, 0);
    for (std::int64_t j = 1; j < kGrid / 2; ++j) {
        double gamma = static_cast<double>(j) / kGrid;
        double pa = collision_probability(a, gamma);
        double pb = collision_probability(b, gamma);
        double d = pa - pb;
        double scale = std::max(pa, pb);
        if (std::abs(d) <= 1e-12 * scale)
            sign[j] = sign_at_gamma(diff, Rational{j, kGrid});
        else
            sign[j] = d > 0 ? 1 : -1;
    }

    std::int64_t prev_j = 0;
    int prev_sign = 0;
    for (std::int64_t j = 1; j < kGrid / 2; ++j) {
        if (sign[j] == 0) continue;
        if (prev_sign != 0 && sign[j] != prev_sign) {
            // certify and bisect in (prev_j/1000, j/1000); denominators stay dyadic
            Rational lo{prev_j << 24, kGrid << 24}, hi{j << 24, kGrid << 24};
            int slo = sign_at_gamma(diff, lo);
            int shi = sign_at_gamma(diff, hi);
            if (slo == 0) slo = -shi;  // exact root at a grid point: shrink from the other side
            if (slo != shi && shi != 0) {
                while (static_cast<double>(hi.num - lo.num) / static_cast<double>(lo.den) > 1e-8) {
                    Rational mid{(lo.num + hi.num) / 2, lo.den};
                    int sm = sign_at_gamma(diff, mid);
                    if (sm == slo || sm == 0) lo = mid;
                    else hi = mid;
                }
                CrossoverPoint pt;
                pt.bracket_lo = lo.value();
                pt.bracket_hi = hi.value();
                pt.gamma = 0.5 * (pt.bracket_lo + pt.bracket_hi);
                report.points.push_back(pt);
            }
        }
        prev_sign = sign[j];
        prev_j = j;
    }
    return report;
}

std::vector<std::int64_t> hamming_difference_coeffs(unsigned m) {
    if (m < 2 || m > 16) throw std::invalid_argument("hamming_difference_coeffs needs 2 <= m <= 16");
    std::vector<std::int64_t> c(m + 1, 0);
    std::int64_t pow2m = std::int64_t{1} << m;
    std::int64_t binom = 1;
    for (unsigned i = 0; i <= m; ++i) {
        c[i] = pow2m * binom;
        binom = binom * static_cast<std::int64_t>(m - i) / static_cast<std::int64_t>(i + 1);
    }
    c[0] -= pow2m;
    c[1] -= 2 * (pow2m - 1);
    c[2] -= (pow2m - 1) * (pow2m - 2);
    return c;
}

HammingAlpha hamming_alpha(unsigned m) {
    if (m < 4) throw std::invalid_argument("hamming_alpha requires m >= 4");
    auto c = hamming_difference_coeffs(m);
    auto eval = [&](double z) {
        double v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + static_cast<double>(*it);
        return v;
    };
    // unique interior root: f_m > 0 near 0, < 0 just below the known root at 1
    double lo = 0.0, hi = 0.0;
    double prev_z = 1e-9, prev_v = eval(prev_z);
    for (int j = 1; j < 100000; ++j) {
        double z = static_cast<double>(j) / 100000.0;
        double v = eval(z);
        if ((v > 0) != (prev_v > 0)) {
            lo = prev_z;
            hi = z;
            break;
        }
        prev_z = z;
        prev_v = v;
    }
    if (hi == 0.0) throw std::logic_error("no interior sign change for f_m");
    bool lo_pos = eval(lo) > 0;
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((eval(mid) > 0) == lo_pos) lo = mid;
        else hi = mid;
    }
    HammingAlpha out;
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.alpha = 0.5 * (lo + hi);
    out.gamma = out.alpha / (1.0 + out.alpha);
    return out;
}

std::pair<double, double> hamming_alpha_interval(unsigned m) {
    double pow2m = std::ldexp(1.0, static_cast<int>(m));
    return {(m - 2) / pow2m, m / pow2m};
}

double binary_entropy(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw std::domain_error("entropy argument must lie in [0, 1]");
    if (delta == 0.0 || delta == 1.0) return 0.0;
    return -delta * std::log2(delta) - (1.0 - delta) * std::log2(1.0 - delta);
}

double epsilon_max(double gamma, double delta) {
    if (!(gamma > 0.0 && gamma < 0.5)) throw std::domain_error("gamma must lie in (0, 1/2)");
    if (!(delta > 0.0 && delta < 0.5)) throw std::domain_error("delta must lie in (0, 1/2)");
    double k = (1.0 - gamma) / gamma;
    double a = k * k - 1.0;
    double c = 4.0 * delta * (1.0 - delta);
    // rationalized positive root; smooth through a -> 0 (gamma -> 1/2)
    return c / (1.0 + std::sqrt(1.0 + a * c));
}

double exponent_gap(double gamma, double delta, double eps) {
    if (!(gamma > 0.0 && gamma < 0.5)) throw std::domain_error("gamma must lie in (0, 1/2)");
    if (!(delta > 0.0 && delta < 0.5)) throw std::domain_error("delta must lie in (0, 1/2)");
    if (!(eps > 0.0 && eps <= 0.5)) throw std::domain_error("eps must lie in (0, 1/2]");
    if (eps > 2.0 * delta) throw std::domain_error("eps must not exceed 2*delta");
    return eps * std::log2(gamma) + (1.0 - eps) * std::log2(1.0 - gamma) +
           delta * binary_entropy(eps / (2.0 * delta)) +
           (1.0 - delta) * binary_entropy(eps / (2.0 * (1.0 - delta))) -
           (1.0 - binary_entropy(delta)) * std::log2(1.0 - gamma);
}

double critical_gamma(double delta) {
    if (!(delta > 0.0 && delta < 0.5)) throw std::domain_error("delta must lie in (0, 1/2)");
    double h = binary_entropy(delta);
    return (4.0 * delta * (1.0 - delta) - h * h) / (2.0 * (h - h * h));
}

double random_code_collision_lower_bound(unsigned n, double delta, double gamma) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (!(delta >= 0.0 && delta <= 0.5)) throw std::domain_error("delta must lie in [0, 1/2]");
    if (!(gamma >= 0.0 && gamma < 0.5)) throw std::domain_error("gamma must lie in [0, 1/2)");
    unsigned d = static_cast<unsigned>(delta * n);
    if (gamma == 0.0) return 1.0;
    auto lg_binom = [](unsigned top, unsigned bot) {
        return std::lgamma(top + 1.0) - std::lgamma(bot + 1.0) - std::lgamma(top - bot + 1.0);
    };
    double lg = std::log(gamma), l1g = std::log1p(-gamma);
    std::vector<double> terms;
    double mx = -std::numeric_limits<double>::infinity();
    for (unsigned i = 0; i <= d; ++i) {
        double t = lg_binom(d, i) + lg_binom(n - d, i) + 2.0 * i * lg + (n - 2.0 * i) * l1g;
        terms.push_back(t);
        mx = std::max(mx, t);
    }
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - mx);
    return std::exp(mx) * acc;
}

}  // namespace codelsh
