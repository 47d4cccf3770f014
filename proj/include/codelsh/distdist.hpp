#pragma once

// Point sets in F_2^n, their distance distribution functions
// A(S, zeta) = sum_i A_i zeta^i, and the collision-probability /
// error-exponent functionals built on them.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codelsh/word.hpp"

namespace codelsh {

/// A finite, deduplicated subset of F_2^n. Elements are kept sorted by
/// integer encoding.
class PointSet {
public:
    PointSet(unsigned n, std::vector<Word> elements);
    /// Parse "n:hex,hex,...".
    static PointSet parse(std::string_view text);

    unsigned dim() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(const Word& w) const;

    const std::vector<Word>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    std::string to_string() const;

private:
    unsigned n_;
    std::vector<Word> elems_;
};

/// Coefficients (A_0, ..., A_n) of the distance distribution function,
/// counting ordered pairs at each distance. Exact integers; the in-scope
/// materialized sets satisfy |S| <= 2^28, so |S|^2 < 2^63 always fits.
struct DistDist {
    unsigned n = 0;
    std::int64_t size = 0;
    std::vector<std::int64_t> coeffs;  // length n + 1

    DistDist() = default;
    DistDist(unsigned n, std::int64_t size, std::vector<std::int64_t> coeffs);

    /// A(S, zeta) in double precision (Horner).
    double eval_zeta(double zeta) const;

    /// "16+30x+210x^2".
    std::string to_poly_string() const;
    /// {"n":..., "size":..., "coeffs":[...]}
    std::string to_json() const;

    bool operator==(const DistDist& other) const = default;
};

/// O(|S|^2) pairwise loop.
DistDist distance_distribution(const PointSet& s);

/// P_S(gamma) = (1/|S|) sum_i A_i gamma^i (1-gamma)^(n-i). Horner in
/// zeta = gamma/(1-gamma); log-domain accumulation for n > 512.
double collision_probability(const DistDist& dd, double gamma);
double collision_probability(const PointSet& s, double gamma);

/// -(1/n) lg P.
double error_exponent(double p, unsigned n);

/// lg(1/p1) / lg(1/p2).
double rho_exponent(double p1, double p2);

/// d(S) = (1/2) sum_{x,y in S} d(x,y), exact.
std::int64_t distance_sum(const PointSet& s);
std::int64_t distance_sum(const DistDist& dd);

/// ddf of a 2^j-subcube of F_2^n: A_i = C(j, i) 2^j.
DistDist subcube_distribution(unsigned n, unsigned j);

/// The generalized 1-sphere: zero plus the s-1 unit vectors on the last
/// coordinates of F_2^n. Requires s - 1 <= n.
PointSet generalized_one_sphere(unsigned n, std::size_t s);

}  // namespace codelsh
