#include "codelsh/distdist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace codelsh {

PointSet::PointSet(unsigned n, std::vector<Word> elements) : n_(n), elems_(std::move(elements)) {
    if (elems_.empty()) throw std::invalid_argument("point set must be nonempty");
    for (const auto& w : elems_)
        if (w.dim() != n_) throw std::invalid_argument("point set elements must share the dimension");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

PointSet PointSet::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("set literal must look like \"n:hex,hex,...\"");
    std::string head(text.substr(0, colon));
    std::vector<Word> elems;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto tok = rest.substr(0, comma);
        elems.push_back(Word::parse(head + ":" + std::string(tok)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (elems.empty()) throw std::invalid_argument("set literal has no elements");
    unsigned n = elems.front().dim();
    return PointSet(n, std::move(elems));
}

bool PointSet::contains(const Word& w) const {
    return std::binary_search(elems_.begin(), elems_.end(), w);
}

std::string PointSet::to_string() const {
    std::string out = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        auto s = elems_[i].to_string();
        out += s.substr(s.find(':') + 1);
        if (i + 1 < elems_.size()) out += ",";
    }
    return out;
}

DistDist::DistDist(unsigned n_, std::int64_t size_, std::vector<std::int64_t> coeffs_)
    : n(n_), size(size_), coeffs(std::move(coeffs_)) {
    if (coeffs.size() != n + 1) throw std::invalid_argument("ddf needs n+1 coefficients");
    if (coeffs[0] != size) throw std::invalid_argument("ddf must have A_0 = |S|");
    std::int64_t total = 0;
    for (auto c : coeffs) {
        if (c < 0) throw std::invalid_argument("ddf coefficients must be nonnegative");
        total += c;
    }
    if (total != size * size) throw std::invalid_argument("ddf coefficients must sum to |S|^2");
}

double DistDist::eval_zeta(double zeta) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * zeta + static_cast<double>(*it);
    return v;
}

std::string DistDist::to_poly_string() const {
    std::string out;
    for (unsigned i = 0; i <= n; ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += std::to_string(coeffs[i]);
        else {
            if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string DistDist::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["size"] = size;
    j["coeffs"] = coeffs;
    return j.dump();
}

DistDist distance_distribution(const PointSet& s) {
    const auto& pts = s.elements();
    std::vector<std::int64_t> a(s.dim() + 1, 0);
    a[0] = static_cast<std::int64_t>(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            a[hamming_distance(pts[i], pts[j])] += 2;
    return DistDist(s.dim(), static_cast<std::int64_t>(pts.size()), std::move(a));
}

double collision_probability(const DistDist& dd, double gamma) {
    if (!(gamma >= 0.0 && gamma < 0.5)) throw std::domain_error("error probability must lie in [0, 1/2)");
    if (gamma == 0.0) return 1.0;
    if (dd.n <= 512) {
        double zeta = gamma / (1.0 - gamma);
        return std::pow(1.0 - gamma, static_cast<int>(dd.n)) * dd.eval_zeta(zeta) /
               static_cast<double>(dd.size);
    }
    // log-domain: sum_i A_i exp(i ln g + (n-i) ln(1-g))
    double lg = std::log(gamma), l1g = std::log1p(-gamma);
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> terms;
    terms.reserve(dd.coeffs.size());
    for (unsigned i = 0; i <= dd.n; ++i) {
        if (dd.coeffs[i] == 0) continue;
        double t = std::log(static_cast<double>(dd.coeffs[i])) + i * lg + (dd.n - i) * l1g;
        terms.push_back(t);
        mx = std::max(mx, t);
    }
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - mx);
    return std::exp(mx) * acc / static_cast<double>(dd.size);
}

double collision_probability(const PointSet& s, double gamma) {
    return collision_probability(distance_distribution(s), gamma);
}

double error_exponent(double p, unsigned n) {
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in (0, 1]");
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    return -std::log2(p) / static_cast<double>(n);
}

double rho_exponent(double p1, double p2) {
    if (!(p1 > 0.0 && p1 < 1.0) || !(p2 > 0.0 && p2 < 1.0))
        throw std::domain_error("rho_exponent needs probabilities in (0, 1)");
    return std::log2(p1) / std::log2(p2);
}

std::int64_t distance_sum(const DistDist& dd) {
    std::int64_t twice = 0;
    for (unsigned i = 0; i <= dd.n; ++i) twice += static_cast<std::int64_t>(i) * dd.coeffs[i];
    return twice / 2;
}

std::int64_t distance_sum(const PointSet& s) {
    return distance_sum(distance_distribution(s));
}

DistDist subcube_distribution(unsigned n, unsigned j) {
    if (j > n) throw std::invalid_argument("subcube dimension exceeds n");
    if (j >= 31) throw std::invalid_argument("subcube too large to tabulate");
    std::int64_t size = std::int64_t{1} << j;
    std::vector<std::int64_t> a(n + 1, 0);
    std::int64_t binom = 1;
    for (unsigned i = 0; i <= j; ++i) {
        a[i] = binom * size;
        binom = binom * (j - i) / (i + 1);
    }
    return DistDist(n, size, std::move(a));
}

PointSet generalized_one_sphere(unsigned n, std::size_t s) {
    if (s < 1 || s > static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("1-sphere with s points needs n >= s - 1");
    std::vector<Word> elems;
    elems.push_back(Word(n));
    for (std::size_t t = 1; t < s; ++t) {
        Word e(n);
        e.set_coord(n + 1 - static_cast<unsigned>(t), true);
        elems.push_back(e);
    }
    return PointSet(n, std::move(elems));
}

}  // namespace codelsh
