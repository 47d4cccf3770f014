// Command-line surface: every analysis exposed as a subcommand with
// machine-readable output. No numeric logic lives here; this file only
// parses arguments, calls the library, and formats results.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codelsh/analysis.hpp"
#include "codelsh/codes.hpp"
#include "codelsh/distdist.hpp"
#include "codelsh/harness.hpp"
#include "codelsh/optsets.hpp"

namespace {

using namespace codelsh;

struct GlobalOpts {
    std::string format = "table";
    int precision = 6;
};

std::string fmt_float(double v, const GlobalOpts& g) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", g.precision, v);
    return buf;
}

std::string fmt_gamma4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// code spec or set literal ("n:hex,...") -> labelled distance distribution
struct NamedDdf {
    std::string label;
    DistDist ddf;
};

bool looks_like_code_spec(const std::string& s) {
    return s == "golay" || s.rfind("projection:", 0) == 0 || s.rfind("hamming:", 0) == 0 ||
           s.rfind("file:", 0) == 0 || s.rfind("concat:", 0) == 0;
}

NamedDdf resolve_ddf(const std::string& spec) {
    if (looks_like_code_spec(spec)) {
        BlockCode code = parse_code_spec(spec);
        return {code.label(), code.zero_set_distribution()};
    }
    PointSet s = PointSet::parse(spec);
    return {spec, distance_distribution(s)};
}

void emit_rows(const GlobalOpts& g, const std::string& header,
               const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
    if (g.format == "json") {
        std::vector<std::string> names;
        std::stringstream hs(header);
        std::string tok;
        while (std::getline(hs, tok, ',')) names.push_back(tok);
        out << "[";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out << (r ? ",\n " : "\n ") << "{";
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                out << (c ? "," : "") << "\"" << names[c] << "\":\"" << rows[r][c] << "\"";
            out << "}";
        }
        out << "\n]\n";
        return;
    }
    out << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << "\n";
    }
}

// ---- subcommand bodies ----

int cmd_ddf(const GlobalOpts& g, const std::string& spec) {
    NamedDdf nd = resolve_ddf(spec);
    if (g.format == "json") {
        std::cout << nd.ddf.to_json() << "\n";
    } else if (g.format == "paper-poly") {
        std::cout << nd.ddf.to_poly_string() << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (unsigned i = 0; i <= nd.ddf.n; ++i)
            if (nd.ddf.coeffs[i] != 0)
                rows.push_back({std::to_string(i), std::to_string(nd.ddf.coeffs[i])});
        emit_rows(g, "distance,pairs", rows, std::cout);
    }
    return 0;
}

int cmd_prob(const GlobalOpts& g, const std::string& spec, double gamma) {
    NamedDdf nd = resolve_ddf(spec);
    std::cout << fmt_float(collision_probability(nd.ddf, gamma), g) << "\n";
    return 0;
}

int cmd_crossover(const GlobalOpts& g, const std::string& lhs, const std::string& rhs) {
    NamedDdf a = resolve_ddf(lhs), b = resolve_ddf(rhs);
    CrossoverReport rep = crossover(a.ddf, b.ddf, a.label, b.label);
    std::vector<std::vector<std::string>> rows;
    for (const auto& pt : rep.points)
        rows.push_back({rep.lhs, rep.rhs, fmt_float(pt.gamma, g), fmt_float(pt.bracket_lo, g),
                        fmt_float(pt.bracket_hi, g)});
    emit_rows(g, "lhs,rhs,gamma_cross,bracket_lo,bracket_hi", rows, std::cout);
    return 0;
}

int cmd_alpha(const GlobalOpts& g, unsigned m) {
    HammingAlpha a = hamming_alpha(m);
    emit_rows(g, "m,alpha,gamma,bracket_lo,bracket_hi",
              {{std::to_string(m), fmt_float(a.alpha, g), fmt_float(a.gamma, g),
                fmt_float(a.bracket_lo, g), fmt_float(a.bracket_hi, g)}},
              std::cout);
    return 0;
}

int cmd_asymptotic(const GlobalOpts& g, double gmin, double gmax, unsigned gsteps, double dmin,
                   double dmax, unsigned dsteps, const std::string& point) {
    std::vector<std::vector<std::string>> rows;
    if (!point.empty()) {
        auto comma = point.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--point wants gamma,delta");
        double gamma = std::stod(point.substr(0, comma));
        double delta = std::stod(point.substr(comma + 1));
        double em = epsilon_max(gamma, delta);
        rows.push_back({fmt_float(gamma, g), fmt_float(delta, g), fmt_float(binary_entropy(delta), g),
                        fmt_float(em, g), fmt_float(exponent_gap(gamma, delta, em), g),
                        fmt_float(critical_gamma(delta), g)});
        emit_rows(g, "gamma,delta,entropy,eps_max,D,critical_gamma", rows, std::cout);
        return 0;
    }
    for (unsigned i = 0; i < gsteps; ++i) {
        double gamma = gmin + (gmax - gmin) * i / (gsteps > 1 ? gsteps - 1 : 1);
        for (unsigned j = 0; j < dsteps; ++j) {
            double delta = dmin + (dmax - dmin) * j / (dsteps > 1 ? dsteps - 1 : 1);
            double em = epsilon_max(gamma, delta);
            rows.push_back({fmt_float(gamma, g), fmt_float(delta, g), fmt_float(em, g),
                            fmt_float(exponent_gap(gamma, delta, em), g)});
        }
    }
    emit_rows(g, "gamma,delta,eps_max,D", rows, std::cout);
    return 0;
}

int cmd_enumerate(unsigned size, unsigned dim, bool count_only, bool full) {
    if (size > 32 && !full)
        throw std::invalid_argument("sizes above 32 take a while; pass --full to run them");
    if (count_only) {
        std::cout << count_rsds(dim, size) << "\n";
        return 0;
    }
    enumerate_rsds(dim, size, [&](const RsdsView& view) {
        std::cout << minimal_generators(view.to_point_set()).to_string() << "\n";
    });
    return 0;
}

std::vector<std::vector<std::string>> optimal_rows(unsigned t, unsigned n) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : optimal_sets(t, n))
        for (auto [lo, hi] : p.regimes)
            rows.push_back({std::to_string(t), std::to_string(n), fmt_gamma4(lo), fmt_gamma4(hi),
                            p.ddf.to_poly_string(), p.generators.to_string()});
    return rows;
}

int cmd_optimal(const GlobalOpts& g, unsigned t, unsigned dim) {
    emit_rows(g, "t,n,gamma_lo,gamma_hi,ddf,generators", optimal_rows(t, dim), std::cout);
    return 0;
}

int cmd_gens(const GlobalOpts& g, const std::string& expand, const std::string& minimize) {
    if (!expand.empty()) {
        GeneratorSet gs = GeneratorSet::parse(expand);
        PointSet s = expand_generators(gs);
        DistDist dd = distance_distribution(s);
        if (g.format == "json") {
            std::cout << "{\"set\":\"" << s.to_string() << "\",\"size\":" << s.size()
                      << ",\"ddf\":" << dd.to_json() << "}\n";
        } else {
            std::cout << s.to_string() << "\n" << dd.to_poly_string() << "\n";
        }
        return 0;
    }
    std::cout << minimal_generators(PointSet::parse(minimize)).to_string() << "\n";
    return 0;
}

int cmd_bench(const std::string& code_spec, double gamma, std::uint64_t m, std::uint64_t trials,
              std::uint64_t seed, unsigned max_retries, bool csv) {
    ExperimentConfig cfg{parse_code_spec(code_spec), m, gamma, trials, seed,
                         static_cast<std::uint32_t>(max_retries)};
    if (csv) {
        write_trials_csv(cfg, std::cout);
        return 0;
    }
    std::cout << run_experiment(cfg).to_json() << "\n";
    return 0;
}

int cmd_tables(const GlobalOpts& g, const std::string& which, bool full) {
    std::vector<std::vector<std::string>> rows;
    if (which == "I") {
        for (unsigned m = 4; m <= 7; ++m) {
            BlockCode code = hamming_code(m);
            unsigned n = code.length(), k = code.dimension();
            auto rep = crossover(code.zero_set_distribution(), subcube_distribution(n, n - k),
                                 code.label(), "projection");
            rows.push_back({std::to_string(m), std::to_string(k), fmt_gamma4(rep.points.at(0).gamma)});
        }
        emit_rows(g, "m,k,gamma", rows, std::cout);
        return 0;
    }
    if (which == "II") {
        for (unsigned n : {12u, 13u, 14u, 15u, 22u, 23u, 24u, 25u, 26u, 27u}) {
            auto profiles = optimal_sets(6, n);
            const auto& last = profiles.back();
            rows.push_back({std::to_string(n - 6), std::to_string(n),
                            fmt_gamma4(last.regimes.front().first), last.generators.to_string()});
        }
        emit_rows(g, "k,n,gamma_cross,generators", rows, std::cout);
        return 0;
    }
    if (which == "III") {
        std::vector<unsigned> sizes;
        for (unsigned s = 2; s <= 24; ++s) sizes.push_back(s);
        sizes.push_back(32);
        if (full) {
            sizes.push_back(48);
            sizes.push_back(64);
        }
        for (unsigned s : sizes)
            rows.push_back({std::to_string(s), std::to_string(count_rsds(s - 1, s))});
        emit_rows(g, "size,count", rows, std::cout);
        return 0;
    }
    if (which == "IV") {
        for (unsigned t = 1; t <= 3; ++t)
            for (const auto& row : optimal_rows(t, t)) rows.push_back(row);
        for (unsigned n : {4u, 12u, 13u, 14u, 15u})
            for (const auto& row : optimal_rows(4, n)) rows.push_back(row);
        std::vector<unsigned> dims5 = {5, 12, 13, 14, 15, 16};
        for (unsigned n = 19; n <= 31; ++n) dims5.push_back(n);
        for (unsigned n : dims5)
            for (const auto& row : optimal_rows(5, n)) rows.push_back(row);
        emit_rows(g, "t,n,gamma_lo,gamma_hi,ddf,generators", rows, std::cout);
        return 0;
    }
    if (which == "V") {
        std::vector<unsigned> dims = {12, 22, 28, 63};
        if (full) {
            dims = {6};
            for (unsigned n = 12; n <= 63; ++n) dims.push_back(n);
        }
        for (unsigned n : dims)
            for (const auto& row : optimal_rows(6, n)) rows.push_back(row);
        emit_rows(g, "t,n,gamma_lo,gamma_hi,ddf,generators", rows, std::cout);
        return 0;
    }
    throw std::invalid_argument("--which must be one of I, II, III, IV, V");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locality-sensitive hashing on the Hamming cube via error-correcting codes"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json", "paper-poly"}))
        ->capture_default_str();
    app.add_option("--precision", g.precision, "significant digits for floating output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "RNG seed for randomized subcommands");

    std::string spec, lhs, rhs, point, expand, minimize, code_spec, which;
    double gamma = 0.0;
    unsigned m_param = 4, size = 16, dim = 15, t_param = 4;
    bool count_only = false, full = false, csv = false;
    std::uint64_t bench_m = 1 << 12, trials = 1000;
    unsigned max_retries = 0;
    double gmin = 0.02, gmax = 0.48, dmin = 0.02, dmax = 0.48;
    unsigned gsteps = 50, dsteps = 50;

    auto* c_ddf = app.add_subcommand("ddf", "distance distribution of a set or a code's zero-set");
    c_ddf->add_option("spec,--set,--code", spec, "code spec or set literal")->required();

    auto* c_prob = app.add_subcommand("prob", "collision probability at a given error rate");
    c_prob->add_option("spec,--set,--code", spec, "code spec or set literal")->required();
    c_prob->add_option("--gamma", gamma, "error probability in [0, 1/2)")->required();

    auto* c_cross = app.add_subcommand("crossover", "error rates where one hash overtakes another");
    c_cross->add_option("--lhs", lhs)->required();
    c_cross->add_option("--rhs", rhs)->required();

    auto* c_alpha = app.add_subcommand("alpha", "root of the Hamming cube-vs-sphere difference");
    c_alpha->add_option("--m", m_param)->required();

    auto* c_asym = app.add_subcommand("asymptotic", "entropy / eps_max / exponent-gap grids");
    c_asym->add_option("--gamma-min", gmin)->capture_default_str();
    c_asym->add_option("--gamma-max", gmax)->capture_default_str();
    c_asym->add_option("--gamma-steps", gsteps)->capture_default_str();
    c_asym->add_option("--delta-min", dmin)->capture_default_str();
    c_asym->add_option("--delta-max", dmax)->capture_default_str();
    c_asym->add_option("--delta-steps", dsteps)->capture_default_str();
    c_asym->add_option("--point", point, "single gamma,delta evaluation");

    auto* c_enum = app.add_subcommand("enumerate", "right-shifted down-sets of a given size");
    c_enum->add_option("--size", size)->required();
    c_enum->add_option("--dim", dim)->required();
    c_enum->add_flag("--count-only", count_only);
    c_enum->add_flag("--full", full);

    auto* c_opt = app.add_subcommand("optimal", "optimality regimes of size-2^t sets");
    c_opt->add_option("--t", t_param)->required();
    c_opt->add_option("--dim", dim)->required();

    auto* c_gens = app.add_subcommand("gens", "expand or minimize generator sets");
    c_gens->add_option("--expand", expand);
    c_gens->add_option("--minimize", minimize);

    auto* c_bench = app.add_subcommand("bench", "Monte Carlo near-duplicate search harness");
    c_bench->add_option("--code", code_spec)->required();
    c_bench->add_option("--gamma", gamma)->required();
    c_bench->add_option("--M", bench_m)->capture_default_str();
    c_bench->add_option("--trials", trials)->capture_default_str();
    c_bench->add_option("--max-retries", max_retries)->capture_default_str();
    c_bench->add_flag("--csv", csv);

    auto* c_tables = app.add_subcommand("tables", "regenerate the reference tables");
    c_tables->add_option("--which", which)->required();
    c_tables->add_flag("--full", full);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_ddf) return cmd_ddf(g, spec);
        if (*c_prob) return cmd_prob(g, spec, gamma);
        if (*c_cross) return cmd_crossover(g, lhs, rhs);
        if (*c_alpha) return cmd_alpha(g, m_param);
        if (*c_asym) return cmd_asymptotic(g, gmin, gmax, gsteps, dmin, dmax, dsteps, point);
        if (*c_enum) return cmd_enumerate(size, dim, count_only, full);
        if (*c_opt) return cmd_optimal(g, t_param, dim);
        if (*c_gens) {
            if (expand.empty() == minimize.empty())
                throw std::invalid_argument("gens wants exactly one of --expand / --minimize");
            return cmd_gens(g, expand, minimize);
        }
        if (*c_bench) return cmd_bench(code_spec, gamma, bench_m, trials, seed, max_retries, csv);
        if (*c_tables) return cmd_tables(g, which, full);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
