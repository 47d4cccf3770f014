#include "codelsh/optsets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "codelsh/analysis.hpp"

namespace codelsh {

namespace {

// --- integer-encoding primitives (coordinate i <-> bit n-i) ---

bool leq64(std::uint64_t y, std::uint64_t x, unsigned n) {
    // y <= x in the shift/down order: y's prefix one-counts never exceed x's
    unsigned cx = 0, cy = 0;
    for (unsigned b = n; b-- > 0;) {
        cx += (x >> b) & 1u;
        cy += (y >> b) & 1u;
        if (cy > cx) return false;
    }
    return true;
}

std::vector<unsigned> one_positions(std::uint64_t x, unsigned n) {
    std::vector<unsigned> pos;  // 1-based coordinates, ascending
    for (unsigned i = 1; i <= n; ++i)
        if ((x >> (n - i)) & 1u) pos.push_back(i);
    return pos;
}

// |down-set| through budget: 1 (the zero vector) plus, for each weight
// v <= wt(x), the number of ascending sequences p_1 < ... < p_v <= n with
// p_t >= pos_t(x).
std::size_t downset_size_positions(const std::vector<unsigned>& pos, unsigned n, std::size_t budget) {
    std::size_t total = 1;
    unsigned w = static_cast<unsigned>(pos.size());
    std::vector<std::int64_t> cur(n + 1), pref(n + 1);
    for (unsigned v = 1; v <= w; ++v) {
        for (unsigned p = 0; p <= n; ++p) cur[p] = (p >= pos[0]) ? 1 : 0;
        for (unsigned t = 2; t <= v; ++t) {
            std::int64_t run = 0;
            for (unsigned p = 0; p <= n; ++p) {
                pref[p] = run;
                run += cur[p];
            }
            for (unsigned p = 0; p <= n; ++p) cur[p] = (p >= pos[t - 1]) ? pref[p] : 0;
        }
        std::int64_t count = 0;
        for (unsigned p = 1; p <= n; ++p) count += cur[p];
        total += static_cast<std::size_t>(count);
        if (total > budget) return budget + 1;
    }
    return total;
}

// All nonzero x with |down-set| <= budget: DFS over slack vectors
// s_1 >= ... >= s_w >= 0 against the tail-packed positions; the down-set
// only grows as any one moves left, so a failing slack prunes all larger.
std::vector<std::uint64_t> nonzero_candidates(unsigned n, std::size_t budget) {
    std::vector<std::uint64_t> out;
    for (unsigned w = 1; w <= n && (std::size_t{1} << w) <= budget; ++w) {
        std::vector<unsigned> slack(w, 0), pos(w);
        auto fill_positions = [&](unsigned chosen) {
            for (unsigned t = 0; t < w; ++t)
                pos[t] = n - w + t + 1 - (t < chosen ? slack[t] : 0);
        };
        std::function<void(unsigned, unsigned)> rec = [&](unsigned t, unsigned prev) {
            for (unsigned s = 0; s <= prev; ++s) {
                slack[t] = s;
                fill_positions(t + 1);
                if (pos[t] < 1) break;
                if (downset_size_positions(pos, n, budget) > budget) break;
                if (t + 1 == w) {
                    std::uint64_t x = 0;
                    for (unsigned u = 0; u < w; ++u) x |= std::uint64_t{1} << (n - pos[u]);
                    out.push_back(x);
                } else {
                    rec(t + 1, s);
                }
            }
        };
        rec(0, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- GenIdeal ---

constexpr std::size_t kMaxBlocks = 6;  // 384 poset slots; the real cap is 257
using QMask = std::array<std::uint64_t, kMaxBlocks>;

struct EnumCtx {
    const ShiftPoset* poset = nullptr;
    std::size_t blocks = 0;
    std::size_t target_nonzero = 0;
    unsigned n = 0;
    bool track = false;
    PivotRule rule = PivotRule::Middle;
    std::vector<std::uint32_t> shuffled_rank;  // nonempty only in shuffle mode

    std::vector<std::uint64_t> elems;  // current nonzero elements, push order
    std::array<std::int64_t, 64> hist{};
    const std::function<void(const RsdsView&)>* visit = nullptr;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> emit_buf;
};

std::size_t popcount_blocks(const QMask& q, std::size_t blocks) {
    std::size_t c = 0;
    for (std::size_t b = 0; b < blocks; ++b) c += static_cast<std::size_t>(std::popcount(q[b]));
    return c;
}

std::size_t nth_set_bit(const QMask& q, std::size_t blocks, std::size_t want) {
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t c = static_cast<std::size_t>(std::popcount(q[b]));
        if (want < c) {
            std::uint64_t word = q[b];
            for (std::size_t skip = 0; skip < want; ++skip) word &= word - 1;
            return b * 64 + static_cast<std::size_t>(std::countr_zero(word));
        }
        want -= c;
    }
    throw std::logic_error("pivot selection ran past Q");
}

std::size_t select_pivot(const EnumCtx& ctx, const QMask& q, std::size_t qcount) {
    if (!ctx.shuffled_rank.empty()) {
        // middle by shuffled rank: any pivot order enumerates the same family
        std::vector<std::pair<std::uint32_t, std::size_t>> ranked;
        ranked.reserve(qcount);
        for (std::size_t b = 0; b < ctx.blocks; ++b) {
            std::uint64_t word = q[b];
            while (word) {
                std::size_t i = b * 64 + static_cast<std::size_t>(std::countr_zero(word));
                ranked.emplace_back(ctx.shuffled_rank[i], i);
                word &= word - 1;
            }
        }
        auto mid = ranked.begin() + static_cast<std::ptrdiff_t>(ranked.size() / 2);
        std::nth_element(ranked.begin(), mid, ranked.end());
        return mid->second;
    }
    if (ctx.rule == PivotRule::First) return nth_set_bit(q, ctx.blocks, 0);
    return nth_set_bit(q, ctx.blocks, qcount / 2);
}

std::size_t add_elements(EnumCtx& ctx, const QMask& mask) {
    std::size_t added = 0;
    const auto& elems = ctx.poset->elements();
    for (std::size_t b = 0; b < ctx.blocks; ++b) {
        std::uint64_t word = mask[b];
        while (word) {
            std::size_t i = b * 64 + static_cast<std::size_t>(std::countr_zero(word));
            word &= word - 1;
            std::uint64_t u = elems[i];
            if (ctx.track) {
                ++ctx.hist[std::popcount(u)];  // distance to the implicit zero
                for (std::uint64_t v : ctx.elems) ++ctx.hist[std::popcount(u ^ v)];
            }
            ctx.elems.push_back(u);
            ++added;
        }
    }
    return added;
}

void remove_elements(EnumCtx& ctx, std::size_t added) {
    for (std::size_t r = 0; r < added; ++r) {
        std::uint64_t u = ctx.elems.back();
        ctx.elems.pop_back();
        if (ctx.track) {
            --ctx.hist[std::popcount(u)];
            for (std::uint64_t v : ctx.elems) --ctx.hist[std::popcount(u ^ v)];
        }
    }
}

void emit(EnumCtx& ctx) {
    ++ctx.count;
    if (!ctx.visit) return;
    ctx.emit_buf.assign(1, 0);
    ctx.emit_buf.insert(ctx.emit_buf.end(), ctx.elems.begin(), ctx.elems.end());
    RsdsView view{ctx.n, ctx.emit_buf.data(), ctx.emit_buf.size(), ctx.hist.data()};
    (*ctx.visit)(view);
}

void gen_ideal(EnumCtx& ctx, const QMask& q, std::size_t qcount) {
    std::size_t have = ctx.elems.size();
    if (have == ctx.target_nonzero) {
        emit(ctx);
        return;
    }
    if (have + qcount < ctx.target_nonzero) return;
    if (have + qcount == ctx.target_nonzero) {
        // everything below Q is already placed, so I + Q is itself an ideal
        std::size_t added = add_elements(ctx, q);
        emit(ctx);
        remove_elements(ctx, added);
        return;
    }
    std::size_t pivot = select_pivot(ctx, q, qcount);

    QMask q_in{}, take{};
    const auto& down = ctx.poset->down_blocks(pivot);
    for (std::size_t b = 0; b < ctx.blocks; ++b) {
        take[b] = q[b] & down[b];
        q_in[b] = q[b] & ~down[b];
    }
    std::size_t taken = popcount_blocks(take, ctx.blocks);
    if (have + taken <= ctx.target_nonzero) {
        std::size_t added = add_elements(ctx, take);
        gen_ideal(ctx, q_in, qcount - taken);
        remove_elements(ctx, added);
    }

    QMask q_out{};
    std::size_t removed = 0;
    const auto& up = ctx.poset->up_blocks(pivot);
    for (std::size_t b = 0; b < ctx.blocks; ++b) {
        removed += static_cast<std::size_t>(std::popcount(q[b] & up[b]));
        q_out[b] = q[b] & ~up[b];
    }
    gen_ideal(ctx, q_out, qcount - removed);
}

void run_enumeration(unsigned n, std::size_t target, bool track,
                     const std::function<void(const RsdsView&)>* visit, const EnumerateOptions& options,
                     std::uint64_t& count_out) {
    if (n < 1 || n > kMaxEnumDim)
        throw std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumDim));
    if (target < 1 || target > kMaxEnumTarget)
        throw std::invalid_argument("enumeration supports set sizes up to " + std::to_string(kMaxEnumTarget) +
                                    "; pass --full workloads through the 64 gate explicitly");

    EnumCtx ctx;
    ShiftPoset poset(n, target);
    ctx.poset = &poset;
    ctx.blocks = (poset.size() + 63) / 64;
    ctx.target_nonzero = target - 1;
    ctx.n = n;
    ctx.track = track;
    ctx.rule = options.pivot;
    ctx.visit = visit;
    ctx.elems.reserve(target);
    if (options.shuffle_seed != 0) {
        ctx.shuffled_rank.resize(poset.size());
        for (std::size_t i = 0; i < poset.size(); ++i)
            ctx.shuffled_rank[i] = static_cast<std::uint32_t>(i);
        std::mt19937_64 rng(options.shuffle_seed);
        for (std::size_t i = poset.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(ctx.shuffled_rank[i - 1], ctx.shuffled_rank[j]);
        }
    }

    if (target == 1) {  // the single rsds {0}
        ctx.count = 1;
        if (visit) {
            ctx.emit_buf.assign(1, 0);
            RsdsView view{n, ctx.emit_buf.data(), 1, ctx.hist.data()};
            (*visit)(view);
        }
        count_out = ctx.count;
        return;
    }

    QMask q{};
    for (std::size_t i = 0; i < poset.size(); ++i) q[i / 64] |= std::uint64_t{1} << (i % 64);
    gen_ideal(ctx, q, poset.size());
    count_out = ctx.count;
}

}  // namespace

// --- GeneratorSet ---

std::string GeneratorSet::to_string() const {
    std::string out = std::to_string(n) + ":";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(gens[i]));
        out += buf;
        if (i + 1 < gens.size()) out += ",";
    }
    return out;
}

GeneratorSet GeneratorSet::parse(std::string_view text) {
    PointSet as_set = PointSet::parse(text);
    if (as_set.dim() > kMaxEnumDim) throw std::invalid_argument("generator sets live in n <= 63");
    GeneratorSet g;
    g.n = as_set.dim();
    for (const auto& w : as_set) g.gens.push_back(w.low64());
    std::sort(g.gens.rbegin(), g.gens.rend());
    return g;
}

// --- principal down-sets / rsds predicates ---

std::size_t downset_size(std::uint64_t x, unsigned n, std::size_t budget) {
    if (n < 1 || n > kMaxEnumDim) throw std::invalid_argument("dimension out of range");
    if (n < 64 && (x >> n) != 0) throw std::invalid_argument("encoding exceeds dimension");
    return downset_size_positions(one_positions(x, n), n, budget);
}

PointSet principal_downset(const Word& x, std::size_t max_size) {
    std::unordered_set<Word, WordHash> seen{x};
    std::vector<Word> frontier{x};
    unsigned n = x.dim();
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& v : frontier) {
            for (unsigned i = 1; i <= n; ++i) {
                Word r = rho(v, i);
                if (seen.insert(r).second) next.push_back(r);
                for (unsigned j = i + 1; j <= n; ++j) {
                    Word s = sigma(v, i, j);
                    if (seen.insert(s).second) next.push_back(s);
                }
            }
            if (seen.size() > max_size)
                throw std::length_error("principal down-set exceeds budget: at least " +
                                        std::to_string(seen.size()) + " elements");
        }
        frontier = std::move(next);
    }
    return PointSet(n, std::vector<Word>(seen.begin(), seen.end()));
}

PointSet expand_generators(const GeneratorSet& g, std::size_t max_size) {
    if (g.gens.empty()) throw std::invalid_argument("generator set is empty");
    std::vector<Word> all;
    for (auto enc : g.gens) {
        PointSet part = principal_downset(Word::from_bits(g.n, enc), max_size);
        all.insert(all.end(), part.begin(), part.end());
    }
    PointSet out(g.n, std::move(all));
    if (out.size() > max_size)
        throw std::length_error("generator expansion exceeds budget: " + std::to_string(out.size()) +
                                " elements");
    return out;
}

bool is_rsds(const PointSet& s) {
    std::unordered_set<Word, WordHash> members(s.begin(), s.end());
    unsigned n = s.dim();
    for (const auto& v : s) {
        for (unsigned i = 1; i <= n; ++i) {
            if (!members.count(rho(v, i))) return false;
            for (unsigned j = i + 1; j <= n; ++j)
                if (!members.count(sigma(v, i, j))) return false;
        }
    }
    return true;
}

GeneratorSet minimal_generators(const PointSet& s) {
    if (s.dim() > kMaxEnumDim) throw std::invalid_argument("generator sets live in n <= 63");
    if (!is_rsds(s)) throw std::invalid_argument("set is not a right-shifted down-set");
    GeneratorSet g;
    g.n = s.dim();
    const auto& elems = s.elements();
    if (s.size() == 1) {
        g.gens.assign(1, elems.front().low64());  // {0} -> <0>
        return g;
    }
    for (const auto& x : elems) {
        bool maximal = true;
        for (const auto& y : elems) {
            if (x == y) continue;
            if (shift_order_leq(x, y)) {
                maximal = false;
                break;
            }
        }
        if (maximal) g.gens.push_back(x.low64());
    }
    std::sort(g.gens.rbegin(), g.gens.rend());
    return g;
}

// --- ShiftPoset ---

ShiftPoset::ShiftPoset(unsigned n, std::size_t budget) : n_(n) {
    if (n < 1 || n > kMaxEnumDim) throw std::invalid_argument("poset dimension out of range");
    if (budget < 1 || budget > kMaxEnumTarget) throw std::invalid_argument("poset budget out of range");
    elems_ = nonzero_candidates(n, budget);
    std::sort(elems_.begin(), elems_.end(), [](std::uint64_t a, std::uint64_t b) {
        int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa < wb : a < b;
    });
    std::size_t m = elems_.size();
    if (m > kMaxBlocks * 64) throw std::logic_error("candidate poset larger than expected");
    std::size_t blocks = (m + 63) / 64;
    down_.assign(m, std::vector<std::uint64_t>(blocks, 0));
    up_.assign(m, std::vector<std::uint64_t>(blocks, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (leq64(elems_[j], elems_[i], n_)) down_[i][j / 64] |= std::uint64_t{1} << (j % 64);
            if (leq64(elems_[i], elems_[j], n_)) up_[i][j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
}

// --- enumeration API ---

DistDist RsdsView::ddf() const {
    std::vector<std::int64_t> coeffs(n + 1, 0);
    coeffs[0] = static_cast<std::int64_t>(size);
    for (unsigned d = 1; d <= n && d < 64; ++d) coeffs[d] = 2 * pair_hist[d];
    return DistDist(n, static_cast<std::int64_t>(size), std::move(coeffs));
}

PointSet RsdsView::to_point_set() const {
    std::vector<Word> words;
    words.reserve(size);
    for (std::size_t i = 0; i < size; ++i) words.push_back(Word::from_bits(n, elems[i]));
    return PointSet(n, std::move(words));
}

void enumerate_rsds(unsigned n, std::size_t target, const std::function<void(const RsdsView&)>& visit,
                    const EnumerateOptions& options) {
    std::uint64_t count = 0;
    run_enumeration(n, target, true, &visit, options, count);
}

std::uint64_t count_rsds(unsigned n, std::size_t target, const EnumerateOptions& options) {
    std::uint64_t count = 0;
    run_enumeration(n, target, false, nullptr, options, count);
    return count;
}

// --- optimality regimes ---

namespace {

using DdfKey = std::array<std::uint16_t, 64>;

struct DdfKeyHash {
    std::size_t operator()(const DdfKey& k) const {
        std::uint64_t h = 0x2545f4914f6cdd1dull;
        for (std::size_t i = 0; i < 64; i += 4) {
            std::uint64_t lane = (std::uint64_t(k[i]) << 48) | (std::uint64_t(k[i + 1]) << 32) |
                                 (std::uint64_t(k[i + 2]) << 16) | std::uint64_t(k[i + 3]);
            h = splitmix64(h ^ lane);
        }
        return static_cast<std::size_t>(h);
    }
};

DdfKey key_from_hist(const std::int64_t* hist) {
    DdfKey k{};
    for (unsigned d = 0; d < 64; ++d) k[d] = static_cast<std::uint16_t>(hist[d]);
    return k;
}

DistDist key_to_ddf(const DdfKey& k, unsigned n, std::int64_t size) {
    std::vector<std::int64_t> coeffs(n + 1, 0);
    coeffs[0] = size;
    for (unsigned d = 1; d <= n && d < 64; ++d) coeffs[d] = 2 * static_cast<std::int64_t>(k[d]);
    return DistDist(n, size, std::move(coeffs));
}

// lexicographic order on (A_1, A_2, ...): the gamma -> 0+ comparison
bool lex_less(const DdfKey& a, const DdfKey& b) {
    for (unsigned d = 1; d < 64; ++d)
        if (a[d] != b[d]) return a[d] < b[d];
    return false;
}

double eval_key(const DdfKey& k, unsigned deg, double zeta) {
    double v = 0.0;
    for (unsigned d = deg + 1; d-- > 1;) v = v * zeta + static_cast<double>(k[d]);
    return v * zeta;  // pair polynomial sum_{d>=1} hist_d zeta^d; shared affine part dropped
}

// exact bisection of the champion change inside (lo_num/den, hi_num/den);
// a is the champion on the left
double bisect_boundary(const DistDist& a, const DistDist& b, std::int64_t lo_num, std::int64_t hi_num,
                       std::int64_t den) {
    const std::int64_t scale = 1 << 24;
    std::int64_t lo = lo_num * scale, hi = hi_num * scale;
    den *= scale;
    int slo = lo_num == 0 ? -collision_probability_sign(a, b, hi, den)
                          : collision_probability_sign(a, b, lo, den);
    if (slo == 0) slo = 1;
    while (static_cast<double>(hi - lo) / static_cast<double>(den) > 1e-8) {
        std::int64_t mid = lo + (hi - lo) / 2;
        int sm = collision_probability_sign(a, b, mid, den);
        if (sm == slo || sm == 0) lo = mid;
        else hi = mid;
    }
    return 0.5 * static_cast<double>(lo + hi) / static_cast<double>(den);
}

}  // namespace

std::vector<OptimalityProfile> optimal_sets(unsigned t, unsigned n) {
    if (t < 1 || t > 6) throw std::invalid_argument("optimal_sets supports 1 <= t <= 6");
    std::size_t target = std::size_t{1} << t;
    if (n < t || n > target - 1) throw std::invalid_argument("optimal_sets needs t <= n <= 2^t - 1");
    auto size64 = static_cast<std::int64_t>(target);

    // pass 1: unique distance profiles
    std::unordered_map<DdfKey, std::uint64_t, DdfKeyHash> uniq;
    enumerate_rsds(n, target, [&](const RsdsView& view) { ++uniq[key_from_hist(view.pair_hist)]; });

    std::vector<DdfKey> keys;
    keys.reserve(uniq.size());
    for (const auto& [k, c] : uniq) keys.push_back(k);

    // champion per grid point; index 0 stands for gamma -> 0+
    constexpr std::int64_t kGrid = 1000;
    const std::size_t points = kGrid / 2;
    std::vector<double> best1(points + 1, -1.0), best2(points + 1, -1.0);
    std::vector<std::size_t> arg1(points + 1, 0);
    std::vector<double> zetas(points + 1, 0.0);
    std::vector<std::pair<std::int64_t, std::int64_t>> grid_gamma(points + 1, {0, 1});
    for (std::size_t j = 1; j <= points; ++j) {
        grid_gamma[j] = (j == points) ? std::make_pair(std::int64_t{2 * kGrid - 1}, std::int64_t{4 * kGrid})
                                      : std::make_pair(static_cast<std::int64_t>(j), kGrid);
        double g = static_cast<double>(grid_gamma[j].first) / static_cast<double>(grid_gamma[j].second);
        zetas[j] = g / (1.0 - g);
    }

    std::vector<unsigned> degs(keys.size(), 0);
    for (std::size_t ki = 0; ki < keys.size(); ++ki) {
        unsigned deg = 1;
        for (unsigned d = 1; d < 64; ++d)
            if (keys[ki][d]) deg = d;
        degs[ki] = deg;
        for (std::size_t j = 1; j <= points; ++j) {
            double v = eval_key(keys[ki], deg, zetas[j]);
            if (v > best1[j]) {
                best2[j] = best1[j];
                best1[j] = v;
                arg1[j] = ki;
            } else if (v > best2[j]) {
                best2[j] = v;
            }
        }
    }
    std::size_t lex_champ = 0;
    for (std::size_t ki = 1; ki < keys.size(); ++ki)
        if (lex_less(keys[lex_champ], keys[ki])) lex_champ = ki;
    arg1[0] = lex_champ;

    // resolve near-ties exactly
    for (std::size_t j = 1; j <= points; ++j) {
        if (best2[j] < 0.0 || best1[j] - best2[j] > 1e-9 * (1.0 + best1[j])) continue;
        std::size_t winner = arg1[j];
        for (std::size_t ki = 0; ki < keys.size(); ++ki) {
            if (ki == winner) continue;
            double v = eval_key(keys[ki], degs[ki], zetas[j]);
            if (best1[j] - v > 1e-9 * (1.0 + best1[j])) continue;
            if (keys[ki] == keys[winner]) continue;
            if (collision_probability_sign(key_to_ddf(keys[ki], n, size64),
                                           key_to_ddf(keys[winner], n, size64), grid_gamma[j].first,
                                           grid_gamma[j].second) > 0)
                winner = ki;
        }
        arg1[j] = winner;
    }

    // boundaries between consecutive distinct champions
    struct Regime {
        double lo, hi;
        std::size_t key_index;
    };
    std::vector<Regime> regimes;
    double start = 0.0;
    std::size_t cur = arg1[0];
    for (std::size_t j = 1; j <= points; ++j) {
        if (arg1[j] == cur || keys[arg1[j]] == keys[cur]) continue;
        double boundary =
            bisect_boundary(key_to_ddf(keys[cur], n, size64), key_to_ddf(keys[arg1[j]], n, size64),
                            static_cast<std::int64_t>(j - 1), static_cast<std::int64_t>(j), kGrid);
        regimes.push_back({start, boundary, cur});
        start = boundary;
        cur = arg1[j];
    }
    regimes.push_back({start, 0.5, cur});

    // pass 2: collect every set realizing a winning profile
    std::unordered_map<DdfKey, std::vector<GeneratorSet>, DdfKeyHash> reps;
    for (const auto& r : regimes) reps.emplace(keys[r.key_index], std::vector<GeneratorSet>{});
    enumerate_rsds(n, target, [&](const RsdsView& view) {
        auto it = reps.find(key_from_hist(view.pair_hist));
        if (it == reps.end()) return;
        GeneratorSet g;
        g.n = n;
        for (std::size_t i = 0; i < view.size; ++i) {
            std::uint64_t x = view.elems[i];
            if (x == 0) continue;
            bool maximal = true;
            for (std::size_t jj = 0; jj < view.size; ++jj) {
                if (jj == i || view.elems[jj] == x) continue;
                if (leq64(x, view.elems[jj], n)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) g.gens.push_back(x);
        }
        std::sort(g.gens.rbegin(), g.gens.rend());
        it->second.push_back(std::move(g));
    });

    std::vector<OptimalityProfile> out;
    for (const auto& r : regimes) {
        const auto& key = keys[r.key_index];
        for (const auto& g : reps[key]) {
            bool merged = false;
            for (auto& p : out) {
                if (p.generators.n == g.n && p.generators.gens == g.gens) {
                    p.regimes.emplace_back(r.lo, r.hi);
                    merged = true;
                    break;
                }
            }
            if (merged) continue;
            out.push_back(OptimalityProfile{expand_generators(g), g, key_to_ddf(key, n, size64),
                                            {{r.lo, r.hi}}});
        }
    }
    return out;
}

PointSet distance_sum_optimal(std::size_t s, unsigned n) {
    if (s < 1 || s > kMaxEnumTarget) throw std::invalid_argument("sizes up to 64 are supported");
    if (n < 1 || n > kMaxEnumDim) throw std::invalid_argument("dimension out of range");
    if (n + 1 < s) {
        // dense regime: take the enumeration's distance-sum minimizer
        bool found = false;
        std::int64_t best = 0;
        std::vector<std::uint64_t> best_elems;
        enumerate_rsds(n, s, [&](const RsdsView& view) {
            std::int64_t ds = 0;
            for (unsigned d = 1; d < 64; ++d) ds += static_cast<std::int64_t>(d) * view.pair_hist[d];
            std::vector<std::uint64_t> elems(view.elems, view.elems + view.size);
            std::sort(elems.begin(), elems.end());
            if (!found || ds < best || (ds == best && elems < best_elems)) {
                found = true;
                best = ds;
                best_elems = std::move(elems);
            }
        });
        if (!found) throw std::invalid_argument("no rsds of that size fits in the dimension");
        std::vector<Word> words;
        for (auto e : best_elems) words.push_back(Word::from_bits(n, e));
        return PointSet(n, std::move(words));
    }
    if (s == 4 || s == 8) {
        unsigned j = s == 4 ? 2 : 3;
        std::vector<Word> elems;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << j); ++mask)
            elems.push_back(Word::from_bits(n, mask));
        return PointSet(n, std::move(elems));
    }
    return generalized_one_sphere(n, s);
}

}  // namespace codelsh
