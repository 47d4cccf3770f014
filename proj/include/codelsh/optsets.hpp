#pragma once

// The shift/down partial order on F_2^n, GenIdeal enumeration of
// right-shifted down-sets (rsds), optimality regimes over the error
// probability, and generator canonicalization. Everything here works in
// dimensions n <= 63 with single-word integer encodings.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "codelsh/distdist.hpp"
#include "codelsh/word.hpp"

namespace codelsh {

inline constexpr unsigned kMaxEnumDim = 63;
inline constexpr std::size_t kMaxEnumTarget = 64;

/// An antichain of generators; its down-closure is the set it denotes.
struct GeneratorSet {
    unsigned n = 0;
    std::vector<std::uint64_t> gens;  // integer encodings, descending

    std::string to_string() const;  // "n:hex,hex,..."
    static GeneratorSet parse(std::string_view text);
};

/// |down-set of x|, counted through the budget; returns budget + 1 as soon
/// as the count exceeds it. x given by integer encoding in dimension n.
std::size_t downset_size(std::uint64_t x, unsigned n, std::size_t budget);

/// The closure of {x} under all rho_i and sigma_ij, computed by BFS to the
/// fixpoint. Throws when the closure exceeds max_size (the message carries
/// the partial count).
PointSet principal_downset(const Word& x, std::size_t max_size = std::size_t{1} << 26);

/// Union of the generators' principal down-sets.
PointSet expand_generators(const GeneratorSet& g, std::size_t max_size = std::size_t{1} << 26);

/// Closed under every rho_i and sigma_ij?
bool is_rsds(const PointSet& s);

/// Maximal elements of an rsds under the shift/down order (unique antichain
/// whose down-closure is s). Throws if s is not an rsds.
GeneratorSet minimal_generators(const PointSet& s);

/// The candidate poset: all nonzero x with |down-set| <= budget, in a fixed
/// linear extension (weight ascending, then integer encoding ascending).
/// The zero vector belongs to every ideal and is kept implicit.
class ShiftPoset {
public:
    ShiftPoset(unsigned n, std::size_t budget);

    unsigned dim() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<std::uint64_t>& elements() const { return elems_; }

    /// Indices of elements <= / >= the element at index i (within the poset).
    const std::vector<std::uint64_t>& down_blocks(std::size_t i) const { return down_[i]; }
    const std::vector<std::uint64_t>& up_blocks(std::size_t i) const { return up_[i]; }

private:
    unsigned n_;
    std::vector<std::uint64_t> elems_;
    std::vector<std::vector<std::uint64_t>> down_, up_;
};

enum class PivotRule {
    Middle,  ///< middle element of Q in the linear extension (Squire)
    First,   ///< least element of Q (naive cross-check mode)
};

struct EnumerateOptions {
    PivotRule pivot = PivotRule::Middle;
    /// When nonzero, pivot ranks are shuffled by this seed (order-invariance
    /// checks); the emitted family of sets is unchanged.
    std::uint64_t shuffle_seed = 0;
};

/// A right-shifted down-set as handed to the visitor: elements (integer
/// encodings, zero first, rest in discovery order) plus the unordered
/// pair-distance histogram maintained incrementally by the enumerator.
struct RsdsView {
    unsigned n;
    const std::uint64_t* elems;
    std::size_t size;
    const std::int64_t* pair_hist;  // index = distance, unordered pair counts

    DistDist ddf() const;
    PointSet to_point_set() const;
};

/// Streams every rsds of exactly the target size, each once, in a
/// deterministic order. target <= 64, n <= 63.
void enumerate_rsds(unsigned n, std::size_t target, const std::function<void(const RsdsView&)>& visit,
                    const EnumerateOptions& options = {});

/// Count without materializing distance histograms.
std::uint64_t count_rsds(unsigned n, std::size_t target, const EnumerateOptions& options = {});

/// One optimal set together with the regime on which it is optimal.
/// Sets sharing a regime (identical ddf) appear as separate profiles with
/// equal intervals.
struct OptimalityProfile {
    PointSet set;
    GeneratorSet generators;
    DistDist ddf;
    std::vector<std::pair<double, double>> regimes;  // disjoint, within (0, 1/2)
};

/// Partition (0, 1/2) into optimality regimes among all rsds of size 2^t in
/// F_2^n, exactly as the appendix tables list them: grid scan at 1e-3 with
/// exact integer comparison on ties, boundaries bisected to 1e-8.
std::vector<OptimalityProfile> optimal_sets(unsigned t, unsigned n);

/// A distance-sum minimizer among rsds of size s in F_2^n: the generalized
/// 1-sphere for n >= s-1 (the subcube when s is 4 or 8); found by
/// enumeration for smaller n.
PointSet distance_sum_optimal(std::size_t s, unsigned n);

}  // namespace codelsh
