#pragma once

// Points of the n-cube F_2^n: packed bit vectors, Hamming distance,
// the coordinate transforms rho_i / sigma_ij, and seeded error sampling.
//
// Coordinate convention (fixed project-wide): coordinate x_1 is the most
// significant bit of the integer encoding, x = sum_{i<n} 2^i x_{n-i}.
// Words with n <= 64 stay in inline storage; larger n (up to 1024) spill
// to the heap.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace codelsh {

inline constexpr unsigned kMaxDimension = 1024;

class Word {
public:
    Word() : n_(0) {}
    explicit Word(unsigned n);

    /// Word of dimension n <= 64 from its integer encoding.
    static Word from_bits(unsigned n, std::uint64_t bits);
    /// Parse the "n:hex" serialization, e.g. "15:4003".
    static Word parse(std::string_view text);

    unsigned dim() const { return n_; }
    unsigned weight() const;
    bool is_zero() const;

    /// Coordinate x_i, 1-based, i in [1, n].
    bool coord(unsigned i) const;
    void set_coord(unsigned i, bool value);

    /// Bit of the integer encoding, position in [0, n).
    bool bit(unsigned pos) const;
    void set_bit(unsigned pos, bool value);

    /// Integer encoding; requires n <= 64.
    std::uint64_t low64() const;

    Word operator^(const Word& other) const;
    Word& operator^=(const Word& other);

    /// Parity of the AND overlap <x, y> over GF(2).
    bool and_parity(const Word& other) const;

    bool operator==(const Word& other) const { return n_ == other.n_ && w_ == other.w_; }
    bool operator!=(const Word& other) const { return !(*this == other); }
    /// Integer-encoding order; both words must share a dimension.
    bool operator<(const Word& other) const;

    /// "n:hex" with lowercase hex digits and no leading zeros.
    std::string to_string() const;

    std::size_t hash() const;

private:
    using Storage = boost::container::small_vector<std::uint64_t, 1>;
    unsigned words() const { return static_cast<unsigned>(w_.size()); }

    std::uint16_t n_;
    Storage w_;

    friend unsigned hamming_distance(const Word&, const Word&);
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// d(x, y) = |{i : x_i != y_i}|. Throws std::invalid_argument on dimension mismatch.
unsigned hamming_distance(const Word& x, const Word& y);

/// rho_i: coordinate i forced to zero. 1-based, throws std::out_of_range.
Word rho(const Word& x, unsigned i);

/// sigma_ij: swap coordinates i and j when x_{min(i,j)} = 1, else identity.
/// Accepts i > j (min/max semantics); requires i != j, both in [1, n].
Word sigma(const Word& x, unsigned i, unsigned j);

/// Independent per-bit flips: gamma in [0, 1/2), 64-bit seed.
struct ErrorModel {
    double gamma = 0.0;
    std::uint64_t seed = 0;
};

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// Used instead of std::uniform_real_distribution so that streams are
/// bit-identical across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Error vector of dimension n; each bit set independently with probability
/// gamma, consuming one generator draw per bit in integer-encoding order.
Word sample_error(unsigned n, double gamma, std::mt19937_64& rng);

/// Uniform word of dimension n.
Word sample_uniform(unsigned n, std::mt19937_64& rng);

/// x + e with e ~ ErrorModel; pure function of (x, gamma, seed).
Word apply_error(const Word& x, const ErrorModel& model);

/// splitmix64 mix step; used to derive independent RNG streams.
std::uint64_t splitmix64(std::uint64_t state);

/// y precedes x in the shift/down order (y reachable from x via rho/sigma moves).
/// Equivalent characterization used here: matching the ones of y against the
/// leftmost ones of x, every one of y sits at an equal or later coordinate.
bool shift_order_leq(const Word& y, const Word& x);

}  // namespace codelsh
