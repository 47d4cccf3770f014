#pragma once

// [n,k] binary block codes with complete translation-invariant decoders:
// coordinate projection, Hamming and Golay codes, syndrome decoding for
// arbitrary generator matrices, and blockwise concatenation. Each code
// induces a hash F_2^n -> F_2^k whose collision behavior is governed by
// its zero-set (the decoder's preimage of the zero codeword).

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "codelsh/distdist.hpp"
#include "codelsh/word.hpp"

namespace codelsh {

/// Syndrome tables are refused beyond 2^kMaxSyndromeBits entries.
inline constexpr unsigned kMaxSyndromeBits = 28;
/// Exhaustive zero-set materialization is refused beyond this dimension.
inline constexpr unsigned kMaxZeroSetDim = 28;

class BlockCode {
public:
    unsigned length() const;     ///< n
    unsigned dimension() const;  ///< k
    double rate() const;         ///< k/n
    const std::string& label() const;
    const std::vector<Word>& generator_rows() const;

    /// Complete decode: the codeword v maps to. Translation-invariant:
    /// decode(v + c) = decode(v) + c for codewords c.
    Word decode(const Word& v) const;

    /// Information vector of decode(v) w.r.t. the generator rows, as a
    /// dimension-k word. hash(v) == hash(w) iff decode(v) == decode(w).
    Word hash_label(const Word& v) const;

    /// {v : decode(v) = 0}, materialized. Syndrome-backed codes return their
    /// coset-leader set directly; other decoders sweep F_2^n and require
    /// n <= kMaxZeroSetDim.
    PointSet zero_set() const;

    /// Distance distribution of the zero-set, computed without a full sweep
    /// where a closed form or product structure is available.
    DistDist zero_set_distribution() const;

    struct Impl;
    explicit BlockCode(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    const std::shared_ptr<const Impl>& impl() const { return impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

/// P_{n,k}: keep the first k coordinates, zero the rest.
BlockCode projection_code(unsigned n, unsigned k);

/// The [2^m-1, 2^m-m-1, 3] Hamming code, 2 <= m <= 7. Parity-check columns
/// are the binary representations of the coordinate indices 1..2^m-1.
BlockCode hamming_code(unsigned m);

/// The [23,12,7] binary Golay code (syndrome decoded; the 2^11-entry table
/// holds every coset's unique minimum-weight leader).
BlockCode golay_code();

/// Syndrome decoding for an arbitrary generator matrix (rows of shared
/// dimension n). Ties among minimum-weight coset leaders are broken toward
/// the smallest integer encoding. Requires independent rows and
/// n - k <= kMaxSyndromeBits.
BlockCode linear_code(std::vector<Word> generator_rows, std::string label = "");

/// Blockwise concatenation: length n+n', dimension k+k', first block in the
/// leading coordinates. P^(h,h') = P^h P^h'.
BlockCode concatenate(const BlockCode& a, const BlockCode& b);

/// Plain-text generator matrix: first line "n k", then k lines of n
/// characters in {0,1} (coordinate 1 first).
BlockCode load_generator_file(const std::string& path);
std::vector<Word> read_generator_matrix(std::istream& in);

/// "projection:n,k" | "hamming:m" | "golay" | "file:PATH" |
/// "concat:SPEC+SPEC[+SPEC...]".
BlockCode parse_code_spec(const std::string& spec);

}  // namespace codelsh
