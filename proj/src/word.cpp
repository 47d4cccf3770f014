#include "codelsh/word.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace codelsh {

namespace {

unsigned words_for(unsigned n) { return (n + 63) / 64; }

void check_dim(unsigned n) {
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("word dimension must be in [1, " + std::to_string(kMaxDimension) + "]");
}

}  // namespace

Word::Word(unsigned n) : n_(static_cast<std::uint16_t>(n)) {
    check_dim(n);
    w_.assign(words_for(n), 0);
}

Word Word::from_bits(unsigned n, std::uint64_t bits) {
    check_dim(n);
    if (n > 64) throw std::invalid_argument("from_bits requires n <= 64");
    if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("bits above position n must be zero");
    Word w(n);
    w.w_[0] = bits;
    return w;
}

Word Word::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("word literal must look like \"n:hex\"");
    unsigned n = 0;
    auto head = text.substr(0, colon);
    auto res = std::from_chars(head.data(), head.data() + head.size(), n);
    if (res.ec != std::errc{} || res.ptr != head.data() + head.size())
        throw std::invalid_argument("bad dimension in word literal");
    check_dim(n);
    auto hex = text.substr(colon + 1);
    if (hex.empty()) throw std::invalid_argument("missing hex digits in word literal");
    Word w(n);
    unsigned pos = 0;  // bit position of the next nibble's low bit
    for (std::size_t t = hex.size(); t-- > 0;) {
        char c = hex[t];
        unsigned v;
        if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
        else throw std::invalid_argument("bad hex digit in word literal");
        if (v != 0 && (pos >= n || (n - pos < 4 && (v >> (n - pos)) != 0)))
            throw std::invalid_argument("hex value exceeds dimension " + std::to_string(n));
        if (pos < n) w.w_[pos / 64] |= static_cast<std::uint64_t>(v) << (pos % 64);
        pos += 4;
    }
    return w;
}

unsigned Word::weight() const {
    unsigned total = 0;
    for (auto v : w_) total += static_cast<unsigned>(std::popcount(v));
    return total;
}

bool Word::is_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t v) { return v == 0; });
}

bool Word::coord(unsigned i) const {
    if (i < 1 || i > n_) throw std::out_of_range("coordinate index out of range");
    return bit(n_ - i);
}

void Word::set_coord(unsigned i, bool value) {
    if (i < 1 || i > n_) throw std::out_of_range("coordinate index out of range");
    set_bit(n_ - i, value);
}

bool Word::bit(unsigned pos) const {
    return (w_[pos / 64] >> (pos % 64)) & 1u;
}

void Word::set_bit(unsigned pos, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (pos % 64);
    if (value) w_[pos / 64] |= mask;
    else w_[pos / 64] &= ~mask;
}

std::uint64_t Word::low64() const {
    if (n_ > 64) throw std::logic_error("low64 requires n <= 64");
    return w_[0];
}

Word Word::operator^(const Word& other) const {
    Word out = *this;
    out ^= other;
    return out;
}

Word& Word::operator^=(const Word& other) {
    if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
    for (unsigned j = 0; j < words(); ++j) w_[j] ^= other.w_[j];
    return *this;
}

bool Word::and_parity(const Word& other) const {
    if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < words(); ++j) acc ^= w_[j] & other.w_[j];
    return std::popcount(acc) & 1u;
}

bool Word::operator<(const Word& other) const {
    if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
    for (unsigned j = words(); j-- > 0;)
        if (w_[j] != other.w_[j]) return w_[j] < other.w_[j];
    return false;
}

std::string Word::to_string() const {
    std::string hex;
    bool leading = true;
    for (unsigned nib = (n_ + 3) / 4; nib-- > 0;) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) {
            unsigned pos = nib * 4 + b;
            if (pos < n_ && bit(pos)) v |= 1u << b;
        }
        if (v == 0 && leading && nib != 0) continue;
        leading = false;
        hex += "0123456789abcdef"[v];
    }
    return std::to_string(n_) + ":" + hex;
}

std::size_t Word::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto v : w_) h = splitmix64(h ^ v);
    return static_cast<std::size_t>(h);
}

unsigned hamming_distance(const Word& x, const Word& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("hamming_distance: dimension mismatch");
    unsigned total = 0;
    for (unsigned j = 0; j < x.words(); ++j)
        total += static_cast<unsigned>(std::popcount(x.w_[j] ^ y.w_[j]));
    return total;
}

Word rho(const Word& x, unsigned i) {
    Word out = x;
    out.set_coord(i, false);
    return out;
}

Word sigma(const Word& x, unsigned i, unsigned j) {
    if (i == j) throw std::out_of_range("sigma requires distinct coordinates");
    unsigned lo = std::min(i, j), hi = std::max(i, j);
    if (lo < 1 || hi > x.dim()) throw std::out_of_range("coordinate index out of range");
    if (!x.coord(lo)) return x;
    Word out = x;
    bool bhi = x.coord(hi);
    out.set_coord(lo, bhi);
    out.set_coord(hi, true);
    return out;
}

Word sample_error(unsigned n, double gamma, std::mt19937_64& rng) {
    Word e(n);
    for (unsigned pos = 0; pos < n; ++pos)
        if (uniform01(rng) < gamma) e.set_bit(pos, true);
    return e;
}

Word sample_uniform(unsigned n, std::mt19937_64& rng) {
    Word w(n);
    for (unsigned pos = 0; pos < n; pos += 64) {
        std::uint64_t v = rng();
        unsigned span = std::min(64u, n - pos);
        if (span < 64) v &= (std::uint64_t{1} << span) - 1;
        for (unsigned b = 0; b < span; ++b)
            if ((v >> b) & 1u) w.set_bit(pos + b, true);
    }
    return w;
}

Word apply_error(const Word& x, const ErrorModel& model) {
    if (!(model.gamma >= 0.0 && model.gamma < 0.5))
        throw std::domain_error("error probability must lie in [0, 1/2)");
    std::mt19937_64 rng(model.seed);
    return x ^ sample_error(x.dim(), model.gamma, rng);
}

std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool shift_order_leq(const Word& y, const Word& x) {
    if (y.dim() != x.dim()) throw std::invalid_argument("dimension mismatch");
    // Walk coordinates 1..n keeping running counts of ones seen so far; y's
    // prefix count may never exceed x's.
    unsigned cx = 0, cy = 0;
    for (unsigned i = 1; i <= x.dim(); ++i) {
        cx += x.coord(i);
        cy += y.coord(i);
        if (cy > cx) return false;
    }
    return true;
}

}  // namespace codelsh
