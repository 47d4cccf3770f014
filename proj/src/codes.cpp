#include "codelsh/codes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace codelsh {

namespace {

// Gauss-Jordan over GF(2). Reduces rows in place to RREF, applying the same
// row operations to companion (when given, one companion row per row).
// Returns the pivot coordinates (1-based, ascending).
std::vector<unsigned> rref(std::vector<Word>& rows, std::vector<Word>* companion) {
    std::vector<unsigned> pivots;
    if (rows.empty()) return pivots;
    unsigned n = rows[0].dim();
    std::size_t r = 0;
    for (unsigned col = 1; col <= n && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && !rows[sel].coord(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        if (companion) std::swap((*companion)[r], (*companion)[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].coord(col)) {
                rows[i] ^= rows[r];
                if (companion) (*companion)[i] ^= (*companion)[r];
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

Word split_high(const Word& v, unsigned n_left) {
    Word out(n_left);
    for (unsigned i = 1; i <= n_left; ++i) out.set_coord(i, v.coord(i));
    return out;
}

Word split_low(const Word& v, unsigned n_left, unsigned n_right) {
    Word out(n_right);
    for (unsigned i = 1; i <= n_right; ++i) out.set_coord(i, v.coord(n_left + i));
    return out;
}

Word join(const Word& hi, const Word& lo) {
    Word out(hi.dim() + lo.dim());
    for (unsigned i = 1; i <= hi.dim(); ++i) out.set_coord(i, hi.coord(i));
    for (unsigned i = 1; i <= lo.dim(); ++i) out.set_coord(hi.dim() + i, lo.coord(i));
    return out;
}

}  // namespace

struct BlockCode::Impl {
    enum class Kind { Projection, Syndrome, Concat };

    Kind kind = Kind::Projection;
    unsigned n = 0, k = 0;
    std::string label;
    std::vector<Word> gen_rows;

    // info extraction: decode(v) = m * G with m = (c at rref pivots) * U
    std::vector<unsigned> pivots;
    std::vector<Word> basis_u;  // k rows of dimension k

    // syndrome decoding
    std::vector<Word> check_rows;  // n-k parity-check rows
    std::vector<Word> leaders;     // coset leaders indexed by syndrome

    // concatenation
    std::shared_ptr<const Impl> left, right;

    std::uint32_t syndrome(const Word& v) const {
        std::uint32_t s = 0;
        for (const auto& row : check_rows) s = (s << 1) | static_cast<unsigned>(row.and_parity(v));
        return s;
    }

    Word decode(const Word& v) const {
        switch (kind) {
            case Kind::Projection: {
                Word out = v;
                for (unsigned i = k + 1; i <= n; ++i) out.set_coord(i, false);
                return out;
            }
            case Kind::Syndrome:
                return v ^ leaders[syndrome(v)];
            case Kind::Concat:
                return join(left->decode(split_high(v, left->n)),
                            right->decode(split_low(v, left->n, right->n)));
        }
        throw std::logic_error("unreachable");
    }

    Word info_of_codeword(const Word& c) const {
        Word m(k);
        for (unsigned i = 0; i < k; ++i)
            if (c.coord(pivots[i])) m ^= basis_u[i];
        return m;
    }
};

namespace {

using Impl = BlockCode::Impl;

void build_info_extraction(Impl& im) {
    std::vector<Word> r = im.gen_rows;
    std::vector<Word> u;
    u.reserve(im.k);
    for (unsigned i = 0; i < im.k; ++i) {
        Word e(im.k);
        e.set_coord(i + 1, true);
        u.push_back(e);
    }
    im.pivots = rref(r, &u);
    if (im.pivots.size() != im.k) throw std::invalid_argument("generator rows must be linearly independent");
    im.basis_u = std::move(u);
}

// Coset-leader table filled by increasing weight, then increasing integer
// encoding: the first vector reaching a syndrome becomes that coset's
// leader, which pins the tie-break among equal-weight leaders.
void build_leader_table(Impl& im) {
    unsigned n = im.n, red = n - im.k;
    if (red > kMaxSyndromeBits)
        throw std::invalid_argument("syndrome table limited to 2^" + std::to_string(kMaxSyndromeBits) +
                                    " entries (n-k = " + std::to_string(red) + ")");
    std::vector<std::uint32_t> column_synd(n, 0);
    for (unsigned pos = 0; pos < n; ++pos) {
        Word e(n);
        e.set_bit(pos, true);
        column_synd[pos] = im.syndrome(e);
    }
    std::size_t total = std::size_t{1} << red;
    im.leaders.assign(total, Word(n));
    std::vector<bool> filled(total, false);
    filled[0] = true;  // leader(0) = 0
    std::size_t remaining = total - 1;

    for (unsigned w = 1; w <= n && remaining > 0; ++w) {
        // colex enumeration of bit-position subsets = increasing integer order
        std::vector<unsigned> pos(w);
        for (unsigned t = 0; t < w; ++t) pos[t] = t;
        bool more = true;
        while (more && remaining > 0) {
            std::uint32_t s = 0;
            for (unsigned t = 0; t < w; ++t) s ^= column_synd[pos[t]];
            if (!filled[s]) {
                Word v(n);
                for (unsigned t = 0; t < w; ++t) v.set_bit(pos[t], true);
                im.leaders[s] = v;
                filled[s] = true;
                --remaining;
            }
            more = false;
            for (unsigned t = 0; t < w; ++t) {
                unsigned limit = (t + 1 < w) ? pos[t + 1] : n;
                if (pos[t] + 1 < limit) {
                    ++pos[t];
                    for (unsigned u = 0; u < t; ++u) pos[u] = u;
                    more = true;
                    break;
                }
            }
        }
    }
    if (remaining > 0) throw std::logic_error("coset leader construction left syndromes uncovered");
}

BlockCode make_syndrome_code(std::vector<Word> gen_rows, std::vector<Word> check_rows, std::string label) {
    auto im = std::make_shared<Impl>();
    im->kind = Impl::Kind::Syndrome;
    im->n = gen_rows.front().dim();
    im->k = static_cast<unsigned>(gen_rows.size());
    im->label = std::move(label);
    im->gen_rows = std::move(gen_rows);
    im->check_rows = std::move(check_rows);
    build_info_extraction(*im);
    build_leader_table(*im);
    return BlockCode(std::move(im));
}

// One parity-check row per non-pivot coordinate q of rref(G):
// h[q] = 1 and h[p_i] = R_i[q].
std::vector<Word> check_rows_from_generator(const std::vector<Word>& gen_rows) {
    std::vector<Word> r = gen_rows;
    auto pivots = rref(r, nullptr);
    unsigned n = gen_rows.front().dim();
    unsigned k = static_cast<unsigned>(gen_rows.size());
    if (pivots.size() != k) throw std::invalid_argument("generator rows must be linearly independent");
    std::vector<bool> is_pivot(n + 1, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Word> h;
    h.reserve(n - k);
    for (unsigned q = 1; q <= n; ++q) {
        if (is_pivot[q]) continue;
        Word row(n);
        row.set_coord(q, true);
        for (unsigned i = 0; i < k; ++i)
            if (r[i].coord(q)) row.set_coord(pivots[i], true);
        h.push_back(row);
    }
    return h;
}

}  // namespace

unsigned BlockCode::length() const { return impl_->n; }
unsigned BlockCode::dimension() const { return impl_->k; }
double BlockCode::rate() const { return static_cast<double>(impl_->k) / impl_->n; }
const std::string& BlockCode::label() const { return impl_->label; }
const std::vector<Word>& BlockCode::generator_rows() const { return impl_->gen_rows; }

Word BlockCode::decode(const Word& v) const {
    if (v.dim() != impl_->n) throw std::invalid_argument("decode: dimension mismatch");
    return impl_->decode(v);
}

Word BlockCode::hash_label(const Word& v) const {
    if (v.dim() != impl_->n) throw std::invalid_argument("hash: dimension mismatch");
    return impl_->info_of_codeword(impl_->decode(v));
}

PointSet BlockCode::zero_set() const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Impl::Kind::Syndrome:
            return PointSet(im.n, im.leaders);
        case Impl::Kind::Concat: {
            PointSet a = BlockCode(im.left).zero_set();
            PointSet b = BlockCode(im.right).zero_set();
            if (a.size() * b.size() > (std::size_t{1} << kMaxZeroSetDim))
                throw std::invalid_argument("zero set too large to materialize (limit 2^" +
                                            std::to_string(kMaxZeroSetDim) + " points)");
            std::vector<Word> prod;
            prod.reserve(a.size() * b.size());
            for (const auto& x : a)
                for (const auto& y : b) prod.push_back(join(x, y));
            return PointSet(im.n, std::move(prod));
        }
        case Impl::Kind::Projection: {
            // the subcube spanned by the trailing n-k coordinates
            if (im.n - im.k > kMaxZeroSetDim)
                throw std::invalid_argument("zero set too large to materialize (limit 2^" +
                                            std::to_string(kMaxZeroSetDim) + " points)");
            std::vector<Word> elems;
            elems.reserve(std::size_t{1} << (im.n - im.k));
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (im.n - im.k)); ++mask) {
                Word w(im.n);
                for (unsigned b = 0; b < im.n - im.k; ++b)
                    if ((mask >> b) & 1u) w.set_bit(b, true);
                elems.push_back(w);
            }
            return PointSet(im.n, std::move(elems));
        }
    }
    throw std::logic_error("unreachable");
}

DistDist BlockCode::zero_set_distribution() const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Impl::Kind::Projection:
            return subcube_distribution(im.n, im.n - im.k);
        case Impl::Kind::Syndrome:
            if (im.leaders.size() > 4096)
                throw std::invalid_argument("zero set too large for the pairwise loop (limit 4096 points)");
            return distance_distribution(PointSet(im.n, im.leaders));
        case Impl::Kind::Concat: {
            DistDist a = BlockCode(im.left).zero_set_distribution();
            DistDist b = BlockCode(im.right).zero_set_distribution();
            // blockwise product: distances add across blocks
            std::vector<std::int64_t> c(im.n + 1, 0);
            for (unsigned i = 0; i <= a.n; ++i) {
                if (a.coeffs[i] == 0) continue;
                for (unsigned j = 0; j <= b.n; ++j)
                    if (b.coeffs[j] != 0) c[i + j] += a.coeffs[i] * b.coeffs[j];
            }
            return DistDist(im.n, a.size * b.size, std::move(c));
        }
    }
    throw std::logic_error("unreachable");
}

BlockCode projection_code(unsigned n, unsigned k) {
    if (n < 1 || n > kMaxDimension) throw std::invalid_argument("projection length out of range");
    if (k < 1 || k > n) throw std::invalid_argument("projection needs 1 <= k <= n");
    auto im = std::make_shared<Impl>();
    im->kind = Impl::Kind::Projection;
    im->n = n;
    im->k = k;
    im->label = "projection[" + std::to_string(n) + "," + std::to_string(k) + "]";
    for (unsigned i = 1; i <= k; ++i) {
        Word e(n);
        e.set_coord(i, true);
        im->gen_rows.push_back(e);
    }
    build_info_extraction(*im);
    return BlockCode(std::move(im));
}

BlockCode hamming_code(unsigned m) {
    if (m < 2 || m > 7) throw std::invalid_argument("hamming_code needs 2 <= m <= 7");
    unsigned n = (1u << m) - 1;
    // parity-check row r holds bit (m - r) of each column index
    std::vector<Word> h;
    for (unsigned r = 1; r <= m; ++r) {
        Word row(n);
        for (unsigned i = 1; i <= n; ++i)
            if ((i >> (m - r)) & 1u) row.set_coord(i, true);
        h.push_back(row);
    }
    // generator = null-space basis of H
    std::vector<Word> hr = h;
    auto pivots = rref(hr, nullptr);
    std::vector<bool> is_pivot(n + 1, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Word> gen;
    for (unsigned q = 1; q <= n; ++q) {
        if (is_pivot[q]) continue;
        Word g(n);
        g.set_coord(q, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (hr[i].coord(q)) g.set_coord(pivots[i], true);
        gen.push_back(g);
    }
    return make_syndrome_code(std::move(gen), std::move(h), "hamming[m=" + std::to_string(m) + "]");
}

BlockCode golay_code() {
    // cyclic generator polynomial x^11+x^10+x^6+x^5+x^4+x^2+1; one row per shift
    const std::uint64_t g =
        (1ull << 11) | (1ull << 10) | (1ull << 6) | (1ull << 5) | (1ull << 4) | (1ull << 2) | 1ull;
    std::vector<Word> gen;
    for (unsigned i = 0; i < 12; ++i) gen.push_back(Word::from_bits(23, g << i));
    auto check = check_rows_from_generator(gen);
    return make_syndrome_code(std::move(gen), std::move(check), "golay");
}

BlockCode linear_code(std::vector<Word> generator_rows, std::string label) {
    if (generator_rows.empty()) throw std::invalid_argument("generator matrix must have at least one row");
    unsigned n = generator_rows.front().dim();
    for (const auto& row : generator_rows)
        if (row.dim() != n) throw std::invalid_argument("generator rows must share the dimension");
    if (label.empty())
        label = "linear[" + std::to_string(n) + "," + std::to_string(generator_rows.size()) + "]";
    auto check = check_rows_from_generator(generator_rows);
    return make_syndrome_code(std::move(generator_rows), std::move(check), std::move(label));
}

BlockCode concatenate(const BlockCode& a, const BlockCode& b) {
    auto im = std::make_shared<Impl>();
    im->kind = Impl::Kind::Concat;
    im->n = a.length() + b.length();
    im->k = a.dimension() + b.dimension();
    im->label = "concat(" + a.label() + "," + b.label() + ")";
    for (const auto& row : a.generator_rows()) im->gen_rows.push_back(join(row, Word(b.length())));
    for (const auto& row : b.generator_rows()) im->gen_rows.push_back(join(Word(a.length()), row));
    im->left = a.impl();
    im->right = b.impl();
    build_info_extraction(*im);
    return BlockCode(std::move(im));
}

std::vector<Word> read_generator_matrix(std::istream& in) {
    unsigned n = 0, k = 0;
    if (!(in >> n >> k)) throw std::invalid_argument("generator file must start with \"n k\"");
    if (n < 1 || n > kMaxDimension || k < 1 || k > n)
        throw std::invalid_argument("generator file has unusable n or k");
    std::vector<Word> rows;
    for (unsigned r = 0; r < k; ++r) {
        std::string line;
        if (!(in >> line) || line.size() != n)
            throw std::invalid_argument("generator row " + std::to_string(r + 1) + " must have n characters");
        Word w(n);
        for (unsigned i = 0; i < n; ++i) {
            if (line[i] == '1') w.set_coord(i + 1, true);
            else if (line[i] != '0') throw std::invalid_argument("generator rows are strings over {0,1}");
        }
        rows.push_back(w);
    }
    return rows;
}

BlockCode load_generator_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open generator file: " + path);
    auto rows = read_generator_matrix(f);
    return linear_code(std::move(rows), "file:" + path);
}

BlockCode parse_code_spec(const std::string& spec) {
    if (spec == "golay") return golay_code();
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "projection") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("projection spec is projection:n,k");
        return projection_code(static_cast<unsigned>(std::stoul(rest.substr(0, comma))),
                               static_cast<unsigned>(std::stoul(rest.substr(comma + 1))));
    }
    if (kind == "hamming") return hamming_code(static_cast<unsigned>(std::stoul(rest)));
    if (kind == "file") return load_generator_file(rest);
    if (kind == "concat") {
        std::vector<BlockCode> parts;
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto plus = rest.find('+', start);
            parts.push_back(parse_code_spec(
                rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        if (parts.size() < 2) throw std::invalid_argument("concat spec needs at least two components");
        BlockCode acc = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) acc = concatenate(acc, parts[i]);
        return acc;
    }
    throw std::invalid_argument("unknown code spec: " + spec);
}

}  // namespace codelsh
