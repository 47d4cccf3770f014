#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "codelsh/codes.hpp"

using namespace codelsh;

namespace {

Word encode(const BlockCode& code, std::uint64_t message_bits, std::mt19937_64*) {
    Word c(code.length());
    for (unsigned i = 0; i < code.dimension(); ++i)
        if ((message_bits >> i) & 1u) c ^= code.generator_rows()[i];
    return c;
}

Word random_codeword(const BlockCode& code, std::mt19937_64& rng) {
    return encode(code, rng(), nullptr);
}

}  // namespace

TEST_CASE("projection code") {
    BlockCode p = projection_code(4, 2);
    CHECK(p.decode(Word::from_bits(4, 0b1011)) == Word::from_bits(4, 0b1000));
    CHECK(p.zero_set().to_string() == "4:0,1,2,3");
    CHECK(p.hash_label(Word::from_bits(4, 0b1011)) == Word::from_bits(2, 0b10));

    // collision probability is (1-gamma)^k
    BlockCode p2312 = projection_code(23, 12);
    double prob = collision_probability(p2312.zero_set_distribution(), 0.3);
    CHECK(prob == doctest::Approx(std::pow(0.7, 12)).epsilon(1e-12));
    CHECK(prob == doctest::Approx(0.013841287201).epsilon(1e-9));

    CHECK_THROWS_AS(projection_code(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(projection_code(64, 2).zero_set(), std::invalid_argument);
    // the closed-form ddf agrees with materialization
    BlockCode p63 = projection_code(6, 3);
    CHECK(p63.zero_set_distribution() == distance_distribution(p63.zero_set()));
    CHECK(p63.zero_set().size() == 8);
}

TEST_CASE("hamming codes") {
    for (unsigned m = 2; m <= 7; ++m) {
        BlockCode h = hamming_code(m);
        unsigned n = (1u << m) - 1;
        CHECK(h.length() == n);
        CHECK(h.dimension() == n - m);
        PointSet zs = h.zero_set();
        CHECK(zs.size() == (std::size_t{1} << m));
        // zero-set = 1-sphere: ddf from the closed form 2^m + 2(2^m-1)z + (2^m-1)(2^m-2)z^2
        DistDist dd = distance_distribution(zs);
        std::int64_t pow2m = std::int64_t{1} << m;
        CHECK(dd.coeffs[0] == pow2m);
        CHECK(dd.coeffs[1] == 2 * (pow2m - 1));
        CHECK(dd.coeffs[2] == (pow2m - 1) * (pow2m - 2));
        for (unsigned i = 3; i <= n; ++i) CHECK(dd.coeffs[i] == 0);
    }
    // every weight-1 vector decodes to the zero codeword
    BlockCode h3 = hamming_code(3);
    for (unsigned i = 1; i <= 7; ++i) {
        Word e(7);
        e.set_coord(i, true);
        CHECK(h3.decode(e) == Word(7));
    }
    CHECK_THROWS_AS(hamming_code(1), std::invalid_argument);
    CHECK_THROWS_AS(hamming_code(8), std::invalid_argument);
}

TEST_CASE("golay code") {
    BlockCode g = golay_code();
    CHECK(g.length() == 23);
    CHECK(g.dimension() == 12);
    PointSet zs = g.zero_set();
    CHECK(zs.size() == 2048);

    // zero-set is exactly the 3-sphere around zero
    for (const auto& w : zs) CHECK(w.weight() <= 3);

    DistDist dd = distance_distribution(zs);
    std::vector<std::int64_t> expect{2048, 11684, 128524, 226688, 1133440, 672980, 2018940};
    for (unsigned i = 0; i <= 6; ++i) CHECK(dd.coeffs[i] == expect[i]);
    for (unsigned i = 7; i <= 23; ++i) CHECK(dd.coeffs[i] == 0);

    // weight <= 3 vectors decode to zero (perfect, covering radius 3)
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        Word v(23);
        unsigned w = static_cast<unsigned>(rng() % 4);
        while (v.weight() < w) v.set_coord(1 + static_cast<unsigned>(rng() % 23), true);
        CHECK(g.decode(v) == Word(23));
    }

    // minimum distance 7: check over all 4096 codewords
    unsigned min_weight = 23;
    for (std::uint64_t msg = 1; msg < 4096; ++msg) {
        Word c = encode(g, msg, nullptr);
        min_weight = std::min(min_weight, c.weight());
    }
    CHECK(min_weight == 7);
}

TEST_CASE("syndrome decoding of generator matrices") {
    // trivial code: identity generator, decoder is the identity
    std::vector<Word> rows;
    for (unsigned i = 1; i <= 4; ++i) {
        Word e(4);
        e.set_coord(i, true);
        rows.push_back(e);
    }
    BlockCode trivial = linear_code(rows);
    CHECK(trivial.zero_set().size() == 1);
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 20; ++rep) {
        Word v = sample_uniform(4, rng);
        CHECK(trivial.decode(v) == v);
    }

    // same code as hamming_code(3), loaded from the shipped generator file
    BlockCode from_file = load_generator_file(std::string(DATA_DIR) + "/codes/hamming_7_4.txt");
    CHECK(from_file.zero_set().to_string() == hamming_code(3).zero_set().to_string());

    BlockCode golay_file = load_generator_file(std::string(DATA_DIR) + "/codes/golay_23_12.txt");
    CHECK(distance_distribution(golay_file.zero_set()) ==
          distance_distribution(golay_code().zero_set()));

    // dependent rows are rejected
    std::vector<Word> dep{Word::from_bits(4, 0b1100), Word::from_bits(4, 0b0110),
                          Word::from_bits(4, 0b1010)};
    CHECK_THROWS_AS(linear_code(dep), std::invalid_argument);

    // oversized syndrome tables are rejected up front
    std::vector<Word> wide{Word::from_bits(30, 1)};
    CHECK_THROWS_AS(linear_code(wide), std::invalid_argument);
}

TEST_CASE("syndrome decode matches brute-force minimum distance") {
    // exhaustive: decode(v) is a codeword at minimal distance from v
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 5; ++rep) {
        unsigned n = 5 + static_cast<unsigned>(rng() % 5);  // up to 9
        unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        std::vector<Word> rows;
        // random independent rows (retry until independent)
        while (true) {
            rows.clear();
            for (unsigned i = 0; i < k; ++i) rows.push_back(sample_uniform(n, rng));
            try {
                linear_code(rows);
                break;
            } catch (const std::invalid_argument&) {}
        }
        BlockCode code = linear_code(rows);
        std::vector<Word> codewords;
        for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg)
            codewords.push_back(encode(code, msg, nullptr));
        for (std::uint64_t ve = 0; ve < (std::uint64_t{1} << n); ++ve) {
            Word v = Word::from_bits(n, ve);
            Word dec = code.decode(v);
            unsigned best = n + 1;
            bool is_codeword = false;
            for (const auto& c : codewords) {
                best = std::min(best, hamming_distance(v, c));
                if (c == dec) is_codeword = true;
            }
            CHECK(is_codeword);
            CHECK(hamming_distance(v, dec) == best);
        }
    }
}

TEST_CASE("coset-leader ties break toward the smaller integer encoding") {
    // repetition [4,1]: the weight-2 coset {1100, 0011, 1001, 0110, ...} pairs up;
    // each syndrome's leader must be the smallest integer among its min-weight class
    BlockCode rep = linear_code({Word::from_bits(4, 0b1111)});
    PointSet zs = rep.zero_set();
    CHECK(zs.size() == 8);
    for (const auto& leader : zs) {
        Word mate = leader ^ Word::from_bits(4, 0b1111);
        if (mate.weight() == leader.weight()) CHECK(leader.low64() < mate.low64());
        else CHECK(leader.weight() < mate.weight());
    }
}

TEST_CASE("translation invariance and hash labels") {
    BlockCode h4 = hamming_code(4);
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 10000; ++rep) {
        Word v = sample_uniform(15, rng);
        Word c = random_codeword(h4, rng);
        CHECK(h4.decode(v ^ c) == (h4.decode(v) ^ c));
        CHECK(h4.hash_label(v ^ c) == (h4.hash_label(v) ^ h4.hash_label(c)));
    }
    // decoder fixes codewords; labels are the information bits, message bit i
    // at label coordinate i+1
    for (int rep = 0; rep < 100; ++rep) {
        std::uint64_t msg = rng() & 0x7ff;
        Word c = encode(h4, msg, nullptr);
        CHECK(h4.decode(c) == c);
        Word expect(h4.dimension());
        for (unsigned i = 0; i < h4.dimension(); ++i)
            if ((msg >> i) & 1u) expect.set_coord(i + 1, true);
        CHECK(h4.hash_label(c) == expect);
    }
    CHECK_THROWS_AS(h4.hash_label(Word::from_bits(14, 0)), std::invalid_argument);
    CHECK_THROWS_AS(h4.decode(Word::from_bits(16, 0)), std::invalid_argument);
}

TEST_CASE("partition property: zero-set translates tile the cube") {
    for (const BlockCode& code :
         {hamming_code(3), projection_code(6, 3),
          load_generator_file(std::string(DATA_DIR) + "/codes/example_6_3.txt")}) {
        unsigned n = code.length(), k = code.dimension();
        PointSet zs = code.zero_set();
        std::set<std::uint64_t> covered;
        for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
            Word c = encode(code, msg, nullptr);
            for (const auto& z : zs) covered.insert((z ^ c).low64());
        }
        CHECK(covered.size() == (std::uint64_t{1} << n));
    }
}

TEST_CASE("concatenation") {
    BlockCode pp = concatenate(projection_code(4, 2), projection_code(3, 2));
    CHECK(pp.length() == 7);
    CHECK(pp.dimension() == 4);
    for (double gamma : {0.1, 0.3})
        CHECK(collision_probability(pp.zero_set_distribution(), gamma) ==
              doctest::Approx(std::pow(1 - gamma, 4)).epsilon(1e-12));

    // product rule P^(h,h') = P^h P^h', two routes: convolution vs materialized
    BlockCode mix = concatenate(hamming_code(3), projection_code(3, 1));
    DistDist via_conv = mix.zero_set_distribution();
    DistDist via_pairs = distance_distribution(mix.zero_set());
    CHECK(via_conv == via_pairs);
    for (double gamma : {0.05, 0.25, 0.45}) {
        double lhs = collision_probability(via_conv, gamma);
        double rhs = collision_probability(hamming_code(3).zero_set_distribution(), gamma) *
                     collision_probability(projection_code(3, 1).zero_set_distribution(), gamma);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }

    // golay x P_{1,1}: zero-set is the 3-sphere with a zero appended
    BlockCode gp = concatenate(golay_code(), projection_code(1, 1));
    CHECK(gp.zero_set().size() == 2048);
    DistDist gd = golay_code().zero_set_distribution();
    DistDist gpd = gp.zero_set_distribution();
    for (unsigned i = 0; i <= 6; ++i) CHECK(gpd.coeffs[i] == gd.coeffs[i]);

    // the error exponent of the concatenation lies strictly between the parts'
    double gamma = 0.3;
    double e_golay = error_exponent(collision_probability(gd, gamma), 23);
    double e_proj = -(12.0 / 23.0) * std::log2(1 - gamma);
    BlockCode big = concatenate(golay_code(), projection_code(23, 12));
    double e_cat = error_exponent(collision_probability(big.zero_set_distribution(), gamma), 46);
    CHECK(e_cat > std::min(e_golay, e_proj));
    CHECK(e_cat < std::max(e_golay, e_proj));
}

TEST_CASE("code spec parsing") {
    CHECK(parse_code_spec("golay").label() == "golay");
    CHECK(parse_code_spec("projection:23,12").dimension() == 12);
    CHECK(parse_code_spec("hamming:4").length() == 15);
    CHECK(parse_code_spec("concat:hamming:3+projection:2,1").length() == 9);
    CHECK(parse_code_spec("concat:hamming:3+projection:2,1").dimension() == 5);
    CHECK_THROWS(parse_code_spec("nonsense"));
    CHECK_THROWS(parse_code_spec("projection:12"));
    CHECK_THROWS(parse_code_spec("file:/no/such/file"));
}

TEST_CASE("generator file format errors") {
    std::istringstream bad_header("x y\n");
    CHECK_THROWS_AS(read_generator_matrix(bad_header), std::invalid_argument);
    std::istringstream short_row("4 2\n1000\n01\n");
    CHECK_THROWS_AS(read_generator_matrix(short_row), std::invalid_argument);
    std::istringstream bad_char("4 1\n10a0\n");
    CHECK_THROWS_AS(read_generator_matrix(bad_char), std::invalid_argument);
    std::istringstream ok("4 2\n1000\n0100\n");
    CHECK(read_generator_matrix(ok).size() == 2);
}
