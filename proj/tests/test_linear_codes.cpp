#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "dalc/linear_codes.hpp"

using namespace dalc;

namespace {

BitSeq random_bits(std::mt19937_64& rng, std::size_t n) {
    BitSeq x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1);
    return x;
}

const CodeSpec kAllKinds[] = {CodeSpec::crc16(), CodeSpec::bch(), CodeSpec::interleaved(), CodeSpec::block()};

// GF(2) remainder by schoolbook division on explicit coefficient vectors,
// highest degree first; independent of the shift-register implementation.
BitSeq long_division(const BitSeq& x, const std::vector<int>& g) {
    const std::size_t m = g.size() - 1;
    std::vector<int> r;
    for (std::size_t i = 0; i < x.size(); ++i) r.push_back(x[i]);
    r.resize(x.size() + m, 0);
    for (std::size_t i = 0; i + m < r.size(); ++i)
        if (r[i])
            for (std::size_t j = 0; j <= m; ++j) r[i + j] ^= g[j];
    BitSeq z(m);
    for (std::size_t j = 0; j < m; ++j) z.set(j, r[x.size() + j]);
    return z;
}

const std::vector<int> kCrcCoeffs{1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
const std::vector<int> kBchCoeffs{1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1};

}  // namespace

TEST_CASE("parity lengths") {
    CHECK(CodeSpec::none().parity_length() == 0);
    CHECK(CodeSpec::crc16().parity_length() == 16);
    CHECK(CodeSpec::bch().parity_length() == 15);
    CHECK(CodeSpec::interleaved().parity_length() == 16);
    CHECK(CodeSpec::block().parity_length() == 16);
}

TEST_CASE("crc16 and bch follow polynomial long division") {
    // Frozen from the schoolbook division below.
    CHECK(parity(BitSeq::parse("1010"), CodeSpec::crc16()).to_string() == "0010000000001101");
    CHECK(parity(BitSeq::parse("1010"), CodeSpec::bch()).to_string() == "010001010101000");

    std::mt19937_64 rng(1);
    for (int k = 0; k < 300; ++k) {
        const BitSeq x = random_bits(rng, 1 + rng() % 700);
        CHECK(parity(x, CodeSpec::crc16()) == long_division(x, kCrcCoeffs));
        CHECK(parity(x, CodeSpec::bch()) == long_division(x, kBchCoeffs));
    }
}

TEST_CASE("parity families with one bit per group") {
    const BitSeq x = BitSeq::parse("1010001010100010");
    CHECK(parity(x, CodeSpec::interleaved()).to_string() == "1010001010100010");
    CHECK(parity(x, CodeSpec::block()).to_string() == "1010001010100010");

    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        const BitSeq y = random_bits(rng, 16);
        CHECK(parity(y, CodeSpec::interleaved()) == parity(y, CodeSpec::block()));
    }
}

TEST_CASE("block parity gives the remainder to the earliest segments") {
    // n = 18, 16 groups: segments 0 and 1 hold two bits, the rest one.
    BitSeq x(18);
    x.set(1, true);  // segment 0
    x.set(3, true);  // segment 1
    x.set(4, true);  // segment 2
    CHECK(parity(x, CodeSpec::block()).to_string() == "1110000000000000");
    // Interleaved: bit 17 joins group 1.
    BitSeq y(18);
    y.set(17, true);
    CHECK(parity(y, CodeSpec::interleaved()).to_string() == "0100000000000000");
    // Shorter than the group count: trailing segments are empty.
    CHECK(parity(BitSeq::parse("111"), CodeSpec::block()).to_string() == "1110000000000000");
}

TEST_CASE("zero source gives zero parity") {
    for (const CodeSpec& spec : kAllKinds)
        for (std::size_t n : {1u, 16u, 37u, 600u}) CHECK(parity(BitSeq(n), spec) == BitSeq(spec.parity_length()));
}

TEST_CASE("parity is linear") {
    std::mt19937_64 rng(3);
    for (const CodeSpec& spec : kAllKinds) {
        for (int k = 0; k < 500; ++k) {
            const std::size_t n = 1 + rng() % 650;
            const BitSeq a = random_bits(rng, n), b = random_bits(rng, n);
            CHECK((parity(a ^ b, spec) == (parity(a, spec) ^ parity(b, spec))));
        }
    }
}

TEST_CASE("verify") {
    const BitSeq x = BitSeq::parse("1010");
    CHECK(verify(x, CodeSpec::crc16(), parity(x, CodeSpec::crc16())));
    CHECK_FALSE(verify(x, CodeSpec::crc16(), BitSeq(16)));
    CHECK(verify(x, CodeSpec::none(), BitSeq{}));
    CHECK_THROWS_AS(verify(x, CodeSpec::crc16(), BitSeq(15)), std::invalid_argument);
    CHECK_THROWS_AS(parity(BitSeq{}, CodeSpec::crc16()), std::invalid_argument);

    std::mt19937_64 rng(4);
    for (const CodeSpec& spec : kAllKinds) {
        for (int k = 0; k < 10000; ++k) {
            const BitSeq y = random_bits(rng, 1 + rng() % 64);
            REQUIRE(verify(y, spec, parity(y, spec)));
        }
    }
}

TEST_CASE("code kind names") {
    for (CodeKind k : {CodeKind::None, CodeKind::Crc16, CodeKind::Bch, CodeKind::InterleavedParity,
                       CodeKind::BlockParity})
        CHECK(parse_code_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_code_kind("ldpc"), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec({CodeKind::Crc16, 0x1A000, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::block(0).validate(), std::invalid_argument);
}

TEST_CASE("undetected_flip_rate") {
    CHECK(undetected_flip_rate(CodeSpec::interleaved(), 16, 1, 1000, 1) == 0.0);
    for (std::size_t w = 1; w <= 4; ++w) CHECK(undetected_flip_rate(CodeSpec::bch(), 15, w, 20000, w) == 0.0);

    // Exhaustive count over the C(32,2) = 496 weight-2 patterns.
    std::size_t undetected = 0, total = 0;
    for (std::size_t i = 0; i < 32; ++i) {
        for (std::size_t j = i + 1; j < 32; ++j) {
            BitSeq e(32);
            e.set(i, true);
            e.set(j, true);
            ++total;
            if (parity(e, CodeSpec::block()) == BitSeq(16)) ++undetected;
        }
    }
    CHECK(total == 496);
    CHECK(undetected == 16);
    const double exact = 16.0 / 496.0;
    const double sigma = std::sqrt(exact * (1 - exact) / 1e5);
    CHECK(std::abs(undetected_flip_rate(CodeSpec::block(), 32, 2, 100000, 9) - exact) < 4 * sigma);
    CHECK_THROWS_AS(undetected_flip_rate(CodeSpec::block(), 8, 9, 10, 1), std::invalid_argument);
}
