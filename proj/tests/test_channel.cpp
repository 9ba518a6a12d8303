#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "dalc/channel.hpp"

using namespace dalc;

namespace {

double zero_fraction(const BitSeq& x) {
    return 1.0 - static_cast<double>(x.count_ones()) / static_cast<double>(x.size());
}

double three_sigma(double p, std::size_t n) { return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

}  // namespace

TEST_CASE("splitmix64 reference outputs") {
    // First outputs of the reference splitmix64 generator seeded with 0.
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("source statistics") {
    const std::size_t n = 100000;
    for (double p0 : {0.5, 0.1, 0.9, 0.999}) {
        const BitSeq x = gen_source(n, {p0, 0.0, 42});
        CHECK(x.size() == n);
        CHECK(std::abs(zero_fraction(x) - p0) <= three_sigma(p0, n));
    }
}

TEST_CASE("side information flips") {
    const std::size_t n = 100000;
    const SourceModel zero{0.5, 0.0, 3};
    const BitSeq x = gen_source(n, zero);
    CHECK(gen_side_info(x, zero) == x);

    const SourceModel m{0.5, 0.1, 3};
    const double flips = static_cast<double>(hamming_distance(gen_side_info(x, m), x)) / static_cast<double>(n);
    CHECK(std::abs(flips - 0.1) <= three_sigma(0.1, n));
}

TEST_CASE("determinism and stream independence") {
    const SourceModel a{0.3, 0.05, 77};
    CHECK(gen_source(600, a) == gen_source(600, a));
    const BitSeq x = gen_source(600, a);
    CHECK(gen_side_info(x, a) == gen_side_info(x, a));

    const SourceModel b{0.3, 0.2, 77};
    CHECK(gen_source(600, b) == x);
    CHECK(gen_source(600, {0.3, 0.05, 78}) != x);

    // A prefix of a longer block is the shorter block.
    const BitSeq longer = gen_source(1000, a);
    for (std::size_t i = 0; i < 600; ++i) REQUIRE(longer[i] == x[i]);
}

TEST_CASE("entropies") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    // -0.1 log2 0.1 - 0.9 log2 0.9
    CHECK(binary_entropy(0.1) == doctest::Approx(0.4689955935892812).epsilon(1e-14));
    CHECK(joint_entropy(0.5, 0.0) == 1.0);
    CHECK(joint_entropy(0.5, 0.1) == doctest::Approx(1.4689955935892812).epsilon(1e-14));
    CHECK(joint_entropy(0.1, 0.1) == doctest::Approx(0.9379911871785624).epsilon(1e-14));
    CHECK_THROWS_AS(binary_entropy(1.5), std::invalid_argument);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(gen_source(4, {0.0, 0.1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_source(4, {1.0, 0.1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_side_info(BitSeq(4), {0.5, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gen_side_info(BitSeq(4), {0.5, -0.1, 1}), std::invalid_argument);
}
