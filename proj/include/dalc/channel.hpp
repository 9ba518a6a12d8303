#pragma once

#include <cstddef>
#include <cstdint>

#include "dalc/bitseq.hpp"

namespace dalc {

// i.i.d. Bernoulli source with P(0) = p0, observed at the decoder through a
// binary symmetric channel with crossover epsilon.
struct SourceModel {
    double p0 = 0.5;
    double epsilon = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

// Streams: the source and the channel flips are driven by two std::mt19937_64
// generators whose seeds are splitmix64(seed ^ stream_id). Uniforms take the
// top 53 bits of each draw, so sequences are identical on every platform.
BitSeq gen_source(std::size_t n, const SourceModel& model);
BitSeq gen_side_info(const BitSeq& x, const SourceModel& model);

std::uint64_t splitmix64(std::uint64_t x);

// Bits per symbol; 0 log 0 = 0.
double binary_entropy(double p);
// H(X) + H(Y|X) for the Bernoulli/BSC model.
double joint_entropy(double p0, double epsilon);

}  // namespace dalc
