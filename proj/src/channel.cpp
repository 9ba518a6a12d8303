#include "dalc/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dalc {

namespace {

constexpr std::uint64_t kSourceStream = 0x5352435f53524331ULL;
constexpr std::uint64_t kFlipStream = 0x464c49505f535452ULL;

double uniform53(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void SourceModel::validate() const {
    if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("SourceModel: p0 must lie in (0, 1)");
    if (!(epsilon >= 0.0 && epsilon < 0.5)) throw std::invalid_argument("SourceModel: epsilon must lie in [0, 0.5)");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

BitSeq gen_source(std::size_t n, const SourceModel& model) {
    model.validate();
    std::mt19937_64 rng(splitmix64(model.seed ^ kSourceStream));
    BitSeq x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, !(uniform53(rng) < model.p0));
    return x;
}

BitSeq gen_side_info(const BitSeq& x, const SourceModel& model) {
    model.validate();
    std::mt19937_64 rng(splitmix64(model.seed ^ kFlipStream));
    BitSeq y = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (uniform53(rng) < model.epsilon) y.flip(i);
    return y;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double joint_entropy(double p0, double epsilon) { return binary_entropy(p0) + binary_entropy(epsilon); }

}  // namespace dalc
