#include "dalc/linear_codes.hpp"

#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace dalc {

namespace {

unsigned poly_degree(std::uint64_t g) { return g == 0 ? 0 : 63 - static_cast<unsigned>(std::countl_zero(g)); }

BitSeq cyclic_remainder(const BitSeq& x, std::uint64_t generator) {
    const unsigned m = poly_degree(generator);
    const std::uint64_t top = std::uint64_t{1} << m;
    std::uint64_t r = 0;
    auto shift_in = [&](bool b) {
        r = (r << 1) | (b ? 1u : 0u);
        if (r & top) r ^= generator;
    };
    for (std::size_t i = 0; i < x.size(); ++i) shift_in(x[i]);
    for (unsigned i = 0; i < m; ++i) shift_in(false);

    BitSeq z(m);
    for (unsigned j = 0; j < m; ++j) z.set(j, (r >> (m - 1 - j)) & 1u);
    return z;
}

}  // namespace

std::size_t CodeSpec::parity_length() const {
    switch (kind) {
        case CodeKind::None: return 0;
        case CodeKind::Crc16:
        case CodeKind::Bch: return poly_degree(generator);
        case CodeKind::InterleavedParity:
        case CodeKind::BlockParity: return group_count;
    }
    return 0;
}

void CodeSpec::validate() const {
    switch (kind) {
        case CodeKind::None: return;
        case CodeKind::Crc16:
        case CodeKind::Bch:
            if (poly_degree(generator) < 1 || poly_degree(generator) > 62 || (generator & 1u) == 0)
                throw std::invalid_argument("CodeSpec: generator must have degree in [1, 62] and a constant term");
            return;
        case CodeKind::InterleavedParity:
        case CodeKind::BlockParity:
            if (group_count < 1) throw std::invalid_argument("CodeSpec: group_count must be at least 1");
            return;
    }
}

std::string to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::None: return "none";
        case CodeKind::Crc16: return "crc16";
        case CodeKind::Bch: return "bch";
        case CodeKind::InterleavedParity: return "ldpc16";
        case CodeKind::BlockParity: return "bpc16";
    }
    return "none";
}

CodeKind parse_code_kind(std::string_view name) {
    if (name == "none") return CodeKind::None;
    if (name == "crc16") return CodeKind::Crc16;
    if (name == "bch") return CodeKind::Bch;
    if (name == "ldpc16") return CodeKind::InterleavedParity;
    if (name == "bpc16") return CodeKind::BlockParity;
    throw std::invalid_argument("unknown code kind: " + std::string(name));
}

CodeSpec default_spec(CodeKind kind) {
    switch (kind) {
        case CodeKind::None: return CodeSpec::none();
        case CodeKind::Crc16: return CodeSpec::crc16();
        case CodeKind::Bch: return CodeSpec::bch();
        case CodeKind::InterleavedParity: return CodeSpec::interleaved();
        case CodeKind::BlockParity: return CodeSpec::block();
    }
    return CodeSpec::none();
}

BitSeq parity(const BitSeq& x, const CodeSpec& spec) {
    spec.validate();
    if (spec.kind == CodeKind::None) return {};
    if (x.empty()) throw std::invalid_argument("parity: empty source");

    switch (spec.kind) {
        case CodeKind::Crc16:
        case CodeKind::Bch: return cyclic_remainder(x, spec.generator);
        case CodeKind::InterleavedParity: {
            BitSeq z(spec.group_count);
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i]) z.flip(i % spec.group_count);
            return z;
        }
        case CodeKind::BlockParity: {
            // Earliest (n mod g) segments take one extra bit.
            const std::size_t g = spec.group_count;
            const std::size_t base = x.size() / g, extra = x.size() % g;
            BitSeq z(g);
            std::size_t pos = 0;
            for (std::size_t j = 0; j < g; ++j) {
                const std::size_t len = base + (j < extra ? 1 : 0);
                bool acc = false;
                for (std::size_t k = 0; k < len; ++k) acc ^= x[pos + k];
                z.set(j, acc);
                pos += len;
            }
            return z;
        }
        case CodeKind::None: break;
    }
    return {};
}

bool verify(const BitSeq& x, const CodeSpec& spec, const BitSeq& z) {
    if (z.size() != spec.parity_length()) throw std::invalid_argument("verify: parity length does not match code");
    if (spec.kind == CodeKind::None) return true;
    return parity(x, spec) == z;
}

double undetected_flip_rate(const CodeSpec& spec, std::size_t n, std::size_t weight, std::size_t samples,
                            std::uint64_t seed) {
    if (weight < 1 || weight > n) throw std::invalid_argument("undetected_flip_rate: weight must lie in [1, n]");
    if (samples == 0) return 0.0;
    if (spec.kind == CodeKind::None) return 1.0;

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(n);
    const BitSeq zero_parity(spec.parity_length());
    std::size_t undetected = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        // Partial Fisher-Yates picks a uniform weight-w support.
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        BitSeq e(n);
        for (std::size_t k = 0; k < weight; ++k) {
            const std::size_t j = k + static_cast<std::size_t>(rng() % (n - k));
            std::swap(idx[k], idx[j]);
            e.set(idx[k], true);
        }
        // Linearity: x ^ e passes iff parity(e) == 0.
        if (parity(e, spec) == zero_parity) ++undetected;
    }
    return static_cast<double>(undetected) / static_cast<double>(samples);
}

}  // namespace dalc
