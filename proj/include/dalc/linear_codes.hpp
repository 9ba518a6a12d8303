#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dalc/bitseq.hpp"

namespace dalc {

enum class CodeKind { None, Crc16, Bch, InterleavedParity, BlockParity };

// Which systematic code produces the parity side information Z = X G^T.
// Cyclic codes carry their generator polynomial as a bitmask including the
// leading term; parity families carry their group count.
struct CodeSpec {
    CodeKind kind = CodeKind::None;
    std::uint64_t generator = 0;
    std::size_t group_count = 16;

    static CodeSpec none() { return {}; }
    // x^16 + x^15 + x^13 + 1
    static CodeSpec crc16() { return {CodeKind::Crc16, 0x1A001, 0}; }
    // x^15 + x^13 + x^10 + x^6 + x^4 + x^2 + 1
    static CodeSpec bch() { return {CodeKind::Bch, 0xA455, 0}; }
    static CodeSpec interleaved(std::size_t groups = 16) { return {CodeKind::InterleavedParity, 0, groups}; }
    static CodeSpec block(std::size_t groups = 16) { return {CodeKind::BlockParity, 0, groups}; }

    // Number of parity bits m.
    std::size_t parity_length() const;
    // Throws std::invalid_argument on a malformed spec.
    void validate() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

// CLI names: none, crc16, bch, ldpc16, bpc16.
std::string to_string(CodeKind kind);
CodeKind parse_code_kind(std::string_view name);
CodeSpec default_spec(CodeKind kind);

// Parity bits Z for source x. Cyclic codes: remainder of x(D) * D^m modulo
// the generator with x[0] the highest-order coefficient, emitted most
// significant first. Throws std::invalid_argument on empty x for any kind but
// None.
BitSeq parity(const BitSeq& x, const CodeSpec& spec);

// true iff parity(x, spec) == z. A z of the wrong length throws
// std::invalid_argument.
bool verify(const BitSeq& x, const CodeSpec& spec, const BitSeq& z);

// Monte-Carlo fraction of uniformly drawn weight-w error patterns of length n
// whose parity is zero (undetected by verification).
double undetected_flip_rate(const CodeSpec& spec, std::size_t n, std::size_t weight, std::size_t samples,
                            std::uint64_t seed);

}  // namespace dalc
