#pragma once

#include <cstddef>
#include <cstdint>

#include "dalc/bitseq.hpp"
#include "dalc/interval.hpp"

namespace dalc {

// Quantized probabilities in force for one symbol position. The scaled
// fields are the same values as integers at quant_bits fractional bits.
struct SymbolProbs {
    UFrac p0;
    UFrac p1;
    std::uint64_t p0_scaled = 0;
    std::uint64_t p1_scaled = 0;
};

class CodecParams {
  public:
    // Validates and derives the quantized base probabilities (p0, 1 - p0) and
    // their overlapped counterparts p^alpha. Throws std::invalid_argument on
    // p0 outside (0,1), alpha outside [0,1], t > n or quant_bits outside [8,32].
    static CodecParams make(std::size_t n, double p0, double alpha, std::size_t t,
                            ArithMode mode = ArithMode::Exact, unsigned quant_bits = kDefaultQuantBits);

    std::size_t n() const { return n_; }
    double p0_real() const { return p0_real_; }
    double alpha() const { return alpha_; }
    std::size_t t() const { return t_; }
    unsigned quant_bits() const { return quant_bits_; }
    ArithMode mode() const { return mode_; }

    const SymbolProbs& base() const { return base_; }
    const SymbolProbs& overlapped() const { return overlapped_; }
    // Overlapped probabilities for i < n - t, base probabilities for the tail.
    const SymbolProbs& probs_at(std::size_t i) const { return i + t_ < n_ ? overlapped_ : base_; }

    CodecParams with_alpha(double alpha) const { return make(n_, p0_real_, alpha, t_, mode_, quant_bits_); }
    CodecParams with_mode(ArithMode mode) const { return make(n_, p0_real_, alpha_, t_, mode, quant_bits_); }

  private:
    CodecParams() = default;

    std::size_t n_ = 0;
    double p0_real_ = 0.5;
    double alpha_ = 1.0;
    std::size_t t_ = 0;
    unsigned quant_bits_ = kDefaultQuantBits;
    ArithMode mode_ = ArithMode::Exact;
    SymbolProbs base_;
    SymbolProbs overlapped_;
};

struct EncodeResult {
    BitSeq codeword;
    Interval final_interval;
    std::size_t rate_bits = 0;
};

// Overlapped subdivision: symbol 0 keeps [L, L + p0eff*W), symbol 1 keeps
// [L + (1 - p1eff)*W, H).
Interval child_interval(const Interval& parent, bool symbol, const UFrac& p0eff, const UFrac& p1eff);

// Shortest-rule codeword: with k = ceil(-log2(width)) + 1, the k-bit dyadic
// ceil(low * 2^k) / 2^k, leading zeros kept.
BitSeq select_codeword(const Interval& interval);

// Throws std::invalid_argument if x.size() != params.n().
EncodeResult encode(const BitSeq& x, const CodecParams& params);

// encode() with the overlap disabled.
EncodeResult classic_ac_encode(const BitSeq& x, const CodecParams& params);

// Fixed-precision (64-bit) coder shared by the encoder and the decoder. The
// interval is tracked as an integer width in a frame of kFrameBits fractional
// bits; whenever the width falls below kRenormFloor it is doubled and the
// frame shifts by one codeword bit.
namespace fixed64 {

inline constexpr unsigned kFrameBits = 62;
inline constexpr std::uint64_t kFrameOne = std::uint64_t{1} << kFrameBits;
inline constexpr std::uint64_t kRenormFloor = std::uint64_t{1} << 32;

struct Split {
    std::uint64_t zero_width;   // zero child is [0, zero_width) relative to low
    std::uint64_t one_offset;   // one child is [one_offset, width)
    std::uint64_t one_width;
};

// Truncating split; the one child is widened if truncation would leave a gap
// between the two children.
inline Split split(std::uint64_t width, const SymbolProbs& probs, unsigned quant_bits) {
    using u128 = unsigned __int128;
    const auto w0 = static_cast<std::uint64_t>((u128{width} * probs.p0_scaled) >> quant_bits);
    auto w1 = static_cast<std::uint64_t>((u128{width} * probs.p1_scaled) >> quant_bits);
    if (w0 + w1 < width) w1 = width - w0;
    return {w0, width - w1, w1};
}

}  // namespace fixed64

}  // namespace dalc
