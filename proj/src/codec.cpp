#include "dalc/codec.hpp"

#include <stdexcept>
#include <vector>

namespace dalc {

namespace {

SymbolProbs make_probs(const UFrac& p0, const UFrac& p1, unsigned bits) {
    return {p0, p1, p0.scaled(bits), p1.scaled(bits)};
}

}  // namespace

CodecParams CodecParams::make(std::size_t n, double p0, double alpha, std::size_t t, ArithMode mode,
                              unsigned quant_bits) {
    if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("CodecParams: p0 must lie in (0, 1)");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("CodecParams: alpha must lie in [0, 1]");
    if (t > n) throw std::invalid_argument("CodecParams: t must not exceed n");
    if (quant_bits < 8 || quant_bits > 32) throw std::invalid_argument("CodecParams: quant_bits must lie in [8, 32]");

    CodecParams p;
    p.n_ = n;
    p.p0_real_ = p0;
    p.alpha_ = alpha;
    p.t_ = t;
    p.quant_bits_ = quant_bits;
    p.mode_ = mode;

    const UFrac q0 = quantize_prob(p0, quant_bits);
    const UFrac q1 = UFrac::one() - q0;
    p.base_ = make_probs(q0, q1, quant_bits);

    const UFrac o0 = overlap_prob(q0, alpha, quant_bits);
    UFrac o1 = overlap_prob(q1, alpha, quant_bits);
    // Rounding both overlapped values down could open a gap between the children.
    if (o1 < UFrac::one() - o0) o1 = UFrac::one() - o0;
    p.overlapped_ = make_probs(o0, o1, quant_bits);
    return p;
}

Interval child_interval(const Interval& parent, bool symbol, const UFrac& p0eff, const UFrac& p1eff) {
    const UFrac w = parent.width();
    if (!symbol) return Interval(parent.low(), parent.low() + p0eff * w);
    return Interval(parent.low() + (UFrac::one() - p1eff) * w, parent.high());
}

BitSeq select_codeword(const Interval& interval) {
    const UFrac w = interval.width();
    // w = num / 2^e with num odd, so ceil(-log2 w) = e - (bitlen(num) - 1).
    const std::uint64_t bitlen = mpz_sizeinbase(w.numerator().get_mpz_t(), 2);
    const std::uint64_t k = w.exponent() - (bitlen - 1) + 1;

    const UFrac& low = interval.low();
    mpz_class v = low.numerator();
    if (k >= low.exponent()) {
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k - low.exponent());
    } else {
        mpz_cdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), low.exponent() - k);
    }

    BitSeq out(k);
    for (std::uint64_t i = 0; i < k; ++i) out.set(i, mpz_tstbit(v.get_mpz_t(), k - 1 - i));
    return out;
}

namespace {

Interval encode_exact(const BitSeq& x, const CodecParams& params) {
    Interval cur = Interval::unit();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const SymbolProbs& pr = params.probs_at(i);
        cur = child_interval(cur, x[i], pr.p0, pr.p1);
    }
    return cur;
}

// Low end kept as an emitted bit prefix plus a kFrameBits-wide register that
// may carry into the prefix.
Interval encode_fixed(const BitSeq& x, const CodecParams& params) {
    using namespace fixed64;
    std::vector<std::uint8_t> head;
    std::uint64_t low = 0;
    std::uint64_t width = kFrameOne;
    const unsigned q = params.quant_bits();

    auto carry = [&head] {
        std::size_t j = head.size();
        while (j > 0 && head[j - 1] == 1) head[--j] = 0;
        if (j == 0) throw std::logic_error("fixed64 encoder: carry out of the unit interval");
        head[j - 1] = 1;
    };

    for (std::size_t i = 0; i < x.size(); ++i) {
        const Split s = split(width, params.probs_at(i), q);
        if (x[i]) {
            low += s.one_offset;
            width = s.one_width;
            if (low >= kFrameOne) {
                low -= kFrameOne;
                carry();
            }
        } else {
            width = s.zero_width;
        }
        while (width < kRenormFloor) {
            width <<= 1;
            low <<= 1;
            head.push_back(static_cast<std::uint8_t>(low >> kFrameBits));
            low &= kFrameOne - 1;
        }
    }

    const std::uint64_t shift = head.size();
    mpz_class lo = 0;
    for (std::size_t j = 0; j < head.size(); ++j)
        if (head[j]) mpz_setbit(lo.get_mpz_t(), kFrameBits + shift - 1 - j);
    mpz_class reg(static_cast<unsigned long>(low));
    static_assert(sizeof(unsigned long) == 8);
    lo += reg;
    mpz_class hi = lo + mpz_class(static_cast<unsigned long>(width));
    return Interval(UFrac(lo, kFrameBits + shift), UFrac(hi, kFrameBits + shift));
}

}  // namespace

EncodeResult encode(const BitSeq& x, const CodecParams& params) {
    if (x.size() != params.n()) throw std::invalid_argument("encode: source length does not match params.n");
    EncodeResult r;
    r.final_interval = params.mode() == ArithMode::Exact ? encode_exact(x, params) : encode_fixed(x, params);
    r.codeword = select_codeword(r.final_interval);
    r.rate_bits = r.codeword.size();
    return r;
}

EncodeResult classic_ac_encode(const BitSeq& x, const CodecParams& params) {
    return encode(x, params.with_alpha(1.0));
}

}  // namespace dalc
