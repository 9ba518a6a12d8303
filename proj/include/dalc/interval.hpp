#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "dalc/bitseq.hpp"

namespace dalc {

// Exact dyadic rational in [0, 1], stored as numerator / 2^exponent in
// canonical form (numerator odd, or zero with exponent 0). Every value the
// coder produces is dyadic because probabilities are quantized to a fixed
// number of fractional bits before any interval arithmetic.
class UFrac {
  public:
    UFrac() = default;

    // Throws std::domain_error if num / 2^exp > 1.
    UFrac(mpz_class num, std::uint64_t exp);
    static UFrac from_scaled(std::uint64_t num, unsigned bits) { return UFrac(mpz_class(num), bits); }
    static UFrac zero() { return UFrac(); }
    static UFrac one() { return UFrac(mpz_class(1), 0); }

    const mpz_class& numerator() const { return num_; }
    std::uint64_t exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }

    // num * 2^(bits - exp); requires exp <= bits and a result that fits in 64 bits.
    std::uint64_t scaled(unsigned bits) const;

    double to_double() const;
    long double to_long_double() const;
    // Exact decimal expansion (always finite for a dyadic value).
    std::string to_decimal() const;

    friend UFrac operator+(const UFrac& a, const UFrac& b);
    // Requires a >= b.
    friend UFrac operator-(const UFrac& a, const UFrac& b);
    friend UFrac operator*(const UFrac& a, const UFrac& b);

    friend bool operator==(const UFrac& a, const UFrac& b) { return a.exp_ == b.exp_ && a.num_ == b.num_; }
    friend std::strong_ordering operator<=>(const UFrac& a, const UFrac& b);

  private:
    void canonicalize();

    mpz_class num_{0};
    std::uint64_t exp_ = 0;
};

// Half-open [low, high) with 0 <= low < high <= 1.
class Interval {
  public:
    Interval() : low_(UFrac::zero()), high_(UFrac::one()) {}
    // Throws std::domain_error unless low < high.
    Interval(UFrac low, UFrac high);

    static Interval unit() { return Interval(); }

    const UFrac& low() const { return low_; }
    const UFrac& high() const { return high_; }
    UFrac width() const { return high_ - low_; }

    friend bool operator==(const Interval&, const Interval&) = default;

  private:
    UFrac low_;
    UFrac high_;
};

enum class ArithMode { Exact, Fixed64 };

inline constexpr unsigned kDefaultQuantBits = 30;

// Nearest multiple of 2^-bits to p, clamped to [2^-bits, 1 - 2^-bits].
// Throws std::invalid_argument for p outside (0, 1) or bits outside [8, 62].
UFrac quantize_prob(double p, unsigned bits);

// quantize_prob(p^alpha, bits); alpha == 1 returns p unchanged. The result is
// never smaller than p. Throws std::invalid_argument for alpha outside [0, 1].
UFrac overlap_prob(const UFrac& p, double alpha, unsigned bits);

// Sum of bits[i] * 2^-(i+1).
UFrac dyadic_value(const BitSeq& bits);

inline bool contains(const Interval& interval, const UFrac& v) {
    return interval.low() <= v && v < interval.high();
}

}  // namespace dalc
