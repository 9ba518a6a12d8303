#include "dalc/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace dalc {

UFrac::UFrac(mpz_class num, std::uint64_t exp) : num_(std::move(num)), exp_(exp) {
    if (num_ < 0) throw std::domain_error("UFrac: negative numerator");
    canonicalize();
    const bool above_one =
        exp_ == 0 ? num_ > 1 : mpz_sizeinbase(num_.get_mpz_t(), 2) > exp_;
    if (above_one) throw std::domain_error("UFrac: value exceeds 1");
}

void UFrac::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    const mp_bitcnt_t tz = mpz_scan1(num_.get_mpz_t(), 0);
    const std::uint64_t shift = std::min<std::uint64_t>(tz, exp_);
    if (shift > 0) {
        mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
        exp_ -= shift;
    }
}

std::uint64_t UFrac::scaled(unsigned bits) const {
    if (exp_ > bits) throw std::domain_error("UFrac::scaled: value not representable at this precision");
    mpz_class v = num_;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), bits - exp_);
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw std::overflow_error("UFrac::scaled: overflow");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

double UFrac::to_double() const { return static_cast<double>(to_long_double()); }

long double UFrac::to_long_double() const {
    if (num_ == 0) return 0.0L;
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, num_.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp2 - static_cast<long>(exp_)));
}

std::string UFrac::to_decimal() const {
    if (exp_ == 0) return num_ == 0 ? "0" : "1";
    // num / 2^e == num * 5^e / 10^e
    mpz_class five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, exp_);
    const mpz_class scaled_value = num_ * five;
    std::string digits = scaled_value.get_str();
    if (digits.size() <= exp_) digits.insert(0, exp_ - digits.size() + 1, '0');
    digits.insert(digits.size() - exp_, ".");
    return digits;
}

namespace {

// Brings both numerators to the larger exponent.
std::pair<mpz_class, mpz_class> aligned(const UFrac& a, const UFrac& b, std::uint64_t& e) {
    e = std::max(a.exponent(), b.exponent());
    mpz_class x = a.numerator(), y = b.numerator();
    if (e > a.exponent()) mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), e - a.exponent());
    if (e > b.exponent()) mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), e - b.exponent());
    return {std::move(x), std::move(y)};
}

}  // namespace

UFrac operator+(const UFrac& a, const UFrac& b) {
    std::uint64_t e = 0;
    auto [x, y] = aligned(a, b, e);
    return UFrac(x + y, e);
}

UFrac operator-(const UFrac& a, const UFrac& b) {
    std::uint64_t e = 0;
    auto [x, y] = aligned(a, b, e);
    if (x < y) throw std::domain_error("UFrac: negative difference");
    return UFrac(x - y, e);
}

UFrac operator*(const UFrac& a, const UFrac& b) {
    return UFrac(a.numerator() * b.numerator(), a.exponent() + b.exponent());
}

std::strong_ordering operator<=>(const UFrac& a, const UFrac& b) {
    if (a.exp_ == b.exp_) {
        const int c = cmp(a.num_, b.num_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    std::uint64_t e = 0;
    auto [x, y] = aligned(a, b, e);
    const int c = cmp(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Interval::Interval(UFrac low, UFrac high) : low_(std::move(low)), high_(std::move(high)) {
    if (!(low_ < high_)) throw std::domain_error("Interval: requires low < high");
}

namespace {

UFrac quantize_clamped(long double p, unsigned bits) {
    const long double scaled = std::ldexp(p, static_cast<int>(bits));
    long long q = std::llroundl(scaled);
    const long long top = (1LL << bits) - 1;
    if (q < 1) q = 1;
    if (q > top) q = top;
    return UFrac::from_scaled(static_cast<std::uint64_t>(q), bits);
}

}  // namespace

UFrac quantize_prob(double p, unsigned bits) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantize_prob: p must lie in (0, 1)");
    if (bits < 8 || bits > 62) throw std::invalid_argument("quantize_prob: bits must lie in [8, 62]");
    return quantize_clamped(static_cast<long double>(p), bits);
}

UFrac overlap_prob(const UFrac& p, double alpha, unsigned bits) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("overlap_prob: alpha must lie in [0, 1]");
    if (bits < 8 || bits > 62) throw std::invalid_argument("overlap_prob: bits must lie in [8, 62]");
    if (alpha == 1.0) return p;
    UFrac q = quantize_clamped(std::pow(p.to_long_double(), static_cast<long double>(alpha)), bits);
    return q < p ? p : q;
}

UFrac dyadic_value(const BitSeq& bits) {
    mpz_class num = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) mpz_setbit(num.get_mpz_t(), bits.size() - 1 - i);
    }
    return UFrac(std::move(num), bits.size());
}

}  // namespace dalc
