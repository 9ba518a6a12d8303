#include "dalc/bitseq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dalc {

BitSeq::BitSeq(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("BitSeq: symbol must be 0 or 1");
        bits_.push_back(static_cast<std::uint8_t>(b));
    }
}

BitSeq BitSeq::parse(std::string_view text) {
    BitSeq out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            out.push_back(ch == '1');
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument(std::string("BitSeq: unexpected character '") + ch + "'");
        }
    }
    return out;
}

std::string BitSeq::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

std::size_t BitSeq::count_ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitSeq BitSeq::operator^(const BitSeq& other) const {
    if (other.size() != size()) throw std::invalid_argument("BitSeq: xor of unequal lengths");
    BitSeq out(size());
    for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] ^ other.bits_[i];
    return out;
}

std::size_t hamming_distance(const BitSeq& a, const BitSeq& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: unequal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

}  // namespace dalc
