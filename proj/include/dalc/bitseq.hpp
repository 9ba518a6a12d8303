#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dalc {

// Ordered sequence of binary symbols. Sources, side information, parity
// and codewords all use this type.
class BitSeq {
  public:
    BitSeq() = default;
    explicit BitSeq(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}
    BitSeq(std::initializer_list<int> bits);

    // Parses '0'/'1' characters; whitespace is skipped, anything else throws
    // std::invalid_argument.
    static BitSeq parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }
    void push_back(bool v) { bits_.push_back(v ? 1 : 0); }
    void reserve(std::size_t n) { bits_.reserve(n); }

    std::string to_string() const;
    std::size_t count_ones() const;

    // XOR of equal-length sequences.
    BitSeq operator^(const BitSeq& other) const;

    friend bool operator==(const BitSeq&, const BitSeq&) = default;
    // Lexicographic, '0' < '1', shorter prefix first.
    friend std::strong_ordering operator<=>(const BitSeq& a, const BitSeq& b) {
        return a.bits_ <=> b.bits_;
    }

  private:
    std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const BitSeq& a, const BitSeq& b);

}  // namespace dalc
