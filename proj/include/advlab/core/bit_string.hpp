#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "advlab/core/rational.hpp"

namespace advlab {

// A fixed sequence of bits. Serialization is MSB-first: bit 0 is the high
// bit of the first hex digit, and the final digit is zero-padded.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t width) : bits_(width, 0) {}

    static BitString from_hex(std::string_view hex, std::size_t width);
    static BitString from_binary(std::string_view binary);

    std::size_t width() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool bit) { bits_[i] = bit ? 1 : 0; }

    void append(bool bit) { bits_.push_back(bit ? 1 : 0); }
    // Writes value in exactly `width` bits, most significant first.
    void append_uint(const BigInt& value, std::size_t width);
    void append(const BitString& other);

    bool all_zero() const;

    std::string to_hex() const;
    std::string to_binary() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Sequential reader; reading past the end raises MalformedAdvice.
class BitReader {
public:
    explicit BitReader(const BitString& bits) : bits_(&bits) {}

    bool read_bit();
    BigInt read_uint(std::size_t width);
    std::size_t read_small(std::size_t width);
    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return bits_->width() - pos_; }

private:
    const BitString* bits_;
    std::size_t pos_ = 0;
};

// Self-delimiting code for n >= 1. With l = max(1, ceil(log n)) and
// j = max(1, ceil(log l)), writes l - 1 in j bits as (bit, more) pairs and
// then n - 1 in l bits: l + 2j bits in total.
void append_self_delimiting(BitString& out, const BigInt& n);
BigInt read_self_delimiting(BitReader& in);
std::size_t self_delimiting_length(const BigInt& n);

}  // namespace advlab
