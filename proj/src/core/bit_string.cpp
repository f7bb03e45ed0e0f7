#include "advlab/core/bit_string.hpp"

#include <algorithm>

#include "advlab/core/errors.hpp"

namespace advlab {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitString BitString::from_hex(std::string_view hex, std::size_t width) {
    if (hex.size() != (width + 3) / 4)
        throw MalformedAdvice("hex length " + std::to_string(hex.size()) + " does not match width " +
                              std::to_string(width));
    BitString out(width);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        const int v = hex_value(hex[d]);
        if (v < 0) throw MalformedAdvice("bad hex digit in advice");
        for (int b = 0; b < 4; ++b) {
            const bool bit = (v >> (3 - b)) & 1;
            const std::size_t pos = 4 * d + static_cast<std::size_t>(b);
            if (pos < width)
                out.set(pos, bit);
            else if (bit)
                throw MalformedAdvice("nonzero padding in hex advice");
        }
    }
    return out;
}

BitString BitString::from_binary(std::string_view binary) {
    BitString out;
    for (char c : binary) {
        if (c != '0' && c != '1') throw MalformedAdvice("bad binary digit");
        out.append(c == '1');
    }
    return out;
}

void BitString::append_uint(const BigInt& value, std::size_t width) {
    if (value < 0 || bit_length(value) > width)
        throw InvalidInput("value " + value.str() + " does not fit in " + std::to_string(width) + " bits");
    for (std::size_t i = width; i-- > 0;) append(boost::multiprecision::bit_test(value, i));
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

bool BitString::all_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::string BitString::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t d = 0; d < (bits_.size() + 3) / 4; ++d) {
        int v = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t pos = 4 * d + b;
            v = (v << 1) | (pos < bits_.size() ? bits_[pos] : 0);
        }
        out.push_back(digits[v]);
    }
    return out;
}

std::string BitString::to_binary() const {
    std::string out;
    for (auto b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

bool BitReader::read_bit() {
    if (pos_ >= bits_->width()) throw MalformedAdvice("advice ended early");
    return (*bits_)[pos_++];
}

BigInt BitReader::read_uint(std::size_t width) {
    BigInt value = 0;
    for (std::size_t i = 0; i < width; ++i) {
        value <<= 1;
        if (read_bit()) value |= 1;
    }
    return value;
}

std::size_t BitReader::read_small(std::size_t width) {
    return read_uint(width).convert_to<std::size_t>();
}

namespace {

struct SelfDelimitingShape {
    std::size_t value_bits;   // l
    std::size_t length_bits;  // j
};

SelfDelimitingShape self_delimiting_shape(const BigInt& n) {
    if (n < 1) throw InvalidInput("self-delimiting code needs n >= 1");
    const std::size_t l = std::max<std::size_t>(1, ceil_log2(n));
    const std::size_t j = std::max<std::size_t>(1, ceil_log2(BigInt(l)));
    return {l, j};
}

}  // namespace

void append_self_delimiting(BitString& out, const BigInt& n) {
    const auto [l, j] = self_delimiting_shape(n);
    const std::size_t stored = l - 1;
    for (std::size_t i = j; i-- > 0;) {
        out.append(((stored >> i) & 1) != 0);
        out.append(i != 0);
    }
    out.append_uint(n - 1, l);
}

BigInt read_self_delimiting(BitReader& in) {
    std::size_t stored = 0;
    std::size_t pairs = 0;
    bool more = true;
    while (more) {
        if (++pairs > 16) throw MalformedAdvice("self-delimiting length prefix too long");
        stored = (stored << 1) | (in.read_bit() ? 1 : 0);
        more = in.read_bit();
    }
    return in.read_uint(stored + 1) + 1;
}

std::size_t self_delimiting_length(const BigInt& n) {
    const auto [l, j] = self_delimiting_shape(n);
    return l + 2 * j;
}

}  // namespace advlab
